#include "fgm/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fgm {

bool Graph::add_edge(NodeId u, NodeId v) {
  if (u == v) {
    throw std::invalid_argument("self-loop rejected: node " +
                                std::to_string(u));
  }
  if (u >= adj_.size() || v >= adj_.size()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  // Scan the shorter list; during generation the arriving endpoint's
  // list is short, so this stays cheap.
  const auto& scan = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const NodeId other = adj_[u].size() <= adj_[v].size() ? v : u;
  if (std::find(scan.begin(), scan.end(), other) != scan.end()) {
    ++dups_;
    return false;
  }
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
  return true;
}

std::size_t Graph::degree(NodeId u) const {
  if (u >= adj_.size()) {
    throw std::out_of_range("node id out of range: " + std::to_string(u));
  }
  return adj_[u].size();
}

void Graph::finalize() {
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
  }
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(m_);
  for (NodeId u = 0; u < adj_.size(); ++u) {
    for (NodeId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Graph::write_edge_list(std::ostream& out) const {
  for (const auto& [u, v] : edges()) {
    out << u << ',' << v << '\n';
  }
}

void Graph::write_edge_list(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  write_edge_list(f);
}

Graph Graph::read_edge_list(std::istream& in) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  NodeId max_id = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": expected \"u,v\"");
    }
    NodeId u = 0, v = 0;
    auto r1 = std::from_chars(line.data(), line.data() + comma, u);
    auto r2 = std::from_chars(line.data() + comma + 1,
                              line.data() + line.size(), v);
    if (r1.ec != std::errc{} || r2.ec != std::errc{}) {
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": unparseable ids");
    }
    pairs.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  Graph g(pairs.empty() ? 0 : static_cast<std::size_t>(max_id) + 1);
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  g.finalize();
  return g;
}

Graph Graph::read_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  return read_edge_list(f);
}

}  // namespace fgm
