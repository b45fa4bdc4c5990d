#include "fgm/trace.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace fgm {

namespace {

void write_ids(std::ostream& out, const std::vector<NodeId>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << '|';
    out << ids[i];
  }
}

std::vector<NodeId> parse_ids(std::string_view field) {
  std::vector<NodeId> out;
  std::size_t pos = 0;
  while (pos < field.size()) {
    auto bar = field.find('|', pos);
    if (bar == std::string_view::npos) bar = field.size();
    NodeId id = 0;
    auto res = std::from_chars(field.data() + pos, field.data() + bar, id);
    if (res.ec != std::errc{}) {
      throw std::runtime_error("trace: unparseable id list");
    }
    out.push_back(id);
    pos = bar + 1;
  }
  return out;
}

}  // namespace

bool GenTrace::contains(NodeId arrival, NodeId candidate) const {
  const auto& pn = records.at(arrival).pnbr;
  return std::binary_search(pn.begin(), pn.end(), candidate);
}

void GenTrace::write(std::ostream& out) const {
  for (const auto& r : records) {
    out << r.node << ',' << r.k << ',';
    write_ids(out, r.pnbr);
    out << ',';
    write_ids(out, r.accepted);
    out << '\n';
  }
}

void GenTrace::write(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  write(f);
}

GenTrace GenTrace::read(std::istream& in) {
  GenTrace t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string_view v = line;
    std::size_t c1 = v.find(',');
    std::size_t c2 = v.find(',', c1 + 1);
    std::size_t c3 = v.find(',', c2 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
        c3 == std::string_view::npos) {
      throw std::runtime_error("trace line " + std::to_string(lineno) +
                               ": expected 4 fields");
    }
    TraceRecord r;
    std::from_chars(v.data(), v.data() + c1, r.node);
    std::from_chars(v.data() + c1 + 1, v.data() + c2, r.k);
    r.pnbr = parse_ids(v.substr(c2 + 1, c3 - c2 - 1));
    r.accepted = parse_ids(v.substr(c3 + 1));
    t.records.push_back(std::move(r));
  }
  return t;
}

GenTrace GenTrace::read(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  return read(f);
}

}  // namespace fgm
