#include "fgm/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "fgm/rng.hpp"

namespace fgm {

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("gen_er: p must be in [0, 1]");
  }
  Graph g(n);
  if (p == 0.0 || n < 2) {
    g.finalize();
    return g;
  }
  Rng rng(seed);
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (p == 1.0) {
    for (NodeId u = 0; u + 1 < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    g.finalize();
    return g;
  }
  // geometric skipping over the linearized pair index
  const double log_q = std::log1p(-p);
  double idx = -1.0;
  for (;;) {
    double u;
    do {
      u = rng.uniform();
    } while (u <= 0.0);
    idx += 1.0 + std::floor(std::log(u) / log_q);
    if (idx >= static_cast<double>(pairs)) break;
    // invert pair index -> (row, col)
    const auto e = static_cast<std::uint64_t>(idx);
    const double nn = static_cast<double>(n);
    auto row = static_cast<std::uint64_t>(std::max(
        0.0, nn - 0.5 -
                 std::sqrt((nn - 0.5) * (nn - 0.5) -
                           2.0 * static_cast<double>(e))));
    if (row >= n - 1) row = n - 2;
    auto row_start = row * (2 * n - row - 1) / 2;
    while (row_start > e) {
      --row;
      row_start = row * (2 * n - row - 1) / 2;
    }
    while (row + 1 < n && (row + 1) * (2 * n - row - 2) / 2 <= e) {
      ++row;
      row_start = row * (2 * n - row - 1) / 2;
    }
    const auto col = row + 1 + (e - row_start);
    g.add_edge(static_cast<NodeId>(row), static_cast<NodeId>(col));
  }
  g.finalize();
  return g;
}

Graph gen_small_world(std::size_t n, std::uint32_t k_ring, double p_rw,
                      std::uint64_t seed) {
  if (k_ring % 2 != 0) {
    throw std::invalid_argument("gen_small_world: k_ring must be even");
  }
  if (k_ring >= n) {
    throw std::invalid_argument("gen_small_world: k_ring must be < n");
  }
  Rng rng(seed);
  Graph g(n);
  // ring lattice first, then per-edge rewiring of the far endpoint
  std::set<std::pair<NodeId, NodeId>> present;
  auto key = [](NodeId a, NodeId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (std::uint32_t j = 1; j <= k_ring / 2; ++j) {
      const NodeId v = static_cast<NodeId>((u + j) % n);
      edges.emplace_back(u, v);
      present.insert(key(u, v));
    }
  }
  for (auto& [u, v] : edges) {
    if (rng.uniform() >= p_rw) continue;
    // draw a fresh far endpoint, keeping the edge if no legal target
    // appears within a bounded number of attempts
    for (int attempt = 0; attempt < 64; ++attempt) {
      const NodeId w = static_cast<NodeId>(rng.below(n));
      if (w == u || present.count(key(u, w))) continue;
      present.erase(key(u, v));
      present.insert(key(u, w));
      v = w;
      break;
    }
  }
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  g.finalize();
  return g;
}

BaResult gen_ba(std::size_t n, std::uint32_t m_attach, std::uint64_t seed,
                bool record_trace) {
  if (m_attach < 1 || m_attach >= n) {
    throw std::invalid_argument("gen_ba: need 1 <= m_attach < n");
  }
  Rng rng(seed);
  BaResult res;
  res.graph = Graph(n);
  if (record_trace) res.trace.records.reserve(n);
  std::vector<NodeId> endpoints;  // degree-proportional sampling pool
  endpoints.reserve(2 * m_attach * (n - m_attach));
  for (NodeId t = 0; t < n; ++t) {
    std::vector<NodeId> targets;
    if (t >= m_attach) {
      if (endpoints.empty()) {
        // first arrival: the seed nodes still have degree zero
        for (NodeId s = 0; s < m_attach; ++s) targets.push_back(s);
      } else {
        std::unordered_set<NodeId> chosen;
        while (chosen.size() < m_attach) {
          chosen.insert(endpoints[rng.below(endpoints.size())]);
        }
        targets.assign(chosen.begin(), chosen.end());
        std::sort(targets.begin(), targets.end());
      }
      for (NodeId j : targets) {
        res.graph.add_edge(t, j);
        endpoints.push_back(t);
        endpoints.push_back(j);
      }
    }
    if (record_trace) {
      res.trace.records.push_back(
          TraceRecord{t, m_attach, targets, targets});
    }
  }
  res.graph.finalize();
  return res;
}

ConfigurationResult gen_configuration(std::vector<std::uint32_t> degrees,
                                      std::uint64_t seed, bool auto_repair) {
  Rng rng(seed);
  std::uint64_t sum = 0;
  for (auto d : degrees) sum += d;
  if (sum % 2 != 0) {
    if (!auto_repair) {
      throw std::invalid_argument(
          "gen_configuration: degree sum must be even");
    }
    ++degrees[rng.below(degrees.size())];
    ++sum;
  }
  std::vector<NodeId> stubs;
  stubs.reserve(sum);
  for (NodeId u = 0; u < degrees.size(); ++u) {
    for (std::uint32_t j = 0; j < degrees[u]; ++j) stubs.push_back(u);
  }
  // Fisher-Yates, then pair consecutive stubs
  for (std::size_t i = stubs.size(); i > 1; --i) {
    std::swap(stubs[i - 1], stubs[rng.below(i)]);
  }
  ConfigurationResult res;
  res.graph = Graph(degrees.size());
  res.raw_edges = stubs.size() / 2;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    const NodeId u = stubs[i], v = stubs[i + 1];
    if (u == v) {
      ++res.self_loops_removed;
      continue;
    }
    if (!res.graph.add_edge(u, v)) ++res.parallel_removed;
  }
  res.graph.finalize();
  return res;
}

std::vector<std::uint32_t> powerlaw_degree_sequence(std::size_t n,
                                                    double exponent,
                                                    double mean_target,
                                                    std::uint64_t seed) {
  if (exponent <= 2.0) {
    throw std::invalid_argument(
        "powerlaw_degree_sequence: exponent must be > 2 for a finite mean");
  }
  if (mean_target <= 0.0) {
    throw std::invalid_argument(
        "powerlaw_degree_sequence: mean_target must be positive");
  }
  // continuous Pareto with x_min set from the target mean, rounded down
  const double x_min = mean_target * (exponent - 2.0) / (exponent - 1.0);
  Rng rng(seed);
  std::vector<std::uint32_t> degs(n);
  const double cap = static_cast<double>(n - 1);
  for (auto& d : degs) {
    double u;
    do {
      u = rng.uniform();
    } while (u >= 1.0);
    const double x =
        std::min(cap, x_min * std::pow(1.0 - u, -1.0 / (exponent - 1.0)));
    d = static_cast<std::uint32_t>(std::lround(x));
  }
  return degs;
}

}  // namespace fgm
