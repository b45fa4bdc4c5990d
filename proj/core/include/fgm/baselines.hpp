#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgm/graph.hpp"
#include "fgm/trace.hpp"

namespace fgm {

/// Each unordered pair present independently with probability p.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

/// Watts-Strogatz ring lattice with per-edge rewiring. k_ring must be
/// even; edge count is exactly n * k_ring / 2 at any rewire
/// probability.
Graph gen_small_world(std::size_t n, std::uint32_t k_ring, double p_rw,
                      std::uint64_t seed);

struct BaResult {
  Graph graph;
  GenTrace trace;  // filled only when record_trace was requested
};

/// Preferential attachment: m_attach seed nodes, every later arrival
/// attaches to m_attach distinct existing nodes sampled proportionally
/// to degree (repeated-endpoint list). Edge count is exactly
/// m_attach * (n - m_attach).
BaResult gen_ba(std::size_t n, std::uint32_t m_attach, std::uint64_t seed,
                bool record_trace = false);

struct ConfigurationResult {
  Graph graph;           // simple graph after cleanup
  std::size_t raw_edges = 0;
  std::size_t self_loops_removed = 0;
  std::size_t parallel_removed = 0;
};

/// Stub matching over the given degree sequence; self-loops dropped
/// and parallel edges collapsed (counted in the result). An odd degree
/// sum is an error unless auto_repair bumps one random entry.
ConfigurationResult gen_configuration(std::vector<std::uint32_t> degrees,
                                      std::uint64_t seed,
                                      bool auto_repair = false);

/// Discrete power-law degree sequence (Pareto tail, exponent
/// `exponent`) with the cutoff chosen so the sample mean approaches
/// mean_target. Entries are capped at n - 1.
std::vector<std::uint32_t> powerlaw_degree_sequence(std::size_t n,
                                                    double exponent,
                                                    double mean_target,
                                                    std::uint64_t seed);

}  // namespace fgm
