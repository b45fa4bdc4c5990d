#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgm/graph.hpp"

namespace fgm {

struct DegreeHistogram {
  // (degree, count) pairs for degree >= 1, ascending by degree
  std::vector<std::pair<std::uint32_t, std::uint64_t>> counts;
  std::uint64_t isolated = 0;

  std::uint64_t total_nodes() const;
};

DegreeHistogram degree_histogram(const Graph& g);

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::uint32_t x_min = 1;
};

/// Ordinary least squares on (log10 k, log10 count) over degrees
/// >= x_min with nonzero count. Throws when fewer than 3 points
/// remain.
PowerLawFit powerlaw_fit(const DegreeHistogram& h, std::uint32_t x_min);

struct HeadTailSlopes {
  double head = 0.0;
  double tail = 0.0;
  std::uint32_t split_degree = 0;
};

/// Two independent count-weighted log-log fits below/above the split
/// degree. The split is the given quantile of the node degree
/// sequence (0.5 = median observed degree). Throws when either
/// segment has fewer than 3 points.
HeadTailSlopes head_tail_flatness(const DegreeHistogram& h,
                                  double split_quantile = 0.5);

struct AnndCurve {
  // (degree class k, mean neighbor degree over nodes of degree k)
  std::vector<std::pair<std::uint32_t, double>> points;
  std::vector<double> per_node;  // NaN for isolated nodes
};

/// Average nearest-neighbor degree aggregated per degree class;
/// isolated nodes excluded.
AnndCurve annd(const Graph& g);

/// Unweighted log-log OLS over the ANND curve points.
PowerLawFit annd_fit(const AnndCurve& curve);

/// Mean local clustering coefficient; nodes of degree < 2 contribute
/// 0. Requires a finalized graph. `threads` > 1 parallelizes the
/// per-node pass with a deterministic reduction.
double clustering_avg(const Graph& g, unsigned threads = 1);

/// Same metric estimated from `samples` seeded uniformly random nodes.
double clustering_avg_sampled(const Graph& g, std::size_t samples,
                              std::uint64_t seed, unsigned threads = 1);

/// Global transitivity: 3 * triangles / connected triples.
double global_transitivity(const Graph& g, unsigned threads = 1);

/// Transitivity ratio estimated from `samples` seeded random centers.
double global_transitivity_sampled(const Graph& g, std::size_t samples,
                                   std::uint64_t seed, unsigned threads = 1);

struct PathLengthResult {
  double value = 0.0;
  bool exact = false;
  std::size_t sources = 0;
  std::size_t component_size = 0;
};

/// Mean shortest-path length over the largest connected component.
/// Exact (all-source BFS) when n <= 2000, otherwise estimated from
/// sample_sources random sources. Throws on an edgeless graph.
PathLengthResult avg_path_length(const Graph& g, std::size_t sample_sources,
                                 std::uint64_t seed, unsigned threads = 1);

struct MetricsReport {
  std::size_t n = 0;
  std::size_t m = 0;
  DegreeHistogram histogram;
  std::optional<PowerLawFit> tail_fit;
  std::optional<HeadTailSlopes> head_tail;
  std::optional<PowerLawFit> annd_powerlaw;
  AnndCurve annd_curve;
  double clustering = 0.0;       // mean local coefficient
  double transitivity = 0.0;     // global 3*triangles/triples
  bool clustering_sampled = false;
  PathLengthResult path_length;
  double generation_seconds = 0.0;
  double metrics_seconds = 0.0;
  std::string params_json;  // effective configuration echo

  std::string to_json() const;
  static MetricsReport from_json(const std::string& text);
};

struct MetricsOptions {
  std::uint32_t x_min = 4;
  double split_quantile = 0.5;
  std::size_t path_sources = 500;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  // switch clustering to node sampling above this size (0 = never)
  std::size_t clustering_sample_above = 100000;
  std::size_t clustering_samples = 100000;
};

MetricsReport assemble_report(const Graph& g, const MetricsOptions& opts);

/// Two-column plot data (log10 x, log10 y), one pair per line.
void write_loglog_points(
    const std::string& path,
    const std::vector<std::pair<double, double>>& points);

}  // namespace fgm
