#include "fgm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "fgm/rng.hpp"

namespace fgm {

namespace {

using json = nlohmann::json;

struct OlsResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;
};

OlsResult weighted_ols(const std::vector<double>& x,
                       const std::vector<double>& y,
                       const std::vector<double>* w) {
  const std::size_t n = x.size();
  double sw = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = w ? (*w)[i] : 1.0;
    sw += wi;
    sx += wi * x[i];
    sy += wi * y[i];
    sxx += wi * x[i] * x[i];
    sxy += wi * x[i] * y[i];
  }
  OlsResult res;
  const double denom = sw * sxx - sx * sx;
  if (denom == 0.0) {
    res.slope = 0.0;
    res.intercept = sy / sw;
  } else {
    res.slope = (sw * sxy - sx * sy) / denom;
    res.intercept = (sy - res.slope * sx) / sw;
  }
  const double ymean = sy / sw;
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = w ? (*w)[i] : 1.0;
    const double pred = res.intercept + res.slope * x[i];
    ss_res += wi * (y[i] - pred) * (y[i] - pred);
    ss_tot += wi * (y[i] - ymean) * (y[i] - ymean);
  }
  res.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return res;
}

/// Deterministic parallel map: fn(i) writes only into slot i.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 1024) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Ordered neighbor pairs (v, w) of u with v ~ w: each triangle through
// u contributes 2.
std::uint64_t closed_pairs2(const Graph& g, NodeId u) {
  const auto& nu = g.neighbors(u);
  if (nu.size() < 2) return 0;
  std::uint64_t links = 0;
  for (NodeId v : nu) {
    const auto& nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] < nv[j]) {
        ++i;
      } else if (nu[i] > nv[j]) {
        ++j;
      } else {
        ++links;
        ++i;
        ++j;
      }
    }
  }
  return links;
}

double local_clustering(const Graph& g, NodeId u) {
  const std::size_t d = g.degree(u);
  if (d < 2) return 0.0;
  return static_cast<double>(closed_pairs2(g, u)) /
         static_cast<double>(d * (d - 1));
}

std::vector<NodeId> largest_component(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::int32_t> comp(n, -1);
  std::int32_t next = 0;
  std::vector<std::uint64_t> sizes;
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    sizes.push_back(0);
    queue.push_back(s);
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      ++sizes.back();
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] == -1) {
          comp[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  const auto best = static_cast<std::int32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> nodes;
  for (NodeId u = 0; u < n; ++u) {
    if (comp[u] == best) nodes.push_back(u);
  }
  return nodes;
}

/// Sum of distances and reached count from one BFS source.
std::pair<std::uint64_t, std::uint64_t> bfs_sums(const Graph& g,
                                                 NodeId source,
                                                 std::vector<std::int32_t>&
                                                     dist) {
  std::fill(dist.begin(), dist.end(), -1);
  std::deque<NodeId> queue;
  dist[source] = 0;
  queue.push_back(source);
  std::uint64_t total = 0, reached = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    total += static_cast<std::uint64_t>(dist[u]);
    reached += dist[u] > 0 ? 1 : 0;
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return {total, reached};
}

}  // namespace

std::uint64_t DegreeHistogram::total_nodes() const {
  std::uint64_t s = isolated;
  for (const auto& [k, c] : counts) s += c;
  return s;
}

DegreeHistogram degree_histogram(const Graph& g) {
  std::map<std::uint32_t, std::uint64_t> by_degree;
  DegreeHistogram h;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto d = static_cast<std::uint32_t>(g.degree(u));
    if (d == 0) {
      ++h.isolated;
    } else {
      ++by_degree[d];
    }
  }
  h.counts.assign(by_degree.begin(), by_degree.end());
  return h;
}

PowerLawFit powerlaw_fit(const DegreeHistogram& h, std::uint32_t x_min) {
  std::vector<double> lx, ly;
  for (const auto& [k, c] : h.counts) {
    if (k >= x_min && c > 0) {
      lx.push_back(std::log10(static_cast<double>(k)));
      ly.push_back(std::log10(static_cast<double>(c)));
    }
  }
  if (lx.size() < 3) {
    throw std::invalid_argument(
        "powerlaw_fit: need at least 3 distinct degrees >= x_min");
  }
  const auto ols = weighted_ols(lx, ly, nullptr);
  return PowerLawFit{ols.slope, ols.intercept, ols.r2, x_min};
}

HeadTailSlopes head_tail_flatness(const DegreeHistogram& h,
                                  double split_quantile) {
  // split at the given quantile of the node (not distinct-degree)
  // distribution
  std::uint64_t nonzero = 0;
  for (const auto& [k, c] : h.counts) nonzero += c;
  if (nonzero == 0) throw std::invalid_argument("head_tail_flatness: no degrees");
  const auto target = static_cast<std::uint64_t>(
      split_quantile * static_cast<double>(nonzero));
  std::uint64_t seen = 0;
  std::uint32_t split = h.counts.back().first;
  for (const auto& [k, c] : h.counts) {
    seen += c;
    if (seen >= target) {
      split = k;
      break;
    }
  }
  std::vector<double> hx, hy, hw, tx, ty, tw;
  for (const auto& [k, c] : h.counts) {
    const double lx = std::log10(static_cast<double>(k));
    const double ly = std::log10(static_cast<double>(c));
    if (k <= split) {
      hx.push_back(lx);
      hy.push_back(ly);
      hw.push_back(static_cast<double>(c));
    } else {
      tx.push_back(lx);
      ty.push_back(ly);
      tw.push_back(static_cast<double>(c));
    }
  }
  if (hx.size() < 3 || tx.size() < 3) {
    throw std::invalid_argument(
        "head_tail_flatness: degenerate segment (need 3 points each side)");
  }
  HeadTailSlopes out;
  out.head = weighted_ols(hx, hy, &hw).slope;
  out.tail = weighted_ols(tx, ty, &tw).slope;
  out.split_degree = split;
  return out;
}

AnndCurve annd(const Graph& g) {
  const std::size_t n = g.node_count();
  AnndCurve curve;
  curve.per_node.assign(n, std::numeric_limits<double>::quiet_NaN());
  std::map<std::uint32_t, std::pair<double, std::uint64_t>> acc;
  for (NodeId u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    if (nu.empty()) continue;
    double sum = 0.0;
    for (NodeId v : nu) sum += static_cast<double>(g.degree(v));
    const double knn = sum / static_cast<double>(nu.size());
    curve.per_node[u] = knn;
    auto& slot = acc[static_cast<std::uint32_t>(nu.size())];
    slot.first += knn;
    slot.second += 1;
  }
  for (const auto& [k, slot] : acc) {
    curve.points.emplace_back(k, slot.first /
                                     static_cast<double>(slot.second));
  }
  return curve;
}

PowerLawFit annd_fit(const AnndCurve& curve) {
  std::vector<double> lx, ly;
  for (const auto& [k, v] : curve.points) {
    if (v > 0.0) {
      lx.push_back(std::log10(static_cast<double>(k)));
      ly.push_back(std::log10(v));
    }
  }
  if (lx.size() < 3) {
    throw std::invalid_argument("annd_fit: need at least 3 degree classes");
  }
  const auto ols = weighted_ols(lx, ly, nullptr);
  return PowerLawFit{ols.slope, ols.intercept, ols.r2, 1};
}

double clustering_avg(const Graph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  if (n == 0) return 0.0;
  std::vector<double> values(n, 0.0);
  parallel_for(n, threads, [&](std::size_t u) {
    values[u] = local_clustering(g, static_cast<NodeId>(u));
  });
  // sequential reduction keeps the result independent of thread count
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(n);
}

double clustering_avg_sampled(const Graph& g, std::size_t samples,
                              std::uint64_t seed, unsigned threads) {
  const std::size_t n = g.node_count();
  if (n == 0) return 0.0;
  if (samples >= n) return clustering_avg(g, threads);
  Rng rng(seed);
  std::vector<NodeId> picks(samples);
  for (auto& p : picks) p = static_cast<NodeId>(rng.below(n));
  std::vector<double> values(samples, 0.0);
  parallel_for(samples, threads, [&](std::size_t i) {
    values[i] = local_clustering(g, picks[i]);
  });
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(samples);
}

double global_transitivity(const Graph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  if (n == 0) return 0.0;
  std::vector<std::uint64_t> closed(n, 0), triples(n, 0);
  parallel_for(n, threads, [&](std::size_t u) {
    const std::uint64_t d = g.degree(static_cast<NodeId>(u));
    if (d < 2) return;
    closed[u] = closed_pairs2(g, static_cast<NodeId>(u));
    triples[u] = d * (d - 1);
  });
  std::uint64_t num = 0, den = 0;
  for (std::size_t u = 0; u < n; ++u) {
    num += closed[u];
    den += triples[u];
  }
  return den == 0 ? 0.0
                  : static_cast<double>(num) / static_cast<double>(den);
}

double global_transitivity_sampled(const Graph& g, std::size_t samples,
                                   std::uint64_t seed, unsigned threads) {
  const std::size_t n = g.node_count();
  if (n == 0) return 0.0;
  if (samples >= n) return global_transitivity(g, threads);
  Rng rng(seed);
  std::vector<NodeId> picks(samples);
  for (auto& p : picks) p = static_cast<NodeId>(rng.below(n));
  std::vector<std::uint64_t> closed(samples, 0), triples(samples, 0);
  parallel_for(samples, threads, [&](std::size_t i) {
    const std::uint64_t d = g.degree(picks[i]);
    if (d < 2) return;
    closed[i] = closed_pairs2(g, picks[i]);
    triples[i] = d * (d - 1);
  });
  std::uint64_t num = 0, den = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    num += closed[i];
    den += triples[i];
  }
  return den == 0 ? 0.0
                  : static_cast<double>(num) / static_cast<double>(den);
}

PathLengthResult avg_path_length(const Graph& g, std::size_t sample_sources,
                                 std::uint64_t seed, unsigned threads) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("avg_path_length: graph has no edges");
  }
  const auto component = largest_component(g);
  PathLengthResult res;
  res.component_size = component.size();
  res.exact = g.node_count() <= 2000;

  std::vector<NodeId> sources;
  if (res.exact) {
    sources = component;
  } else {
    Rng rng(seed);
    sources.reserve(sample_sources);
    for (std::size_t i = 0; i < sample_sources; ++i) {
      sources.push_back(component[rng.below(component.size())]);
    }
  }
  res.sources = sources.size();

  std::vector<std::pair<std::uint64_t, std::uint64_t>> sums(sources.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, sources.size()));
  std::vector<std::thread> pool;
  const std::size_t chunk = (sources.size() + workers - 1) / workers;
  auto run = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::int32_t> dist(g.node_count());
    for (std::size_t i = lo; i < hi; ++i) {
      sums[i] = bfs_sums(g, sources[i], dist);
    }
  };
  if (workers == 1) {
    run(0, sources.size());
  } else {
    for (unsigned t = 0; t < workers; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(sources.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0, pairs = 0;
  for (const auto& [t, r] : sums) {
    total += t;
    pairs += r;
  }
  if (pairs == 0) {
    throw std::runtime_error("avg_path_length: no reachable pairs");
  }
  res.value = static_cast<double>(total) / static_cast<double>(pairs);
  return res;
}

namespace {

json fit_to_json(const PowerLawFit& f) {
  return json{{"slope", f.slope},
              {"intercept", f.intercept},
              {"r2", f.r2},
              {"x_min", f.x_min}};
}

PowerLawFit fit_from_json(const json& j) {
  return PowerLawFit{j.at("slope"), j.at("intercept"), j.at("r2"),
                     j.at("x_min")};
}

}  // namespace

std::string MetricsReport::to_json() const {
  json j;
  j["schema_version"] = 1;
  j["n"] = n;
  j["m"] = m;
  json hist = json::array();
  for (const auto& [k, c] : histogram.counts) hist.push_back({k, c});
  j["degree_histogram"] = hist;
  j["isolated"] = histogram.isolated;
  j["tail_fit"] = tail_fit ? fit_to_json(*tail_fit) : json(nullptr);
  if (head_tail) {
    j["head_tail"] = {{"head", head_tail->head},
                      {"tail", head_tail->tail},
                      {"split_degree", head_tail->split_degree}};
  } else {
    j["head_tail"] = nullptr;
  }
  j["annd_fit"] = annd_powerlaw ? fit_to_json(*annd_powerlaw) : json(nullptr);
  json curve = json::array();
  for (const auto& [k, v] : annd_curve.points) curve.push_back({k, v});
  j["annd_curve"] = curve;
  j["clustering"] = clustering;
  j["transitivity"] = transitivity;
  j["clustering_sampled"] = clustering_sampled;
  j["path_length"] = {{"value", path_length.value},
                      {"exact", path_length.exact},
                      {"sources", path_length.sources},
                      {"component_size", path_length.component_size}};
  j["timings"] = {{"generation_seconds", generation_seconds},
                  {"metrics_seconds", metrics_seconds}};
  j["params"] =
      params_json.empty() ? json(nullptr) : json::parse(params_json);
  return j.dump(2);
}

MetricsReport MetricsReport::from_json(const std::string& text) {
  const json j = json::parse(text);
  MetricsReport r;
  r.n = j.at("n");
  r.m = j.at("m");
  for (const auto& pair : j.at("degree_histogram")) {
    r.histogram.counts.emplace_back(pair.at(0), pair.at(1));
  }
  r.histogram.isolated = j.at("isolated");
  if (!j.at("tail_fit").is_null()) r.tail_fit = fit_from_json(j["tail_fit"]);
  if (!j.at("head_tail").is_null()) {
    r.head_tail = HeadTailSlopes{j["head_tail"].at("head"),
                                 j["head_tail"].at("tail"),
                                 j["head_tail"].at("split_degree")};
  }
  if (!j.at("annd_fit").is_null()) {
    r.annd_powerlaw = fit_from_json(j["annd_fit"]);
  }
  for (const auto& pair : j.at("annd_curve")) {
    r.annd_curve.points.emplace_back(pair.at(0), pair.at(1));
  }
  r.clustering = j.at("clustering");
  r.transitivity = j.at("transitivity");
  r.clustering_sampled = j.at("clustering_sampled");
  r.path_length.value = j.at("path_length").at("value");
  r.path_length.exact = j.at("path_length").at("exact");
  r.path_length.sources = j.at("path_length").at("sources");
  r.path_length.component_size = j.at("path_length").at("component_size");
  r.generation_seconds = j.at("timings").at("generation_seconds");
  r.metrics_seconds = j.at("timings").at("metrics_seconds");
  if (!j.at("params").is_null()) r.params_json = j["params"].dump();
  return r;
}

MetricsReport assemble_report(const Graph& g, const MetricsOptions& opts) {
  MetricsReport r;
  r.n = g.node_count();
  r.m = g.edge_count();
  r.histogram = degree_histogram(g);
  try {
    r.tail_fit = powerlaw_fit(r.histogram, opts.x_min);
  } catch (const std::exception&) {
  }
  try {
    r.head_tail = head_tail_flatness(r.histogram, opts.split_quantile);
  } catch (const std::exception&) {
  }
  r.annd_curve = annd(g);
  try {
    r.annd_powerlaw = annd_fit(r.annd_curve);
  } catch (const std::exception&) {
  }
  if (opts.clustering_sample_above > 0 &&
      g.node_count() > opts.clustering_sample_above) {
    r.clustering = clustering_avg_sampled(g, opts.clustering_samples,
                                          opts.seed, opts.threads);
    r.transitivity = global_transitivity_sampled(g, opts.clustering_samples,
                                                 opts.seed, opts.threads);
    r.clustering_sampled = true;
  } else {
    r.clustering = clustering_avg(g, opts.threads);
    r.transitivity = global_transitivity(g, opts.threads);
  }
  if (g.edge_count() > 0) {
    r.path_length =
        avg_path_length(g, opts.path_sources, opts.seed, opts.threads);
  }
  return r;
}

void write_loglog_points(
    const std::string& path,
    const std::vector<std::pair<double, double>>& points) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  f.precision(12);
  for (const auto& [x, y] : points) {
    if (x > 0.0 && y > 0.0) {
      f << std::log10(x) << '\t' << std::log10(y) << '\n';
    }
  }
}

}  // namespace fgm
