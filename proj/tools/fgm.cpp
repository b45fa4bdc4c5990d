// Command-line surface for the pipeline: cube synthesis, network
// generation, baseline generators, metrics, decay traces, and the
// proportional-time benchmark.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fgm/baselines.hpp"
#include "fgm/generator.hpp"
#include "fgm/graph.hpp"
#include "fgm/ingest.hpp"
#include "fgm/metrics.hpp"
#include "fgm/neighbors.hpp"
#include "fgm/trace.hpp"

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::string default_out_dir() {
  const char* env = std::getenv("FGM_OUT_DIR");
  return env && *env ? env : ".";
}

fs::path prepared(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ----------------------------------------------------------- schema flags

struct SchemaFlags {
  std::string order = "t";
  std::vector<std::string> geo = {"c1", "c2"};
  std::string influence = "infRt";
  bool raw = false;  // derive via affine map + min-max scaling
  double alpha = 1.0;
  double beta = 0.0;
  double scale_lo = 0.05;
  double scale_hi = 5.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--schema-order", order, "order column name");
    cmd->add_option("--schema-geo", geo,
                    "geographic column names (none for geo-free cubes)")
        ->expected(0, 64);
    cmd->add_option("--schema-influence", influence, "influence column name");
    cmd->add_flag("--schema-raw", raw,
                  "treat the influence column as a raw feature and min-max "
                  "scale it (default: preassigned values)");
    cmd->add_option("--schema-alpha", alpha, "affine factor for raw influence");
    cmd->add_option("--schema-beta", beta, "affine offset for raw influence");
    cmd->add_option("--schema-scale-lo", scale_lo, "influence range low end");
    cmd->add_option("--schema-scale-hi", scale_hi, "influence range high end");
  }

  fgm::CubeSchema build() const {
    fgm::CubeSchema s;
    s.order_column = order;
    for (const auto& g : geo) {
      if (!g.empty()) s.geo_columns.push_back(g);  // "" clears geography
    }
    s.influence.column = influence;
    s.influence.preassigned = !raw;
    s.influence.alpha = alpha;
    s.influence.beta = beta;
    s.influence.scale_lo = scale_lo;
    s.influence.scale_hi = scale_hi;
    return s;
  }

  json to_json() const {
    return json{{"order", order},          {"geo", geo},
                {"influence", influence},  {"raw", raw},
                {"alpha", alpha},          {"beta", beta},
                {"scale_lo", scale_lo},    {"scale_hi", scale_hi}};
  }
};

// -------------------------------------------------------- generator flags

struct GenFlags {
  fgm::GenParams params;
  std::string gamma_kind = "sqrt-product";
  std::string backend = "knn";
  std::string pnbr_file;
  fgm::LshParams lsh;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--eta", params.eta, "global edge scale");
    cmd->add_option("--theta", params.theta, "degree deviation exponent");
    cmd->add_option("--mu-t", params.mu_t, "order attribute weight");
    cmd->add_option("--mu-c", params.mu_c, "geographic attribute weight");
    cmd->add_option("--minkowski-p", params.minkowski_p,
                    "distance order (>= 1)");
    cmd->add_option("--gamma-kind", gamma_kind,
                    "acceptance map: sqrt-product, constant, always-one");
    cmd->add_option("--gamma-coeff", params.gamma_coeff,
                    "acceptance coefficient gamma_0");
    cmd->add_option("--k-floor", params.k_floor, "minimum candidate count");
    cmd->add_option("--seed", params.seed, "generation seed");
    cmd->add_option("--backend", backend,
                    "neighbor search: knn, lsh, precomputed");
    cmd->add_option("--pnbr-file", pnbr_file,
                    "candidate lists for the precomputed backend");
    cmd->add_option("--lsh-tables", lsh.tables, "LSH table count");
    cmd->add_option("--lsh-bits", lsh.bits, "initial hyperplanes per table");
  }

  json to_json() const {
    return json{{"eta", params.eta},
                {"theta", params.theta},
                {"mu_t", params.mu_t},
                {"mu_c", params.mu_c},
                {"minkowski_p", params.minkowski_p},
                {"gamma_kind", gamma_kind},
                {"gamma_coeff", params.gamma_coeff},
                {"k_floor", params.k_floor},
                {"seed", params.seed},
                {"backend", backend},
                {"pnbr_file", pnbr_file},
                {"lsh_tables", lsh.tables},
                {"lsh_bits", lsh.bits}};
  }
};

// ------------------------------------------------------------- synth-cube

struct SynthCubeCmd {
  std::size_t n = 0;
  std::string scenario = "fgm_p";
  std::uint64_t seed = 0;
  std::size_t geo_dim = 2;
  double lomax_mu = 1.0;
  double lomax_alpha = 3.0;
  std::string out_dir = default_out_dir();
  std::string out_name;

  void run() const {
    if (n == 0) throw CLI::ValidationError("--n must be positive");
    fgm::SynthCubeSpec spec;
    spec.n = n;
    spec.scenario = fgm::parse_scenario(scenario);
    spec.seed = seed;
    spec.geo_dim = geo_dim;
    spec.lomax_mu = lomax_mu;
    spec.lomax_alpha = lomax_alpha;
    const fgm::Cube cube = fgm::synth_cube(spec);
    std::string name = out_name;
    if (name.empty()) {
      name = "cube_" + scenario + "_n" + std::to_string(n) + "_seed" +
             std::to_string(seed) + ".csv";
    }
    const fs::path path = prepared(out_dir) / name;
    cube.write_csv(path.string());
    std::cout << path.string() << "\n";
  }
};

// --------------------------------------------------------------- generate

struct GenerateCmd {
  std::string cube_path;
  SchemaFlags schema;
  GenFlags gen;
  std::string out_dir = default_out_dir();
  std::string prefix = "run";
  bool no_trace = false;

  void run() const {
    const fgm::CubeSchema cs = schema.build();
    const fgm::Cube cube = fgm::load_cube(cube_path, cs);
    const auto attrs = fgm::cube_to_attrs(cube, cs);

    fgm::GenParams params = gen.params;
    params.gamma_kind = fgm::parse_gamma_kind(gen.gamma_kind);
    const fgm::BackendKind backend = fgm::parse_backend(gen.backend);

    std::unique_ptr<fgm::NeighborIndex> index;
    if (backend == fgm::BackendKind::kPrecomputed) {
      if (gen.pnbr_file.empty()) {
        throw CLI::ValidationError(
            "--backend precomputed requires --pnbr-file");
      }
      index = std::make_unique<fgm::PrecomputedIndex>(
          fgm::PrecomputedIndex::load(gen.pnbr_file, attrs.size()));
    } else {
      index = fgm::make_index(attrs, params, backend, gen.lsh);
    }

    fgm::GenerateOptions opts;
    opts.record_trace = !no_trace;
    const auto t0 = std::chrono::steady_clock::now();
    const fgm::GenResult result = fgm::generate(attrs, params, *index, opts);
    const double gen_s = seconds_since(t0);

    const fs::path dir = prepared(out_dir);
    const fs::path edges = dir / (prefix + "_edges.csv");
    const fs::path trace = dir / (prefix + "_trace.csv");
    const fs::path summary = dir / (prefix + "_summary.json");
    result.graph.write_edge_list(edges.string());
    if (opts.record_trace) result.trace.write(trace.string());

    json j;
    j["command"] = "generate";
    j["cube"] = cube_path;
    j["schema"] = schema.to_json();
    j["params"] = gen.to_json();
    j["n"] = result.graph.node_count();
    j["m"] = result.graph.edge_count();
    j["gamma_normalizer"] = fgm::gamma_normalizer(attrs);
    j["generation_seconds"] = gen_s;
    j["edges_file"] = edges.string();
    j["trace_file"] = opts.record_trace ? json(trace.string()) : json(nullptr);
    std::ofstream(summary) << j.dump(2) << "\n";
    std::cout << summary.string() << "\n";
  }
};

// ------------------------------------------------------ generate-baseline

struct BaselineCmd {
  std::string model;
  std::size_t n = 1000;
  double p = 0.01;
  std::uint32_t k_ring = 8;
  double p_rw = 0.1;
  std::uint32_t m_attach = 15;
  double exponent = 3.0;
  double mean_degree = 14.6;
  std::uint64_t seed = 0;
  bool trace = false;
  std::string out_dir = default_out_dir();
  std::string prefix = "baseline";

  void run() const {
    fgm::Graph g;
    json extra;
    fgm::GenTrace gen_trace;
    if (model == "er") {
      g = fgm::gen_er(n, p, seed);
    } else if (model == "sw") {
      g = fgm::gen_small_world(n, k_ring, p_rw, seed);
    } else if (model == "ba") {
      auto r = fgm::gen_ba(n, m_attach, seed, trace);
      g = std::move(r.graph);
      gen_trace = std::move(r.trace);
    } else if (model == "config") {
      auto degrees = fgm::powerlaw_degree_sequence(n, exponent, mean_degree,
                                                   seed);
      auto r = fgm::gen_configuration(std::move(degrees), seed,
                                      /*auto_repair=*/true);
      g = std::move(r.graph);
      extra["raw_edges"] = r.raw_edges;
      extra["self_loops_removed"] = r.self_loops_removed;
      extra["parallel_removed"] = r.parallel_removed;
    } else {
      throw CLI::ValidationError("--model must be er, sw, ba, or config");
    }
    g.finalize();

    const fs::path dir = prepared(out_dir);
    const fs::path edges = dir / (prefix + "_edges.csv");
    const fs::path summary = dir / (prefix + "_summary.json");
    g.write_edge_list(edges.string());
    if (trace && model == "ba") {
      gen_trace.write((dir / (prefix + "_trace.csv")).string());
    }
    json j;
    j["command"] = "generate-baseline";
    j["model"] = model;
    j["n"] = g.node_count();
    j["m"] = g.edge_count();
    j["seed"] = seed;
    j["params"] = {{"p", p},
                   {"k_ring", k_ring},
                   {"p_rw", p_rw},
                   {"m_attach", m_attach},
                   {"exponent", exponent},
                   {"mean_degree", mean_degree}};
    if (!extra.is_null()) j["configuration"] = extra;
    j["edges_file"] = edges.string();
    std::ofstream(summary) << j.dump(2) << "\n";
    std::cout << summary.string() << "\n";
  }
};

// ---------------------------------------------------------------- metrics

struct MetricsCmd {
  std::string edges_path;
  std::vector<std::string> merge;
  fgm::MetricsOptions opts;
  std::string out_dir = default_out_dir();
  std::string prefix = "metrics";

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
  }

  void run_merge() const {
    // Table-1-style comparison: one row per report
    std::printf("%-28s %8s %10s %10s %12s %8s\n", "report", "n", "m",
                "clustering", "transitivity", "apl");
    for (const auto& path : merge) {
      std::ifstream f(path);
      if (!f) throw CLI::ValidationError("cannot open report: " + path);
      std::stringstream ss;
      ss << f.rdbuf();
      const auto r = fgm::MetricsReport::from_json(ss.str());
      std::printf("%-28s %8zu %10zu %10.4f %12.4f %8.3f\n",
                  fs::path(path).stem().string().c_str(), r.n, r.m,
                  r.clustering, r.transitivity, r.path_length.value);
    }
  }

  void run() const {
    if (!merge.empty()) {
      run_merge();
      return;
    }
    if (edges_path.empty()) {
      throw CLI::ValidationError("need --edges or --merge");
    }
    fgm::Graph g = fgm::Graph::read_edge_list(edges_path);
    g.finalize();
    const auto t0 = std::chrono::steady_clock::now();
    fgm::MetricsReport report = fgm::assemble_report(g, opts);
    report.metrics_seconds = seconds_since(t0);

    const fs::path dir = prepared(out_dir);
    const fs::path report_path = dir / (prefix + "_report.json");
    std::ofstream(report_path) << report.to_json() << "\n";

    std::vector<std::pair<double, double>> degree_pts, annd_pts;
    for (const auto& [k, c] : report.histogram.counts) {
      degree_pts.emplace_back(k, static_cast<double>(c));
    }
    for (const auto& [k, v] : report.annd_curve.points) {
      annd_pts.emplace_back(k, v);
    }
    fgm::write_loglog_points((dir / (prefix + "_degree_loglog.txt")).string(),
                             degree_pts);
    fgm::write_loglog_points((dir / (prefix + "_annd_loglog.txt")).string(),
                             annd_pts);
    std::cout << report_path.string() << "\n";
  }
};

// ------------------------------------------------------------ decay-trace

struct DecayCmd {
  std::string trace_path;
  std::string cube_path;
  SchemaFlags schema;
  std::string gamma_kind = "sqrt-product";
  double gamma_coeff = fgm::GenParams{}.gamma_coeff;
  std::vector<std::uint32_t> gnodes;
  std::uint32_t top = 5;
  std::uint32_t window = 20;
  bool ba = false;
  std::uint32_t m_attach = 15;
  std::string out_dir = default_out_dir();
  std::string prefix = "decay";

  void run() const {
    const fgm::GenTrace trace = fgm::GenTrace::read(trace_path);
    const std::size_t n = trace.records.size();

    std::vector<std::uint32_t> selected = gnodes;
    if (selected.empty()) {
      // top-N by final degree, reconstructed from the trace
      std::vector<std::uint64_t> deg(n, 0);
      for (const auto& rec : trace.records) {
        for (fgm::NodeId j : rec.accepted) {
          ++deg[rec.node];
          ++deg[j];
        }
      }
      std::vector<std::uint32_t> order(n);
      std::iota(order.begin(), order.end(), 0u);
      std::sort(order.begin(), order.end(), [&](auto a, auto b) {
        return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
      });
      selected.assign(order.begin(),
                      order.begin() + std::min<std::size_t>(top, n));
    }
    for (auto id : selected) {
      if (id >= n) {
        throw CLI::ValidationError("gnode " + std::to_string(id) +
                                   " out of range (trace has " +
                                   std::to_string(n) + " arrivals)");
      }
    }

    std::optional<std::vector<fgm::NodeAttr>> attrs;
    std::optional<fgm::GammaFn> gamma;
    if (!ba) {
      if (cube_path.empty()) {
        throw CLI::ValidationError("need --cube for FGM traces (or --ba)");
      }
      const fgm::CubeSchema cs = schema.build();
      attrs = fgm::cube_to_attrs(fgm::load_cube(cube_path, cs), cs);
      gamma.emplace(fgm::parse_gamma_kind(gamma_kind), gamma_coeff,
                    fgm::gamma_normalizer(*attrs));
    }

    const fs::path dir = prepared(out_dir);
    for (auto id : selected) {
      const auto series =
          ba ? fgm::ba_attachment_series(trace, id, m_attach, window)
             : fgm::decay_probability_series(trace, *attrs, *gamma, id,
                                             window);
      const fs::path path =
          dir / (prefix + "_gnode" + std::to_string(id) + ".txt");
      std::ofstream f(path);
      f << "# offset\tprobability\n";
      f.precision(12);
      for (const auto& [offset, prob] : series) {
        f << offset << '\t' << prob << '\n';
      }
      std::cout << path.string() << "\n";
    }
  }
};

// ------------------------------------------------------------------ bench

struct BenchCmd {
  std::vector<std::size_t> scales = {1000, 2000, 5000, 10000};
  std::vector<std::string> models = {"fgm-lsh", "fgm-knn", "er", "sw", "ba",
                                     "config"};
  std::uint64_t seed = 3;
  std::string out_dir = default_out_dir();

  double run_cell(const std::string& model, std::size_t n) const {
    const auto t0 = std::chrono::steady_clock::now();
    if (model == "fgm-lsh" || model == "fgm-knn") {
      fgm::SynthCubeSpec spec;
      spec.n = n;
      spec.seed = seed;
      const fgm::Cube cube = fgm::synth_cube(spec);
      const auto schema = fgm::synth_cube_schema(spec.geo_dim);
      const auto attrs = fgm::cube_to_attrs(cube, schema);
      fgm::GenParams params;
      params.seed = seed;
      auto index = fgm::make_index(attrs, params,
                                   model == "fgm-lsh"
                                       ? fgm::BackendKind::kLsh
                                       : fgm::BackendKind::kExactKnn);
      const auto gen0 = std::chrono::steady_clock::now();
      fgm::GenerateOptions opts;
      opts.record_trace = false;
      fgm::generate(attrs, params, *index, opts);
      return seconds_since(gen0);
    }
    if (model == "er") {
      fgm::gen_er(n, 14.6 / static_cast<double>(n), seed);
    } else if (model == "sw") {
      fgm::gen_small_world(n, 8, 0.1, seed);
    } else if (model == "ba") {
      fgm::gen_ba(n, 15, seed);
    } else if (model == "config") {
      fgm::gen_configuration(
          fgm::powerlaw_degree_sequence(n, 3.0, 14.6, seed), seed,
          /*auto_repair=*/true);
    } else {
      throw CLI::ValidationError("unknown model: " + model);
    }
    return seconds_since(t0);
  }

  void run() const {
    if (!std::is_sorted(scales.begin(), scales.end())) {
      throw CLI::ValidationError("--scales must be ascending");
    }
    for (std::size_t n : scales) {
      if (n < 1000) {
        throw CLI::ValidationError(
            "scales below 1000 break the normalization unit");
      }
    }
    if (scales.front() != 1000) {
      throw CLI::ValidationError("the scale list must start at 1000");
    }

    json table = json::array();
    std::printf("%-10s", "model");
    for (std::size_t n : scales) std::printf(" %9zu", n);
    std::printf("   (normalized by each model's 1000-node time)\n");
    for (const auto& model : models) {
      std::vector<double> raw;
      for (std::size_t n : scales) raw.push_back(run_cell(model, n));
      std::printf("%-10s", model.c_str());
      json row;
      row["model"] = model;
      row["raw_seconds"] = raw;
      json norm = json::array();
      for (double t : raw) {
        const double v = t / raw.front();
        norm.push_back(v);
        std::printf(" %9.2f", v);
      }
      row["normalized"] = norm;
      if (model == "fgm-lsh") {
        // log-free linear fit of raw time vs n
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double cnt = static_cast<double>(scales.size());
        for (std::size_t i = 0; i < scales.size(); ++i) {
          const double x = static_cast<double>(scales[i]);
          sx += x;
          sy += raw[i];
          sxx += x * x;
          sxy += x * raw[i];
        }
        const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        const double intercept = (sy - slope * sx) / cnt;
        double ss_res = 0, ss_tot = 0;
        for (std::size_t i = 0; i < scales.size(); ++i) {
          const double pred =
              slope * static_cast<double>(scales[i]) + intercept;
          ss_res += (raw[i] - pred) * (raw[i] - pred);
          ss_tot += (raw[i] - sy / cnt) * (raw[i] - sy / cnt);
        }
        const double r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
        row["linear_fit"] = {{"slope", slope},
                             {"intercept", intercept},
                             {"r2", r2}};
        std::printf("   linear fit r2 %.4f", r2);
      }
      std::printf("\n");
      table.push_back(row);
    }
    const fs::path path = prepared(out_dir) / "bench.json";
    std::ofstream(path) << json{{"scales", scales}, {"rows", table}}.dump(2)
                        << "\n";
    std::cout << path.string() << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cube-to-network generation and analysis toolkit"};
  app.require_subcommand(1);

  SynthCubeCmd synth;
  auto* synth_cmd =
      app.add_subcommand("synth-cube", "synthesize an evaluation cube CSV");
  synth_cmd->add_option("--n", synth.n, "row count")->required();
  synth_cmd->add_option("--scenario", synth.scenario, "fgm_p or fgm_r");
  synth_cmd->add_option("--seed", synth.seed, "sampling seed");
  synth_cmd->add_option("--geo-dim", synth.geo_dim,
                        "geographic dimensions (lambda)");
  synth_cmd->add_option("--lomax-mu", synth.lomax_mu, "Lomax scale");
  synth_cmd->add_option("--lomax-alpha", synth.lomax_alpha, "Lomax shape");
  synth_cmd->add_option("--out-dir", synth.out_dir, "output directory");
  synth_cmd->add_option("--out", synth.out_name, "output file name");

  GenerateCmd gen;
  auto* gen_cmd =
      app.add_subcommand("generate", "generate a network from a cube");
  gen_cmd->add_option("--cube", gen.cube_path, "cube CSV path")->required();
  gen.schema.add_to(gen_cmd);
  gen.gen.add_to(gen_cmd);
  gen_cmd->add_option("--out-dir", gen.out_dir, "output directory");
  gen_cmd->add_option("--prefix", gen.prefix, "output file prefix");
  gen_cmd->add_flag("--no-trace", gen.no_trace, "skip the trace file");

  BaselineCmd base;
  auto* base_cmd =
      app.add_subcommand("generate-baseline", "generate a baseline network");
  base_cmd->add_option("--model", base.model, "er, sw, ba, or config")
      ->required();
  base_cmd->add_option("--n", base.n, "node count");
  base_cmd->add_option("--p", base.p, "ER edge probability");
  base_cmd->add_option("--k-ring", base.k_ring, "small-world ring degree");
  base_cmd->add_option("--p-rw", base.p_rw, "small-world rewire probability");
  base_cmd->add_option("--m-attach", base.m_attach, "BA attachments");
  base_cmd->add_option("--exponent", base.exponent,
                       "configuration power-law exponent");
  base_cmd->add_option("--mean-degree", base.mean_degree,
                       "configuration target mean degree");
  base_cmd->add_option("--seed", base.seed, "seed");
  base_cmd->add_flag("--trace", base.trace, "emit a BA attachment trace");
  base_cmd->add_option("--out-dir", base.out_dir, "output directory");
  base_cmd->add_option("--prefix", base.prefix, "output file prefix");

  MetricsCmd met;
  auto* met_cmd =
      app.add_subcommand("metrics", "compute a metrics report for an edge list");
  met_cmd->add_option("--edges", met.edges_path, "edge list path");
  met_cmd->add_option("--merge", met.merge,
                      "merge existing report JSONs into a comparison table")
      ->expected(1, 64);
  met_cmd->add_option("--x-min", met.opts.x_min, "tail fit minimum degree");
  met_cmd->add_option("--split-quantile", met.opts.split_quantile,
                      "head/tail split quantile");
  met_cmd->add_option("--sources", met.opts.path_sources,
                      "path-length BFS sources on large graphs");
  met_cmd->add_option("--seed", met.opts.seed, "sampling seed");
  met_cmd->add_option("--threads", met.opts.threads, "worker threads");
  met_cmd->add_option("--out-dir", met.out_dir, "output directory");
  met_cmd->add_option("--prefix", met.prefix, "output file prefix");

  DecayCmd decay;
  auto* decay_cmd = app.add_subcommand(
      "decay-trace", "edge-forming probability series of selected Gnodes");
  decay_cmd->add_option("--trace", decay.trace_path, "trace file")->required();
  decay_cmd->add_option("--cube", decay.cube_path,
                        "cube the trace was generated from");
  decay.schema.add_to(decay_cmd);
  decay_cmd->add_option("--gamma-kind", decay.gamma_kind, "acceptance map");
  decay_cmd->add_option("--gamma-coeff", decay.gamma_coeff,
                        "acceptance coefficient");
  decay_cmd->add_option("--gnode", decay.gnodes, "explicit Gnode ids")
      ->expected(0, 64);
  decay_cmd->add_option("--top", decay.top, "pick the top-N degree Gnodes");
  decay_cmd->add_option("--window", decay.window, "bucket width in arrivals");
  decay_cmd->add_flag("--ba", decay.ba,
                      "treat the trace as a BA attachment log");
  decay_cmd->add_option("--m-attach", decay.m_attach,
                        "BA attachments (with --ba)");
  decay_cmd->add_option("--out-dir", decay.out_dir, "output directory");
  decay_cmd->add_option("--prefix", decay.prefix, "output file prefix");

  BenchCmd bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "proportional generation-time table across models");
  bench_cmd->add_option("--scales", bench.scales, "node counts, ascending")
      ->expected(1, 16);
  bench_cmd->add_option("--models", bench.models, "models to time")
      ->expected(1, 8);
  bench_cmd->add_option("--seed", bench.seed, "seed");
  bench_cmd->add_option("--out-dir", bench.out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth_cmd) synth.run();
    if (*gen_cmd) gen.run();
    if (*base_cmd) base.run();
    if (*met_cmd) met.run();
    if (*decay_cmd) decay.run();
    if (*bench_cmd) bench.run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
