#include "fgm/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fgm {

GammaFn::GammaFn(GammaKind kind, double coeff, double normalizer)
    : kind_(kind), coeff_(coeff), normalizer_(normalizer) {
  if (coeff <= 0.0) {
    throw std::invalid_argument("gamma coefficient must be positive");
  }
  if (kind == GammaKind::kSqrtProduct && normalizer <= 0.0) {
    throw std::invalid_argument("gamma normalizer must be positive");
  }
}

double GammaFn::operator()(double a, double b) const {
  if (a <= 0.0 || b <= 0.0) {
    throw std::invalid_argument("gamma_eval: influence must be positive");
  }
  switch (kind_) {
    case GammaKind::kSqrtProduct:
      return std::min(1.0, coeff_ * std::sqrt(a * b) / normalizer_);
    case GammaKind::kConstant:
      return std::min(1.0, coeff_);
    case GammaKind::kAlwaysOne:
      return 1.0;
  }
  return 0.0;
}

double gamma_normalizer(const std::vector<NodeAttr>& attrs) {
  if (attrs.empty()) {
    throw std::invalid_argument("gamma_normalizer: empty attribute list");
  }
  std::vector<double> inf;
  inf.reserve(attrs.size());
  for (const auto& a : attrs) inf.push_back(a.inf_rate);
  const std::size_t idx = static_cast<std::size_t>(
      std::ceil(0.99 * static_cast<double>(inf.size()))) - 1;
  std::nth_element(inf.begin(), inf.begin() + idx, inf.end());
  return inf[idx];
}

BackendKind parse_backend(const std::string& name) {
  if (name == "knn") return BackendKind::kExactKnn;
  if (name == "lsh") return BackendKind::kLsh;
  if (name == "precomputed") return BackendKind::kPrecomputed;
  throw std::invalid_argument("unknown backend: " + name);
}

std::string to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::kExactKnn:
      return "knn";
    case BackendKind::kLsh:
      return "lsh";
    case BackendKind::kPrecomputed:
      return "precomputed";
  }
  return "?";
}

std::unique_ptr<NeighborIndex> make_index(
    const std::vector<NodeAttr>& attrs, const GenParams& params,
    BackendKind backend, const LshParams& lsh,
    std::vector<std::vector<NodeId>> precomputed) {
  const std::size_t lambda = attrs.empty() ? 0 : attrs.front().c.size();
  if (backend != BackendKind::kPrecomputed && lambda == 0) {
    throw std::invalid_argument(
        "distance-based backend needs at least one geographic column "
        "(lambda = 0 requires the precomputed backend)");
  }
  switch (backend) {
    case BackendKind::kExactKnn:
      return std::make_unique<ExactKnnIndex>(params.minkowski_p);
    case BackendKind::kLsh: {
      LshParams lp = lsh;
      if (lp.seed == 0) lp.seed = params.seed ^ 0x5851f42d4c957f2dull;
      if (lp.box_lo.empty()) {
        // weighted bounding box of the whole cube
        lp.box_lo.assign(1 + lambda, std::numeric_limits<double>::max());
        lp.box_hi.assign(1 + lambda, std::numeric_limits<double>::lowest());
        for (const auto& a : attrs) {
          const auto q = make_query_point(a, params.mu_t, params.mu_c);
          for (std::size_t d = 0; d < q.size(); ++d) {
            lp.box_lo[d] = std::min(lp.box_lo[d], q[d]);
            lp.box_hi[d] = std::max(lp.box_hi[d], q[d]);
          }
        }
      }
      return std::make_unique<LshIndex>(1 + lambda, params.minkowski_p, lp);
    }
    case BackendKind::kPrecomputed:
      if (precomputed.size() < attrs.size()) {
        precomputed.resize(attrs.size());
      }
      return std::make_unique<PrecomputedIndex>(std::move(precomputed));
  }
  throw std::logic_error("unreachable");
}

GenResult generate(const std::vector<NodeAttr>& attrs,
                   const GenParams& params, NeighborIndex& index,
                   const GenerateOptions& opts) {
  params.validate();
  if (attrs.empty()) {
    throw std::invalid_argument("generate: empty attribute list");
  }
  for (const auto& a : attrs) {
    if (!(a.inf_rate > 0.0)) {
      throw std::invalid_argument("generate: influence must be positive");
    }
  }
  const GammaFn gamma(params.gamma_kind, params.gamma_coeff,
                      gamma_normalizer(attrs));

  Rng rng(params.seed);
  const std::size_t n = attrs.size();
  GenResult res;
  res.graph = Graph(n);
  if (opts.record_trace) res.trace.records.reserve(n);

  for (NodeId t = 0; t < n; ++t) {
    const std::uint32_t k =
        compute_k(attrs[t].inf_rate, params.eta, params.theta, t,
                  params.k_floor);
    const auto q = make_query_point(attrs[t], params.mu_t, params.mu_c);
    auto pnbr = index.query(q, t, k, rng);
    std::sort(pnbr.begin(), pnbr.end());

    std::vector<NodeId> accepted;
    // coin flips consume the stream in ascending candidate-id order
    for (NodeId j : pnbr) {
      const double u = rng.uniform();
      if (u < gamma(attrs[t].inf_rate, attrs[j].inf_rate)) {
        res.graph.add_edge(t, j);
        accepted.push_back(j);
      }
    }
    index.insert(t, q);
    if (opts.record_trace) {
      res.trace.records.push_back(
          TraceRecord{t, k, std::move(pnbr), std::move(accepted)});
    }
  }
  res.graph.finalize();
  return res;
}

namespace {

std::vector<std::pair<std::uint32_t, double>> bucketize(
    const std::vector<double>& values, std::uint32_t window) {
  if (window < 1) {
    throw std::invalid_argument("decay series: window must be >= 1");
  }
  std::vector<std::pair<std::uint32_t, double>> out;
  for (std::size_t start = 0; start < values.size(); start += window) {
    const std::size_t end = std::min(values.size(), start + window);
    double sum = 0.0;
    for (std::size_t i = start; i < end; ++i) sum += values[i];
    out.emplace_back(static_cast<std::uint32_t>(start + 1),
                     sum / static_cast<double>(end - start));
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::uint32_t, double>> decay_probability_series(
    const GenTrace& trace, const std::vector<NodeAttr>& attrs,
    const GammaFn& gamma, NodeId gnode, std::uint32_t window) {
  if (gnode >= trace.records.size()) {
    throw std::out_of_range("decay series: gnode out of range");
  }
  std::vector<double> values;
  values.reserve(trace.records.size() - gnode - 1);
  for (NodeId tau = gnode + 1; tau < trace.records.size(); ++tau) {
    values.push_back(trace.contains(tau, gnode)
                         ? gamma(attrs[tau].inf_rate, attrs[gnode].inf_rate)
                         : 0.0);
  }
  return bucketize(values, window);
}

std::vector<std::pair<std::uint32_t, double>> decay_membership_series(
    const GenTrace& trace, NodeId gnode, std::uint32_t window) {
  if (gnode >= trace.records.size()) {
    throw std::out_of_range("decay series: gnode out of range");
  }
  std::vector<double> values;
  values.reserve(trace.records.size() - gnode - 1);
  for (NodeId tau = gnode + 1; tau < trace.records.size(); ++tau) {
    values.push_back(trace.contains(tau, gnode) ? 1.0 : 0.0);
  }
  return bucketize(values, window);
}

std::vector<std::pair<std::uint32_t, double>> ba_attachment_series(
    const GenTrace& trace, NodeId gnode, std::uint32_t m_attach,
    std::uint32_t window) {
  if (gnode >= trace.records.size()) {
    throw std::out_of_range("decay series: gnode out of range");
  }
  const std::size_t n = trace.records.size();
  std::vector<std::uint64_t> deg(n, 0);
  std::uint64_t m = 0;
  // replay degree evolution up to gnode's arrival
  for (NodeId tau = 0; tau <= gnode; ++tau) {
    for (NodeId j : trace.records[tau].accepted) {
      ++deg[tau];
      ++deg[j];
      ++m;
    }
  }
  std::vector<double> values;
  values.reserve(n - gnode - 1);
  for (NodeId tau = gnode + 1; tau < n; ++tau) {
    values.push_back(
        m == 0 ? 0.0
               : std::min(1.0, static_cast<double>(m_attach) *
                                   static_cast<double>(deg[gnode]) /
                                   (2.0 * static_cast<double>(m))));
    for (NodeId j : trace.records[tau].accepted) {
      ++deg[tau];
      ++deg[j];
      ++m;
    }
  }
  return bucketize(values, window);
}

}  // namespace fgm
