#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fgm/graph.hpp"
#include "fgm/neighbors.hpp"
#include "fgm/params.hpp"
#include "fgm/trace.hpp"

namespace fgm {

/// Symmetric map from an influence pair to an edge-acceptance
/// probability. The normalizer is a fixed high quantile of the cube's
/// influence values (see gamma_normalizer), fixed before the loop so
/// the map stays stationary.
class GammaFn {
 public:
  GammaFn(GammaKind kind, double coeff, double normalizer);

  double operator()(double a, double b) const;

  GammaKind kind() const { return kind_; }
  double normalizer() const { return normalizer_; }

 private:
  GammaKind kind_;
  double coeff_;
  double normalizer_;
};

/// Influence normalizer for the sqrt-product gamma: the 99th
/// percentile of the influence values. A quantile (unlike the maximum)
/// is stable under the cube size, so acceptance probabilities — and
/// with them density and clustering — carry over across scales.
double gamma_normalizer(const std::vector<NodeAttr>& attrs);

enum class BackendKind { kExactKnn, kLsh, kPrecomputed };

BackendKind parse_backend(const std::string& name);
std::string to_string(BackendKind kind);

struct GenerateOptions {
  bool record_trace = true;
};

struct GenResult {
  Graph graph;
  GenTrace trace;  // empty when record_trace is off
};

/// Builds a neighbor index for the given attrs/params. For LSH the
/// bounding box is derived from the weighted attribute ranges;
/// lsh.seed is taken from params.seed unless overridden.
std::unique_ptr<NeighborIndex> make_index(
    const std::vector<NodeAttr>& attrs, const GenParams& params,
    BackendKind backend, const LshParams& lsh = {},
    std::vector<std::vector<NodeId>> precomputed = {});

/// The main arrival loop. attrs must already be in arrival order.
///
/// Random stream (seeded from params.seed) consumption order: per
/// arrival, first any LSH padding draws inside the query, then one
/// uniform per candidate in ascending candidate-id order for the edge
/// coin flips. LSH hyperplanes use their own stream (LshParams.seed).
GenResult generate(const std::vector<NodeAttr>& attrs,
                   const GenParams& params, NeighborIndex& index,
                   const GenerateOptions& opts = {});

/// Edge-forming probability of `gnode` seen by each later arrival:
/// Gamma(inf_tau, inf_gnode) when gnode is in that arrival's candidate
/// set, else 0; averaged over consecutive offset buckets of `window`.
/// Returned pairs are (first offset of bucket, mean probability).
std::vector<std::pair<std::uint32_t, double>> decay_probability_series(
    const GenTrace& trace, const std::vector<NodeAttr>& attrs,
    const GammaFn& gamma, NodeId gnode, std::uint32_t window);

/// Same bucketing, but the raw 0/1 membership indicator.
std::vector<std::pair<std::uint32_t, double>> decay_membership_series(
    const GenTrace& trace, NodeId gnode, std::uint32_t window);

/// Attachment probability of `gnode` at each later arrival of a
/// preferential-attachment trace: min(1, m_attach * deg / (2 m)),
/// reconstructed from the accepted-edge log; same bucketing.
std::vector<std::pair<std::uint32_t, double>> ba_attachment_series(
    const GenTrace& trace, NodeId gnode, std::uint32_t m_attach,
    std::uint32_t window);

}  // namespace fgm
