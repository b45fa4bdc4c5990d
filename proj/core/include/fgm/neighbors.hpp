#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fgm/graph.hpp"
#include "fgm/params.hpp"
#include "fgm/rng.hpp"

namespace fgm {

using QueryPoint = std::vector<double>;

/// Candidate count for an arriving node:
/// min(n_prev, max(k_floor, floor(eta * inf^theta))), 0 when the pool
/// is empty.
std::uint32_t compute_k(double inf_rate, double eta, double theta,
                        std::size_t n_prev, std::uint32_t k_floor);

/// Weighted search vector [mu_t * t, mu_c * c_1, ..., mu_c * c_lambda].
QueryPoint make_query_point(const NodeAttr& attr, double mu_t, double mu_c);

double minkowski_distance(const QueryPoint& a, const QueryPoint& b, double p);

/// Incremental nearest-neighbor pool over already-arrived nodes.
/// Single-writer insert; the generation loop alternates query/insert.
class NeighborIndex {
 public:
  virtual ~NeighborIndex() = default;

  /// Throws on duplicate id.
  virtual void insert(NodeId id, const QueryPoint& q) = 0;

  /// Up to k candidate ids for the querying node. `self` identifies
  /// the querying node (used by the precomputed backend; never part of
  /// the result). May consume `rng` (LSH underfill padding).
  virtual std::vector<NodeId> query(const QueryPoint& q, NodeId self,
                                    std::uint32_t k, Rng& rng) = 0;

  virtual std::size_t size() const = 0;
  virtual std::string name() const = 0;
};

/// Exhaustive scan: the k smallest Minkowski distances, ties broken by
/// smaller id. O(pool) per query.
class ExactKnnIndex final : public NeighborIndex {
 public:
  explicit ExactKnnIndex(double minkowski_p) : p_(minkowski_p) {}

  void insert(NodeId id, const QueryPoint& q) override;
  std::vector<NodeId> query(const QueryPoint& q, NodeId self, std::uint32_t k,
                            Rng& rng) override;
  std::size_t size() const override { return ids_.size(); }
  std::string name() const override { return "knn"; }

 private:
  double p_;
  std::vector<NodeId> ids_;
  std::vector<QueryPoint> points_;
  std::unordered_set<NodeId> present_;
};

struct LshParams {
  std::uint32_t tables = 16;       // L
  std::uint32_t bits = 8;          // initial hyperplanes per table
  std::uint32_t load_max = 64;     // mean bucket size that triggers a rebuild
  std::uint32_t candidate_cap = 256;
  std::uint64_t seed = 0;
  // bounding box of the weighted point space; hyperplane offsets are
  // anchored at random points inside it
  std::vector<double> box_lo;
  std::vector<double> box_hi;
};

/// Random-hyperplane LSH. Each table hashes a point to the sign
/// pattern of `bits` offset hyperplanes. When mean bucket load exceeds
/// load_max, the table count of hyperplanes grows geometrically and
/// all tables are rebuilt, keeping query cost independent of pool
/// size. Bucket unions are distance-ranked and truncated to k;
/// underfull results are padded with uniformly random arrived ids.
class LshIndex final : public NeighborIndex {
 public:
  LshIndex(std::size_t dim, double minkowski_p, const LshParams& params);

  void insert(NodeId id, const QueryPoint& q) override;
  std::vector<NodeId> query(const QueryPoint& q, NodeId self, std::uint32_t k,
                            Rng& rng) override;
  std::size_t size() const override { return ids_.size(); }
  std::string name() const override { return "lsh"; }

  std::uint32_t current_bits() const { return bits_; }

 private:
  std::uint64_t signature(std::uint32_t table, const QueryPoint& q) const;
  void add_planes(std::uint32_t count);
  void rebuild();

  std::size_t dim_;
  double p_;
  LshParams params_;
  Rng plane_rng_;
  std::uint32_t bits_;
  // planes[table][plane]: normal vector and offset
  std::vector<std::vector<std::vector<double>>> normals_;
  std::vector<std::vector<double>> offsets_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>>
      tables_;
  std::vector<NodeId> ids_;
  std::vector<QueryPoint> points_;
  std::vector<std::uint32_t> visit_mark_;
  std::uint32_t visit_epoch_ = 0;
};

/// Candidate lists supplied up front (geo-free mode). Queries return
/// the stored list for the querying node, filtered to already-arrived
/// ids and truncated to k.
class PrecomputedIndex final : public NeighborIndex {
 public:
  explicit PrecomputedIndex(std::vector<std::vector<NodeId>> lists)
      : lists_(std::move(lists)) {}

  /// File format: one "node_id: id,id,id" line per node.
  static PrecomputedIndex load(const std::string& path, std::size_t n);

  void insert(NodeId id, const QueryPoint& q) override;
  std::vector<NodeId> query(const QueryPoint& q, NodeId self, std::uint32_t k,
                            Rng& rng) override;
  std::size_t size() const override { return count_; }
  std::string name() const override { return "precomputed"; }

 private:
  std::vector<std::vector<NodeId>> lists_;
  std::vector<bool> arrived_;
  std::size_t count_ = 0;
};

/// Mean over queries of |lsh top-k  intersect  exact top-k| / k.
/// Both indexes must hold the same pool.
double lsh_recall(NeighborIndex& lsh, NeighborIndex& exact,
                  const std::vector<QueryPoint>& queries, std::uint32_t k,
                  Rng& rng);

}  // namespace fgm
