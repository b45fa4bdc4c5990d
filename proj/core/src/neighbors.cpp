#include "fgm/neighbors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace fgm {

namespace {

// Ranking uses sum |a_i - b_i|^p without the final root; monotone in
// the true distance, so ordering and ties are unaffected.
double minkowski_pow_sum(const QueryPoint& a, const QueryPoint& b, double p) {
  double s = 0.0;
  if (p == 2.0) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
  } else if (p == 1.0) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += std::fabs(a[i] - b[i]);
    }
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += std::pow(std::fabs(a[i] - b[i]), p);
    }
  }
  return s;
}

std::vector<NodeId> rank_and_truncate(
    std::vector<std::pair<double, NodeId>>& scored, std::uint32_t k) {
  const std::size_t take = std::min<std::size_t>(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + take, scored.end());
  std::vector<NodeId> out(take);
  for (std::size_t i = 0; i < take; ++i) out[i] = scored[i].second;
  return out;
}

}  // namespace

std::uint32_t compute_k(double inf_rate, double eta, double theta,
                        std::size_t n_prev, std::uint32_t k_floor) {
  if (n_prev == 0) return 0;
  const double raw = std::floor(eta * std::pow(inf_rate, theta));
  const double floored =
      std::max<double>(static_cast<double>(k_floor), raw);
  return static_cast<std::uint32_t>(
      std::min<double>(static_cast<double>(n_prev), floored));
}

QueryPoint make_query_point(const NodeAttr& attr, double mu_t, double mu_c) {
  QueryPoint q;
  q.reserve(attr.c.size() + 1);
  q.push_back(mu_t * attr.t);
  for (double ci : attr.c) q.push_back(mu_c * ci);
  return q;
}

double minkowski_distance(const QueryPoint& a, const QueryPoint& b, double p) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("minkowski_distance: dimension mismatch");
  }
  if (p < 1.0) throw std::invalid_argument("minkowski_distance: p must be >= 1");
  const double s = minkowski_pow_sum(a, b, p);
  if (p == 2.0) return std::sqrt(s);
  if (p == 1.0) return s;
  return std::pow(s, 1.0 / p);
}

// ---------------------------------------------------------------- exact knn

void ExactKnnIndex::insert(NodeId id, const QueryPoint& q) {
  if (!present_.insert(id).second) {
    throw std::invalid_argument("index_insert: duplicate id " +
                                std::to_string(id));
  }
  ids_.push_back(id);
  points_.push_back(q);
}

std::vector<NodeId> ExactKnnIndex::query(const QueryPoint& q, NodeId /*self*/,
                                         std::uint32_t k, Rng& /*rng*/) {
  if (k == 0 || ids_.empty()) return {};
  std::vector<std::pair<double, NodeId>> scored;
  scored.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    scored.emplace_back(minkowski_pow_sum(points_[i], q, p_), ids_[i]);
  }
  return rank_and_truncate(scored, k);
}

// --------------------------------------------------------------------- lsh

LshIndex::LshIndex(std::size_t dim, double minkowski_p,
                   const LshParams& params)
    : dim_(dim),
      p_(minkowski_p),
      params_(params),
      plane_rng_(params.seed),
      bits_(0),
      normals_(params.tables),
      offsets_(params.tables),
      tables_(params.tables) {
  if (params_.tables == 0) {
    throw std::invalid_argument("lsh: need at least one table");
  }
  if (params_.box_lo.empty()) params_.box_lo.assign(dim_, 0.0);
  if (params_.box_hi.empty()) params_.box_hi.assign(dim_, 1.0);
  if (params_.box_lo.size() != dim_ || params_.box_hi.size() != dim_) {
    throw std::invalid_argument("lsh: bounding box dimension mismatch");
  }
  add_planes(params_.bits);
}

void LshIndex::add_planes(std::uint32_t count) {
  // one plane = unit-free normal + offset through a random anchor in
  // the data box; consumed from plane_rng_ in (table, plane) order
  for (std::uint32_t c = 0; c < count; ++c) {
    for (std::uint32_t t = 0; t < params_.tables; ++t) {
      std::vector<double> w(dim_);
      for (auto& wi : w) wi = plane_rng_.normal();
      double off = 0.0;
      for (std::size_t d = 0; d < dim_; ++d) {
        const double anchor = params_.box_lo[d] +
                              (params_.box_hi[d] - params_.box_lo[d]) *
                                  plane_rng_.uniform();
        off += w[d] * anchor;
      }
      normals_[t].push_back(std::move(w));
      offsets_[t].push_back(off);
    }
  }
  bits_ += count;
}

std::uint64_t LshIndex::signature(std::uint32_t table,
                                  const QueryPoint& q) const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  const auto& ws = normals_[table];
  const auto& bs = offsets_[table];
  for (std::size_t j = 0; j < ws.size(); ++j) {
    double dot = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) dot += ws[j][d] * q[d];
    h = (h ^ (dot >= bs[j] ? 0x100000001b3ull : 0x9e3779b97f4a7c15ull)) *
        0x100000001b3ull;
  }
  return h;
}

void LshIndex::rebuild() {
  for (auto& t : tables_) t.clear();
  for (std::uint32_t t = 0; t < params_.tables; ++t) {
    for (std::uint32_t i = 0; i < points_.size(); ++i) {
      tables_[t][signature(t, points_[i])].push_back(i);
    }
  }
}

void LshIndex::insert(NodeId id, const QueryPoint& q) {
  if (q.size() != dim_) {
    throw std::invalid_argument("lsh insert: dimension mismatch");
  }
  ids_.push_back(id);
  points_.push_back(q);
  visit_mark_.push_back(0);
  const std::uint32_t local = static_cast<std::uint32_t>(ids_.size() - 1);
  for (std::uint32_t t = 0; t < params_.tables; ++t) {
    tables_[t][signature(t, q)].push_back(local);
  }
  // grow when the first table's mean bucket load exceeds the target;
  // geometric growth keeps total rebuild work linear
  if (bits_ > 0 &&
      ids_.size() > static_cast<std::size_t>(params_.load_max) *
                        std::max<std::size_t>(1, tables_[0].size())) {
    const auto extra =
        std::max<std::uint32_t>(1, bits_ / 3);
    add_planes(extra);
    rebuild();
  }
}

std::vector<NodeId> LshIndex::query(const QueryPoint& q, NodeId /*self*/,
                                    std::uint32_t k, Rng& rng) {
  if (k == 0 || ids_.empty()) return {};
  ++visit_epoch_;
  std::vector<std::uint32_t> cand;
  for (std::uint32_t t = 0; t < params_.tables; ++t) {
    auto it = tables_[t].find(signature(t, q));
    if (it == tables_[t].end()) continue;
    for (std::uint32_t local : it->second) {
      if (visit_mark_[local] != visit_epoch_) {
        visit_mark_[local] = visit_epoch_;
        cand.push_back(local);
      }
    }
    if (cand.size() >= params_.candidate_cap) break;
  }
  std::vector<std::pair<double, NodeId>> scored;
  scored.reserve(cand.size());
  for (std::uint32_t local : cand) {
    scored.emplace_back(minkowski_pow_sum(points_[local], q, p_),
                        ids_[local]);
  }
  auto result = rank_and_truncate(scored, k);

  // pad underfull results with uniformly random arrived ids so |PNbr|
  // stays comparable to the exact backend
  const std::size_t want = std::min<std::size_t>(k, ids_.size());
  while (result.size() < want) {
    const auto local = static_cast<std::size_t>(rng.below(ids_.size()));
    const NodeId id = ids_[local];
    if (std::find(result.begin(), result.end(), id) != result.end()) continue;
    result.push_back(id);
  }
  return result;
}

// -------------------------------------------------------------- precomputed

PrecomputedIndex PrecomputedIndex::load(const std::string& path,
                                        std::size_t n) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::vector<std::vector<NodeId>> lists(n);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("pnbr file line " + std::to_string(lineno) +
                               ": expected \"node_id: id,id\"");
    }
    NodeId node = 0;
    auto rc = std::from_chars(line.data(), line.data() + colon, node);
    if (rc.ec != std::errc{} || node >= n) {
      throw std::runtime_error("pnbr file line " + std::to_string(lineno) +
                               ": bad node id");
    }
    std::size_t pos = colon + 1;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == ',')) {
        ++pos;
      }
      if (pos >= line.size()) break;
      NodeId id = 0;
      auto r = std::from_chars(line.data() + pos, line.data() + line.size(),
                               id);
      if (r.ec != std::errc{}) {
        throw std::runtime_error("pnbr file line " + std::to_string(lineno) +
                                 ": unparseable id");
      }
      lists[node].push_back(id);
      pos = static_cast<std::size_t>(r.ptr - line.data());
    }
  }
  return PrecomputedIndex(std::move(lists));
}

void PrecomputedIndex::insert(NodeId id, const QueryPoint& /*q*/) {
  if (arrived_.size() <= id) arrived_.resize(id + 1, false);
  if (arrived_[id]) {
    throw std::invalid_argument("index_insert: duplicate id " +
                                std::to_string(id));
  }
  arrived_[id] = true;
  ++count_;
}

std::vector<NodeId> PrecomputedIndex::query(const QueryPoint& /*q*/,
                                            NodeId self, std::uint32_t k,
                                            Rng& /*rng*/) {
  if (self >= lists_.size()) {
    throw std::out_of_range("precomputed query: node " +
                            std::to_string(self) + " has no stored list");
  }
  std::vector<NodeId> out;
  for (NodeId id : lists_[self]) {
    if (out.size() >= k) break;
    if (id < arrived_.size() && arrived_[id]) out.push_back(id);
  }
  return out;
}

// ------------------------------------------------------------------ recall

double lsh_recall(NeighborIndex& lsh, NeighborIndex& exact,
                  const std::vector<QueryPoint>& queries, std::uint32_t k,
                  Rng& rng) {
  if (queries.empty()) {
    throw std::invalid_argument("lsh_recall: empty query set");
  }
  if (lsh.size() != exact.size()) {
    throw std::invalid_argument("lsh_recall: pools differ in size");
  }
  double total = 0.0;
  for (const auto& q : queries) {
    auto approx = lsh.query(q, 0, k, rng);
    auto truth = exact.query(q, 0, k, rng);
    std::sort(approx.begin(), approx.end());
    std::sort(truth.begin(), truth.end());
    std::vector<NodeId> common;
    std::set_intersection(approx.begin(), approx.end(), truth.begin(),
                          truth.end(), std::back_inserter(common));
    total += static_cast<double>(common.size()) / static_cast<double>(k);
  }
  return total / static_cast<double>(queries.size());
}

}  // namespace fgm
