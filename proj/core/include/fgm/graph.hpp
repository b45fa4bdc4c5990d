#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fgm {

using NodeId = std::uint32_t;

/// Undirected simple graph with per-node adjacency lists.
///
/// Construction is single-writer: add_edge() appends without sorting.
/// finalize() sorts every list ascending; after that the graph is
/// immutable and safe to share across reader threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return m_; }

  /// Number of duplicate insertions that were dropped. The generation
  /// loop cannot produce duplicates, so a nonzero value here points at
  /// a backend bug.
  std::size_t duplicate_count() const { return dups_; }

  /// Inserts the undirected edge {u, v}. Returns true if the edge is
  /// new, false if it was already present (no-op, counted).
  /// Throws std::invalid_argument on self-loops or out-of-range ids.
  bool add_edge(NodeId u, NodeId v);

  /// Adjacency-list length of u. Throws std::out_of_range if u >= n.
  std::size_t degree(NodeId u) const;

  const std::vector<NodeId>& neighbors(NodeId u) const { return adj_[u]; }

  /// Sorts all adjacency lists ascending (canonical form).
  void finalize();

  bool operator==(const Graph& other) const {
    return adj_ == other.adj_;
  }

  /// Edge list as sorted (u, v) pairs with u < v.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  /// Text edge-list format: one "u,v" line per edge, u < v, pairs in
  /// ascending order, no header.
  void write_edge_list(std::ostream& out) const;
  void write_edge_list(const std::string& path) const;
  static Graph read_edge_list(std::istream& in);
  static Graph read_edge_list(const std::string& path);

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::size_t m_ = 0;
  std::size_t dups_ = 0;
};

}  // namespace fgm
