#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fgm/graph.hpp"

namespace fgm {

/// One record per arrival: the candidate set the search produced and
/// the edges that were actually accepted. Node ids equal arrival
/// indices, so record i belongs to arrival i.
struct TraceRecord {
  NodeId node = 0;
  std::uint32_t k = 0;
  std::vector<NodeId> pnbr;      // sorted ascending
  std::vector<NodeId> accepted;  // subset of pnbr, sorted ascending
};

/// Per-arrival event log of a generation run. Lets decay analysis run
/// from files without regenerating the graph.
struct GenTrace {
  std::vector<TraceRecord> records;

  bool contains(NodeId arrival, NodeId candidate) const;

  /// Line format: "node,k,p1|p2|...,e1|e2|..." with empty list fields
  /// allowed.
  void write(std::ostream& out) const;
  void write(const std::string& path) const;
  static GenTrace read(std::istream& in);
  static GenTrace read(const std::string& path);
};

}  // namespace fgm
