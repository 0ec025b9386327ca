#pragma once

// Arc diagrams over [n] = {1, ..., n}: set partitions in their standard arc
// representation and braids (partitions whose degree-two vertices are loops or
// crossing pairs (i,j),(j,h)).

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace kncross {

/// Arc (left, right) with left <= right; left == right is a loop.
struct Arc {
  int left = 0;
  int right = 0;

  bool is_loop() const noexcept { return left == right; }
  auto operator<=>(const Arc&) const = default;
};

/// Vertex count plus a canonically sorted arc list. Every vertex has degree at
/// most two (a loop contributes two) and no non-loop arc repeats.
class ArcDiagram {
 public:
  ArcDiagram() = default;
  ArcDiagram(int n, std::vector<Arc> arcs);

  int size() const noexcept { return n_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  int degree(int vertex) const;

  bool operator==(const ArcDiagram&) const = default;
  auto operator<=>(const ArcDiagram&) const = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

/// Standard representation of a set partition: no loops, every vertex is the
/// left endpoint of at most one arc and the right endpoint of at most one arc.
class PartitionDiagram {
 public:
  PartitionDiagram() = default;
  explicit PartitionDiagram(ArcDiagram diagram);
  PartitionDiagram(int n, std::vector<Arc> arcs) : PartitionDiagram(ArcDiagram(n, std::move(arcs))) {}

  static bool satisfies_invariants(const ArcDiagram& diagram);

  const ArcDiagram& diagram() const noexcept { return diagram_; }
  int size() const noexcept { return diagram_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return diagram_.arcs(); }

  bool operator==(const PartitionDiagram&) const = default;
  auto operator<=>(const PartitionDiagram&) const = default;

 private:
  ArcDiagram diagram_;
};

/// Braid: every degree-two vertex j carries a lone loop (j,j) or a pair
/// (i,j),(j,h) with i < j < h, which cross at j by convention.
class BraidDiagram {
 public:
  BraidDiagram() = default;
  explicit BraidDiagram(ArcDiagram diagram);
  BraidDiagram(int n, std::vector<Arc> arcs) : BraidDiagram(ArcDiagram(n, std::move(arcs))) {}

  static bool satisfies_invariants(const ArcDiagram& diagram);

  const ArcDiagram& diagram() const noexcept { return diagram_; }
  int size() const noexcept { return diagram_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return diagram_.arcs(); }

  bool operator==(const BraidDiagram&) const = default;
  auto operator<=>(const BraidDiagram&) const = default;

 private:
  ArcDiagram diagram_;
};

/// Block view of a set partition of [n]; blocks sorted ascending, ordered by minimum.
class SetPartitionBlocks {
 public:
  SetPartitionBlocks() = default;
  SetPartitionBlocks(int n, std::vector<std::vector<int>> blocks);

  int size() const noexcept { return n_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

  bool operator==(const SetPartitionBlocks&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

PartitionDiagram partition_from_blocks(const SetPartitionBlocks& blocks);
SetPartitionBlocks blocks_from_partition(const PartitionDiagram& partition);

/// Largest m with arcs i_1 < ... < i_m < j_1 < ... < j_m.
int max_mutually_crossing(const PartitionDiagram& partition);

/// Largest m with arcs i_1 < ... < i_m <= j_1 < ... < j_m, equality only as
/// i_m = j_1. Loops only ever form sets of size one.
int max_mutually_crossing(const BraidDiagram& braid);

bool is_k_noncrossing(const PartitionDiagram& partition, int k);
bool is_k_noncrossing(const BraidDiagram& braid, int k);

bool is_two_regular(const PartitionDiagram& partition);
bool has_isolated_points(const BraidDiagram& braid);

/// Loops become isolated points; every other arc is kept and read as a
/// partition arc.
PartitionDiagram braid_to_flat_partition(const BraidDiagram& braid);

/// Isolated vertices become loops. Inverts braid_to_flat_partition on braids
/// without isolated points.
BraidDiagram flat_partition_to_braid(const PartitionDiagram& partition);

// Text format: "n=<int>; arcs=(i1,j1)(i2,j2)..." with arcs in sorted order.
std::string to_string(const ArcDiagram& diagram);
inline std::string to_string(const PartitionDiagram& p) { return to_string(p.diagram()); }
inline std::string to_string(const BraidDiagram& b) { return to_string(b.diagram()); }
ArcDiagram parse_diagram(std::string_view text);

/// Vertices on a baseline, arcs as upper half-plane semicircles, loops as small circles.
std::string render_svg(const ArcDiagram& diagram);

}  // namespace kncross
