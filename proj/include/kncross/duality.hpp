#pragma once

// The duality between partitions over [n] and braids over [n-1]: an arc (i,j)
// of the partition corresponds to the arc (i,j-1) of the braid, so arcs
// (i,i+1) contract to loops. Computed directly on arcs and, independently,
// through vacillating tableaux by shifting and transposing step pairs.

#include <span>
#include <vector>

#include "kncross/diagram.hpp"
#include "kncross/tableau.hpp"

namespace kncross {

/// Arc map (i,j) -> (i,j-1). Rejects n = 0.
BraidDiagram theta_direct(const PartitionDiagram& partition);

/// Arc map (i,j) -> (i,j+1).
PartitionDiagram theta_inverse_direct(const BraidDiagram& braid);

/// (x_i, y_i), i = 1..n  ->  (y_i, x_{i+1}), i = 1..n-1. Requires x_1 and y_n
/// to be empty half-steps.
std::vector<StepPair> phi1(std::span<const StepPair> pairs);

/// Transposes every pair except (+h,-j). Input pairs must lie in
/// {(0,0), (+h,0), (0,-h), (+h,-j)}.
std::vector<StepPair> phi2(std::span<const StepPair> pairs);

struct ThetaTrace {
  VacillatingTableau source;  // partition tableau lambda^0..lambda^{2n}
  VacillatingTableau image;   // braid tableau mu^0..mu^{2(n-1)}
  BraidDiagram braid;
};

/// The tableau route: diagram_to_tableau, step_pairs, phi1, phi2,
/// tableau_from_step_pairs over B, braid_from_tableau.
ThetaTrace theta_tableau_trace(const PartitionDiagram& partition);
BraidDiagram theta_tableau(const PartitionDiagram& partition);

/// Bijection from 2-regular k-noncrossing partitions over [n] onto k-noncrossing
/// braids over [n-1] without isolated points. The contracted diagram of a
/// 2-regular partition is loop-free; its isolated vertices are then read as
/// loops (flat_partition_to_braid). Throws on a precondition violation.
BraidDiagram theta_restricted(const PartitionDiagram& partition, int k);
PartitionDiagram theta_restricted_inverse(const BraidDiagram& braid, int k);

enum class DualityRoute { direct, tableau };

struct DualityWitness {
  PartitionDiagram source;
  BraidDiagram image;
  DualityRoute route = DualityRoute::direct;

  /// (i,j) in source iff (i,j-1) in image.
  bool arc_property_holds() const;
};

DualityWitness make_witness(const PartitionDiagram& partition, DualityRoute route);

}  // namespace kncross
