#include "kncross/duality.hpp"
#include "kncross/error.hpp"

#include <algorithm>

namespace kncross {

BraidDiagram theta_direct(const PartitionDiagram& partition) {
  if (partition.size() == 0) throw Error(ErrorCode::precondition, "theta needs n >= 1");
  std::vector<Arc> arcs;
  arcs.reserve(partition.arcs().size());
  for (const Arc& a : partition.arcs()) arcs.push_back({a.left, a.right - 1});
  return BraidDiagram(partition.size() - 1, std::move(arcs));
}

PartitionDiagram theta_inverse_direct(const BraidDiagram& braid) {
  std::vector<Arc> arcs;
  arcs.reserve(braid.arcs().size());
  for (const Arc& a : braid.arcs()) arcs.push_back({a.left, a.right + 1});
  return PartitionDiagram(braid.size() + 1, std::move(arcs));
}

std::vector<StepPair> phi1(std::span<const StepPair> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::precondition, "phi1 needs at least one step pair");
  if (!pairs.front().odd.is_none() || !pairs.back().even.is_none()) {
    throw Error(ErrorCode::precondition, "phi1 needs x_1 and y_n empty");
  }
  std::vector<StepPair> out;
  out.reserve(pairs.size() - 1);
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) out.push_back({pairs[i].even, pairs[i + 1].odd});
  return out;
}

std::vector<StepPair> phi2(std::span<const StepPair> pairs) {
  std::vector<StepPair> out;
  out.reserve(pairs.size());
  for (const StepPair& p : pairs) {
    const bool first_ok = p.odd.is_none() || p.odd.is_add();
    const bool second_ok = p.even.is_none() || p.even.is_remove();
    if (!first_ok || !second_ok) throw Error(ErrorCode::precondition, "phi2 input " + to_string(p) + " not admissible");
    if (p.odd.is_add() && p.even.is_remove()) {
      out.push_back(p);
    } else {
      out.push_back({p.even, p.odd});
    }
  }
  return out;
}

ThetaTrace theta_tableau_trace(const PartitionDiagram& partition) {
  if (partition.size() == 0) throw Error(ErrorCode::precondition, "theta needs n >= 1");
  VacillatingTableau source = diagram_to_tableau(partition);
  const std::vector<StepPair> shifted = phi2(phi1(step_pairs(source)));
  VacillatingTableau image = tableau_from_step_pairs(shifted, StepSet::braid);
  BraidDiagram braid = braid_from_tableau(image);
  return {std::move(source), std::move(image), std::move(braid)};
}

BraidDiagram theta_tableau(const PartitionDiagram& partition) { return theta_tableau_trace(partition).braid; }

BraidDiagram theta_restricted(const PartitionDiagram& partition, int k) {
  if (!is_two_regular(partition)) {
    throw Error(ErrorCode::precondition, "partition is not 2-regular: " + to_string(partition));
  }
  if (!is_k_noncrossing(partition, k)) {
    throw Error(ErrorCode::precondition, "partition is not " + std::to_string(k) + "-noncrossing: " + to_string(partition));
  }
  // 2-regular means no arc contracts to a loop, so the image is a flat partition.
  return flat_partition_to_braid(PartitionDiagram(theta_direct(partition).diagram()));
}

PartitionDiagram theta_restricted_inverse(const BraidDiagram& braid, int k) {
  if (has_isolated_points(braid)) {
    throw Error(ErrorCode::precondition, "braid has isolated points: " + to_string(braid));
  }
  if (!is_k_noncrossing(braid, k)) {
    throw Error(ErrorCode::precondition, "braid is not " + std::to_string(k) + "-noncrossing: " + to_string(braid));
  }
  return theta_inverse_direct(BraidDiagram(braid_to_flat_partition(braid).diagram()));
}

bool DualityWitness::arc_property_holds() const {
  if (image.size() != source.size() - 1) return false;
  if (source.arcs().size() != image.arcs().size()) return false;
  for (const Arc& a : source.arcs()) {
    const Arc shifted{a.left, a.right - 1};
    if (!std::binary_search(image.arcs().begin(), image.arcs().end(), shifted)) return false;
  }
  return true;
}

DualityWitness make_witness(const PartitionDiagram& partition, DualityRoute route) {
  BraidDiagram image = route == DualityRoute::direct ? theta_direct(partition) : theta_tableau(partition);
  return {partition, std::move(image), route};
}

}  // namespace kncross
