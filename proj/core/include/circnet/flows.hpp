#pragma once

#include <string>
#include <vector>

#include "circnet/network.hpp"
#include "circnet/poly.hpp"
#include "circnet/walks.hpp"

namespace circnet {

/// Flow in a perfectly oriented network: an edge subset with equal in- and
/// out-degree at every interior vertex. It decomposes uniquely into
/// vertex-disjoint self-avoiding walks (one per source, possibly trivial)
/// plus pairwise disjoint cycles.
struct Flow {
  std::vector<std::string> edges;  // sorted edge ids
  std::vector<int> destination;    // sorted boundary positions (the set J)
  std::vector<Walk> walks;         // indexed like the ascending source list
  std::vector<std::vector<std::string>> cycles;  // canonical edge sequences
  WeightExpr weight;
};

/// All self-avoiding cycles, each reported once as the edge sequence rotated
/// to start at its smallest edge id.
std::vector<std::vector<std::string>> enumerate_cycles(const Network& n);
std::vector<std::string> canonical_cycle(std::vector<std::string> cycle);

/// All flows from I to J, by backtracking over vertex-disjoint walk systems
/// and disjoint cycle sets; deterministic order (sorted edge-id lists).
std::vector<Flow> enumerate_flows(const Network& n, const std::vector<int>& J);
/// All flows of the network, grouped implicitly by their destination field.
std::vector<Flow> enumerate_all_flows(const Network& n);

std::vector<Flow> conservative_flows(const Network& n);
Poly conservative_gf(const Network& n);
Poly flow_gf(const std::vector<Flow>& flows);

/// Plucker coordinate by the flow formula: the unreduced pair
/// (flow generating function for J, conservative generating function).
RationalFn plucker(const Network& n, const std::vector<int>& J);

/// Boundary measurement M_ij = Delta_{(I \ {i}) u {j}} by the flow formula;
/// valid for perfectly oriented networks whether planar or not.
RationalFn plucker_nonplanar_measurement(const Network& n, int i, int j);

/// Minor as the exact signed bijection sum of measurement-type flow
/// formulas; valid for any perfectly oriented network.
RationalFn minor_via_measurement_fns(const Network& n,
                                     const std::vector<int>& J);

/// Alternating flow in a planar network: incident flow edges alternate
/// orientation in the clockwise rotation at every interior vertex. walk_map
/// records where each source's first-left-turn walk ends.
struct AlternatingFlow {
  std::vector<std::string> edges;             // sorted edge ids
  std::vector<std::pair<int, int>> walk_map;  // source position -> end position
  std::vector<int> destination;               // sorted end positions
  int theta = 0;
  int eps = 0;
  int beta = 0;
  int eta = 0;
  WeightExpr weight;
};

/// Brute-force enumeration over edge subsets with per-vertex alternation
/// pruning; rejects networks with more than 22 edges.
std::vector<AlternatingFlow> enumerate_alternating_flows(
    const Network& n, const std::vector<int>& J);
std::vector<AlternatingFlow> enumerate_all_alternating_flows(const Network& n);

/// Builds the alternating flow with the given edge set, checking the
/// alternation condition at every interior vertex.
AlternatingFlow make_alternating_flow(const Network& n,
                                      const std::set<std::string>& edges);

/// Plucker coordinate of an arbitrarily oriented planar network: alternating
/// flows weighted by 2^theta.
RationalFn plucker_general(const Network& n, const std::vector<int>& J);
Poly alternating_gf(const std::vector<AlternatingFlow>& flows);

/// True iff the flow-formula series and the determinant-route series agree
/// coefficient-wise mod 2 up to the bound. Requires integer coefficients.
bool gf2_plucker_check(const Network& n, const std::vector<int>& J,
                       unsigned bound);

}  // namespace circnet
