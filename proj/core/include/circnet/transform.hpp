#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "circnet/flows.hpp"
#include "circnet/network.hpp"

namespace circnet {

/// Record of the perfect-orientation rewriting: which edges were created
/// (weight-1 connectors and blown-cycle edges), which edges had their weight
/// doubled (edges entering a blown vertex), and which original vertex each
/// new vertex came from. Contracting all new edges of the output recovers
/// the input up to this vertex identification.
struct ReductionTrace {
  std::set<std::string> new_edges;
  std::set<std::string> doubled_edges;
  std::map<std::string, std::string> vertex_origin;
  // Blowup vertex -> its clockwise cycle edge ids, in order.
  std::map<std::string, std::vector<std::string>> ring_edges;
};

/// Rewrites a planar network into a perfectly oriented one:
///   stage 1 pulls cyclically adjacent same-orientation edge pairs out of
///           high-degree vertices through weight-1 connector edges;
///   stage 2 blows up each remaining >=4-valent (alternating) vertex into a
///           clockwise cycle of weight-1 edges, doubling incoming weights;
///   stage 3 keeps all other weights.
/// Requires interior sources/sinks pruned and no degree-2 interior vertices.
std::pair<Network, ReductionTrace> perfect_orient(const Network& n);

/// Contracts the new edges out of a flow of the rewritten network: returns
/// the induced alternating flow of the original network together with the
/// set of blowup vertices whose full blown cycle was included while touched
/// by no original edge.
std::pair<AlternatingFlow, std::set<std::string>> contract_flow(
    const Network& original, const Network& rewritten,
    const ReductionTrace& trace, const Flow& flow);

/// Transports a positive weight assignment on the original edges to the
/// rewritten edges: new edges get 1, then every doubled edge is doubled.
std::map<std::string, Rational> weight_transport(
    const ReductionTrace& trace, const Network& rewritten,
    const std::map<std::string, Rational>& alpha);

}  // namespace circnet
