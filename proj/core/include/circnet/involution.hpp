#pragma once

#include <string>
#include <vector>

#include "circnet/flows.hpp"
#include "circnet/network.hpp"
#include "circnet/walks.hpp"

namespace circnet {

/// Pair (C, P) of a conservative flow C and one walk per source, source i
/// routed to pi(i). Walks may intersect themselves, each other, and C; the
/// systems where they do not are exactly the flows.
struct WalkSystem {
  std::vector<std::vector<std::string>> cycles;  // canonical rotations, sorted
  std::vector<Walk> walks;                       // ascending source order

  Bijection pi() const;
  size_t edge_count() const;
  bool operator==(const WalkSystem& o) const {
    return cycles == o.cycles && walks == o.walks;
  }
};

/// True iff the walks are self-avoiding, pairwise vertex-disjoint, and
/// vertex-disjoint from C, i.e. (C, P) forms a flow.
bool is_flow_pair(const Network& n, const WalkSystem& ws);

/// The sign-reversing involution: tail swap at the first shared edge of the
/// first offending walk, or the first cycle moved between that walk and C.
/// Rejects systems that already form a flow.
WalkSystem phi(const Network& n, const WalkSystem& ws);

struct SignedWeight {
  int sign = 1;  // (-1)^(xing(pi) + sum loop(P_i))
  Monomial monomial;
};

SignedWeight signed_weight(const Network& n, const WalkSystem& ws);

/// Index of the first walk that self-intersects or meets C or a later walk;
/// -1 for flow pairs. Exposed because phi must preserve it.
int first_offender(const Network& n, const WalkSystem& ws);

/// All systems (C, P) routing I to J whose total edge usage (|C| plus walk
/// lengths) is at most the budget.
std::vector<WalkSystem> enumerate_walk_systems(const Network& n,
                                               const std::vector<int>& J,
                                               unsigned budget);

/// Verifies on every system within the budget that non-flow pairs cancel in
/// phi-orbits of size 2 (sign reversed, monomial kept) and that the signed
/// residue equals the flow generating function truncated at the budget.
bool cancellation_check(const Network& n, const std::vector<int>& J,
                        unsigned budget);

}  // namespace circnet
