#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circnet/network.hpp"
#include "circnet/poly.hpp"
#include "circnet/walks.hpp"

namespace circnet {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string details;
};

/// Every k-subset of boundary positions, ascending.
std::vector<std::vector<int>> all_column_sets(const Network& n);

/// Flow-formula series equals the determinant-route series for every column
/// set at the given bound (perfectly oriented networks).
CheckResult check_main_series(const Network& n, unsigned bound);

/// Determinant route equals the signed bijection route for every column set.
CheckResult check_route_equality(const Network& n, unsigned bound);

/// Alternating-flow formula against the perfect-orientation reduction:
/// symbolic cross-multiplication equality for every column set, plus the
/// given number of random positive rational specializations routed through
/// weight transport. Requires a pruned planar network without degree-2
/// interior vertices.
CheckResult check_general_formula(const Network& n, std::uint64_t seed,
                                  int specializations);

/// Acyclic degeneration: conservative generating function 1, and the flow
/// formula matches an independent vertex-disjoint-path determinant oracle at
/// random rational weights.
CheckResult check_lindstrom(const Network& n, std::uint64_t seed);

/// Involution orbit structure and cancellation for every column set within
/// the edge budget.
CheckResult check_involution(const Network& n, unsigned budget);

/// Non-planar checks: measurement-type minors satisfy the flow formula
/// exactly; all minors satisfy it mod 2.
CheckResult check_nonplanar(const Network& n, unsigned bound);

/// Exact signed path-matrix determinant at the given weights; independent
/// oracle used by the acyclic degeneration check (walks in a DAG are paths,
/// so plain DFS enumeration suffices).
Rational path_determinant(const Network& n, const std::vector<int>& J,
                          const std::map<std::string, Rational>& alpha);

/// Random positive rational assignment to every edge weight variable.
std::map<std::string, Rational> random_positive_weights(const Network& n,
                                                        std::uint64_t seed);

}  // namespace circnet
