#pragma once

#include <map>
#include <string>
#include <vector>

#include "circnet/network.hpp"
#include "circnet/poly.hpp"

namespace circnet {

/// Directed walk between boundary positions, stored as its edge-id sequence.
/// Empty iff from == to (the trivial walk).
struct Walk {
  int from = 0;  // 1-based boundary position
  int to = 0;
  std::vector<std::string> edges;

  bool trivial() const { return edges.empty(); }
  bool operator==(const Walk& o) const {
    return from == o.from && to == o.to && edges == o.edges;
  }
};

/// Vertex sequence visited by a walk (length = edges + 1; the trivial walk
/// visits just its boundary vertex).
std::vector<std::string> walk_vertices(const Network& n, const Walk& w);
WeightExpr walk_weight(const Network& n, const Walk& w);

/// All walks from source position i to position j using at most max_edges
/// edges, ordered by (length, lexicographic edge ids). Includes the trivial
/// walk when i == j.
std::vector<Walk> enumerate_walks(const Network& n, int i, int j,
                                  int max_edges);

/// Loop-erasure: repeatedly removes the first completed cycle (the segment
/// ending just before the first repeated edge). Returns the self-avoiding
/// remainder and the number of cycles erased.
std::pair<Walk, int> loop_erase(const Walk& w);

/// Boundary measurement as a truncated series: the signed walk sum
/// sum (-1)^loop(P) wt(P) over walks of length <= bound, truncated at total
/// degree bound. The trivial walk contributes +1.
TruncatedSeries measurement_series(const Network& n, int i, int j,
                                   unsigned bound);

/// Number of elements of I strictly between i and j.
int sign_s(const std::vector<int>& I, int i, int j);

/// k x n matrix of signed measurements a_{tj} = (-1)^{s(i_t, j)} M_{i_t, j}.
std::vector<std::vector<TruncatedSeries>> measurement_matrix_series(
    const Network& n, unsigned bound);

/// Maximal minor with columns J, by permutation expansion over truncated
/// series of the signed measurement matrix.
TruncatedSeries minor_series(const Network& n, const std::vector<int>& J,
                             unsigned bound);
TruncatedSeries minor_of_matrix(
    const std::vector<std::vector<TruncatedSeries>>& matrix,
    const std::vector<int>& J, unsigned bound);

/// Bijection I -> J fixing every element of the intersection.
struct Bijection {
  std::map<int, int> map;

  std::vector<int> sources() const;
  std::vector<int> targets() const;
  int at(int i) const { return map.at(i); }
};

enum class PairKind { Crossing, Alignment, Misalignment };
const char* pair_kind_name(PairKind k);

/// Classification of the chord pair (i1, i2), i1 < i2 in I \ J, by the sign
/// of (i1-j2)(j2-j1)(j1-i2)(i2-i1) with j = pi(i).
PairKind classify_pair(int i1, int i2, const Bijection& pi);
int xing(const Bijection& pi);

/// All bijections I -> J that fix I intersect J pointwise.
std::vector<Bijection> bijections_fixing_common(const std::vector<int>& I,
                                                const std::vector<int>& J);

/// Minor as the signed bijection sum over products of unsigned measurements.
TruncatedSeries minor_via_bijections(const Network& n,
                                     const std::vector<int>& J,
                                     unsigned bound);

/// Unsigned measurement matrix M_{i_t, j} (no interlacing signs), for callers
/// that evaluate many column sets against one network.
std::vector<std::vector<TruncatedSeries>> measurement_matrix_unsigned(
    const Network& n, unsigned bound);
TruncatedSeries minor_via_bijections_of_matrix(
    const std::vector<std::vector<TruncatedSeries>>& unsigned_matrix,
    const std::vector<int>& I, const std::vector<int>& J, unsigned bound);

/// Validates that J is a legal column set (|J| = |I|, distinct, within [n]).
std::vector<int> checked_columns(const Network& n, const std::vector<int>& J);

}  // namespace circnet
