#include "circnet/walks.hpp"

#include <algorithm>

namespace circnet {

std::vector<std::string> walk_vertices(const Network& n, const Walk& w) {
  std::vector<std::string> vs;
  vs.push_back(n.boundary[w.from - 1].id);
  for (auto& id : w.edges) vs.push_back(n.edge(id)->head);
  return vs;
}

WeightExpr walk_weight(const Network& n, const Walk& w) {
  WeightExpr wt;
  for (auto& id : w.edges) wt = wt * n.edge(id)->weight;
  return wt;
}

std::vector<Walk> enumerate_walks(const Network& n, int i, int j,
                                  int max_edges) {
  if (i < 1 || i > n.n() || j < 1 || j > n.n())
    throw Error(Errc::BadArgument, "boundary position out of range");
  if (n.boundary[i - 1].role != Role::Source)
    throw Error(Errc::NotASource,
                "boundary position " + std::to_string(i) + " is not a source");
  Adjacency adj(n);
  std::vector<Walk> result;
  if (i == j) result.push_back({i, j, {}});

  const std::string target = n.boundary[j - 1].id;
  std::vector<std::string> path;
  auto dfs = [&](auto&& self, const std::string& at) -> void {
    if (at == target && !path.empty()) result.push_back({i, j, path});
    if ((int)path.size() >= max_edges) return;
    for (int e : adj.out(at)) {
      path.push_back(n.edges[e].id);
      self(self, n.edges[e].head);
      path.pop_back();
    }
  };
  dfs(dfs, n.boundary[i - 1].id);

  std::sort(result.begin(), result.end(), [](const Walk& a, const Walk& b) {
    if (a.edges.size() != b.edges.size())
      return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return result;
}

std::pair<Walk, int> loop_erase(const Walk& w) {
  Walk out = w;
  int erased = 0;
  for (;;) {
    size_t r = 0, s = 0;
    bool found = false;
    for (size_t q = 1; q < out.edges.size() && !found; ++q)
      for (size_t p = 0; p < q; ++p)
        if (out.edges[p] == out.edges[q]) {
          r = p;
          s = q;
          found = true;
          break;
        }
    if (!found) return {out, erased};
    out.edges.erase(out.edges.begin() + r, out.edges.begin() + s);
    ++erased;
  }
}

TruncatedSeries measurement_series(const Network& n, int i, int j,
                                   unsigned bound) {
  if (!is_perfectly_oriented(n))
    throw Error(Errc::NotPerfectlyOriented,
                "measurement series need a perfectly oriented network");
  // A constant-weight edge lets infinitely many walks share one monomial, so
  // the formal walk series has no finite coefficients. Closed forms via the
  // flow formula still apply there.
  for (auto& e : n.edges)
    if (e.weight.mono.total_degree() == 0)
      throw Error(Errc::BadArgument,
                  "walk series are ill-defined with constant-weight edge " + e.id);
  Poly sum;
  for (auto& walk : enumerate_walks(n, i, j, (int)bound)) {
    auto [erased, loops] = loop_erase(walk);
    WeightExpr wt = walk_weight(n, walk);
    Rational c = (loops % 2 == 0) ? wt.coeff : -wt.coeff;
    sum += Poly::term(c, wt.mono);
  }
  return TruncatedSeries(sum, bound);
}

int sign_s(const std::vector<int>& I, int i, int j) {
  if (std::find(I.begin(), I.end(), i) == I.end())
    throw Error(Errc::NotASource, "position " + std::to_string(i) + " not in I");
  int lo = std::min(i, j), hi = std::max(i, j), count = 0;
  for (int p : I)
    if (lo < p && p < hi) ++count;
  return count;
}

std::vector<std::vector<TruncatedSeries>> measurement_matrix_series(
    const Network& n, unsigned bound) {
  auto I = n.source_positions();
  std::vector<std::vector<TruncatedSeries>> matrix(I.size());
  for (size_t t = 0; t < I.size(); ++t) {
    matrix[t].reserve(n.n());
    for (int j = 1; j <= n.n(); ++j) {
      TruncatedSeries m = measurement_series(n, I[t], j, bound);
      if (sign_s(I, I[t], j) % 2 != 0) m.poly = -m.poly;
      matrix[t].push_back(m);
    }
  }
  return matrix;
}

std::vector<int> checked_columns(const Network& n, const std::vector<int>& J) {
  auto I = n.source_positions();
  std::vector<int> cols = J;
  std::sort(cols.begin(), cols.end());
  if (cols.size() != I.size() ||
      std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    throw Error(Errc::BadColumnSet, "need |J| = |I| distinct columns");
  for (int j : cols)
    if (j < 1 || j > n.n())
      throw Error(Errc::BadColumnSet, "column " + std::to_string(j) + " out of range");
  return cols;
}

TruncatedSeries minor_of_matrix(
    const std::vector<std::vector<TruncatedSeries>>& matrix,
    const std::vector<int>& J, unsigned bound) {
  size_t k = matrix.size();
  Poly det;
  std::vector<bool> used(k, false);
  // Leibniz expansion; k stays small (<= 6) so this is fine.
  auto expand = [&](auto&& self, size_t row, int parity, const Poly& acc) -> void {
    if (row == k) {
      det += (parity % 2 == 0) ? acc : -acc;
      return;
    }
    for (size_t c = 0; c < k; ++c) {
      if (used[c]) continue;
      const Poly& entry = matrix[row][J[c] - 1].poly;
      if (entry.is_zero()) continue;
      int inv = 0;  // inversions added: earlier rows holding a larger column
      for (size_t d = c + 1; d < k; ++d)
        if (used[d]) ++inv;
      used[c] = true;
      self(self, row + 1, parity + inv, (acc * entry).truncated(bound));
      used[c] = false;
    }
  };
  expand(expand, 0, 0, Poly(1L));
  return TruncatedSeries(det, bound);
}

TruncatedSeries minor_series(const Network& n, const std::vector<int>& J,
                             unsigned bound) {
  auto cols = checked_columns(n, J);
  return minor_of_matrix(measurement_matrix_series(n, bound), cols, bound);
}

std::vector<int> Bijection::sources() const {
  std::vector<int> v;
  for (auto& [i, j] : map) v.push_back(i);
  return v;
}

std::vector<int> Bijection::targets() const {
  std::vector<int> v;
  for (auto& [i, j] : map) v.push_back(j);
  std::sort(v.begin(), v.end());
  return v;
}

const char* pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::Crossing: return "crossing";
    case PairKind::Alignment: return "alignment";
    case PairKind::Misalignment: return "misalignment";
  }
  return "?";
}

PairKind classify_pair(int i1, int i2, const Bijection& pi) {
  long j1 = pi.at(i1), j2 = pi.at(i2);
  // Chords [b_{i1}, b_{j1}] and [b_{i2}, b_{j2}] cross iff this product is
  // negative.
  long cross = (i1 - j2) * (j2 - j1) * (j1 - i2) * (i2 - i1);
  if (cross < 0) return PairKind::Crossing;
  // Misalignment iff [b_{i1}, b_{i2}] and [b_{j1}, b_{j2}] cross.
  long mis = (i1 - j2) * (j2 - i2) * (i2 - j1) * (j1 - i1);
  if (mis < 0) return PairKind::Misalignment;
  return PairKind::Alignment;
}

int xing(const Bijection& pi) {
  std::vector<int> free;
  for (auto& [i, j] : pi.map)
    if (i != j) free.push_back(i);
  int count = 0;
  for (size_t a = 0; a < free.size(); ++a)
    for (size_t b = a + 1; b < free.size(); ++b)
      if (classify_pair(free[a], free[b], pi) == PairKind::Crossing) ++count;
  return count;
}

std::vector<Bijection> bijections_fixing_common(const std::vector<int>& I,
                                                const std::vector<int>& J) {
  std::vector<int> from, to;
  for (int i : I)
    if (std::find(J.begin(), J.end(), i) == J.end()) from.push_back(i);
  for (int j : J)
    if (std::find(I.begin(), I.end(), j) == I.end()) to.push_back(j);
  std::sort(from.begin(), from.end());
  std::sort(to.begin(), to.end());

  std::vector<Bijection> result;
  std::vector<int> perm = to;
  // Base map fixes the common part.
  Bijection base;
  for (int i : I)
    if (std::find(J.begin(), J.end(), i) != J.end()) base.map[i] = i;
  do {
    Bijection b = base;
    for (size_t t = 0; t < from.size(); ++t) b.map[from[t]] = perm[t];
    result.push_back(b);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

std::vector<std::vector<TruncatedSeries>> measurement_matrix_unsigned(
    const Network& n, unsigned bound) {
  auto I = n.source_positions();
  std::vector<std::vector<TruncatedSeries>> matrix(I.size());
  for (size_t t = 0; t < I.size(); ++t)
    for (int j = 1; j <= n.n(); ++j)
      matrix[t].push_back(measurement_series(n, I[t], j, bound));
  return matrix;
}

TruncatedSeries minor_via_bijections_of_matrix(
    const std::vector<std::vector<TruncatedSeries>>& unsigned_matrix,
    const std::vector<int>& I, const std::vector<int>& J, unsigned bound) {
  Poly sum;
  for (auto& pi : bijections_fixing_common(I, J)) {
    Poly prod(1L);
    for (auto& [i, j] : pi.map) {
      size_t row = std::find(I.begin(), I.end(), i) - I.begin();
      prod = (prod * unsigned_matrix[row][j - 1].poly).truncated(bound);
      if (prod.is_zero()) break;
    }
    sum += (xing(pi) % 2 == 0) ? prod : -prod;
  }
  return TruncatedSeries(sum, bound);
}

TruncatedSeries minor_via_bijections(const Network& n,
                                     const std::vector<int>& J,
                                     unsigned bound) {
  auto cols = checked_columns(n, J);
  auto I = n.source_positions();
  return minor_via_bijections_of_matrix(measurement_matrix_unsigned(n, bound),
                                        I, cols, bound);
}

}  // namespace circnet
