#include "circnet/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "circnet/flows.hpp"
#include "circnet/involution.hpp"
#include "circnet/transform.hpp"

namespace circnet {

std::vector<std::vector<int>> all_column_sets(const Network& n) {
  size_t k = n.source_positions().size();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int j = from; j <= n.n(); ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

std::string describe(const Network& n, const std::vector<int>& J,
                     const std::string& what) {
  std::string cols;
  for (int j : J) cols += (cols.empty() ? "" : ",") + std::to_string(j);
  return what + " at J={" + cols + "} on " + serialize_network(n);
}

std::map<std::vector<int>, Poly> flow_gfs_by_destination(const Network& n) {
  std::map<std::vector<int>, Poly> gf;
  for (auto& f : enumerate_all_flows(n)) gf[f.destination] += f.weight.poly();
  return gf;
}

}  // namespace

CheckResult check_main_series(const Network& n, unsigned bound) {
  CheckResult r{"main-series", true, ""};
  auto gfs = flow_gfs_by_destination(n);
  Poly g = gfs[n.source_positions()];
  auto matrix = measurement_matrix_series(n, bound);
  for (auto& J : all_column_sets(n)) {
    Poly f = gfs.count(J) ? gfs[J] : Poly();
    TruncatedSeries flow_route = series_div(f, g, bound);
    TruncatedSeries det_route = minor_of_matrix(matrix, J, bound);
    if (flow_route != det_route) {
      r.pass = false;
      r.details = describe(n, J, "flow series != determinant series");
      return r;
    }
  }
  return r;
}

CheckResult check_route_equality(const Network& n, unsigned bound) {
  CheckResult r{"route-equality", true, ""};
  auto signed_matrix = measurement_matrix_series(n, bound);
  auto unsigned_matrix = measurement_matrix_unsigned(n, bound);
  auto I = n.source_positions();
  for (auto& J : all_column_sets(n)) {
    TruncatedSeries det = minor_of_matrix(signed_matrix, J, bound);
    TruncatedSeries bij =
        minor_via_bijections_of_matrix(unsigned_matrix, I, J, bound);
    if (det != bij) {
      r.pass = false;
      r.details = describe(n, J, "determinant route != bijection route");
      return r;
    }
  }
  return r;
}

std::map<std::string, Rational> random_positive_weights(const Network& n,
                                                        std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::map<std::string, Rational> alpha;
  for (auto& e : n.edges)
    alpha[e.id] = make_rational(Integer(1 + (long)(eng() % 12)),
                                Integer(1 + (long)(eng() % 7)));
  return alpha;
}

namespace {

/// Fresh-variable copy: every edge weight becomes the variable named by its
/// edge id, so specialization can be keyed by edge.
Network relabel_by_edge_id(const Network& n) {
  Network out = n;
  for (auto& e : out.edges) e.weight = WeightExpr::variable(e.id);
  return out;
}

Rational eval_ratio(const RationalFn& fn,
                    const std::map<std::string, Rational>& alpha,
                    bool* zero_denominator) {
  Rational den = specialize(fn.denom, alpha);
  if (den == 0) {
    *zero_denominator = true;
    return 0;
  }
  *zero_denominator = false;
  return specialize(fn.numer, alpha) / den;
}

}  // namespace

CheckResult check_general_formula(const Network& n, std::uint64_t seed,
                                  int specializations) {
  CheckResult r{"general-formula", true, ""};
  auto [reduced, trace] = perfect_orient(n);

  auto I = n.source_positions();
  std::map<std::vector<int>, Poly> general_gf;
  for (auto& f : enumerate_all_alternating_flows(n)) {
    Rational c = f.weight.coeff;
    for (int k = 0; k < f.theta; ++k) c *= 2;
    general_gf[f.destination] += Poly::term(c, f.weight.mono);
  }
  auto reduced_gf = flow_gfs_by_destination(reduced);

  Poly gen_den = general_gf[I];
  Poly red_den = reduced_gf[I];
  for (auto& J : all_column_sets(n)) {
    Poly gen_num = general_gf.count(J) ? general_gf[J] : Poly();
    Poly red_num = reduced_gf.count(J) ? reduced_gf[J] : Poly();
    // Corollary-of-reduction identity: the reduced network's flow ratio
    // carries an extra 2^|B(G)| in both entries, so cross-multiply.
    if (gen_num * red_den != red_num * gen_den) {
      r.pass = false;
      r.details = describe(n, J, "alternating-flow formula != reduced flow formula");
      return r;
    }
  }

  // Numeric route through weight transport, on fresh-variable copies.
  Network base = relabel_by_edge_id(n);
  Network fresh = relabel_by_edge_id(reduced);
  auto fresh_gf = flow_gfs_by_destination(fresh);
  std::map<std::vector<int>, Poly> base_gf;
  for (auto& f : enumerate_all_alternating_flows(base)) {
    Rational c = f.weight.coeff;
    for (int k = 0; k < f.theta; ++k) c *= 2;
    base_gf[f.destination] += Poly::term(c, f.weight.mono);
  }
  for (int t = 0; t < specializations; ++t) {
    auto alpha = random_positive_weights(base, seed + 77 * t + 1);
    auto alpha_prime = weight_transport(trace, fresh, alpha);
    std::map<std::string, Rational> assign(alpha.begin(), alpha.end());
    std::map<std::string, Rational> assign_prime(alpha_prime.begin(),
                                                 alpha_prime.end());
    for (auto& J : all_column_sets(n)) {
      Poly bn = base_gf.count(J) ? base_gf[J] : Poly();
      Poly fn = fresh_gf.count(J) ? fresh_gf[J] : Poly();
      Rational lhs_num = specialize(bn, assign);
      Rational lhs_den = specialize(base_gf[I], assign);
      Rational rhs_num = specialize(fn, assign_prime);
      Rational rhs_den = specialize(fresh_gf[I], assign_prime);
      if (lhs_num * rhs_den != rhs_num * lhs_den) {
        r.pass = false;
        r.details = describe(n, J, "specialized formula mismatch");
        return r;
      }
    }
  }
  return r;
}

Rational path_determinant(const Network& n, const std::vector<int>& J,
                          const std::map<std::string, Rational>& alpha) {
  Adjacency adj(n);
  auto I = n.source_positions();
  auto path_sum = [&](int i, int j) {
    Rational total = 0;  // the trivial path is counted by the DFS when i == j
    const std::string target = n.boundary[j - 1].id;
    auto dfs = [&](auto&& self, const std::string& at, Rational acc) -> void {
      if (at == target) {
        total += acc;
        return;
      }
      for (int e : adj.out(at))
        self(self, n.edges[e].head, acc * alpha.at(n.edges[e].id));
    };
    dfs(dfs, n.boundary[i - 1].id, 1);
    return total;
  };

  size_t k = I.size();
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (size_t t = 0; t < k; ++t)
    for (size_t c = 0; c < k; ++c) {
      Rational v = path_sum(I[t], J[c]);
      if (sign_s(I, I[t], J[c]) % 2 != 0) v = -v;
      m[t][c] = v;
    }

  // Leibniz over k <= 6.
  Rational det = 0;
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self, size_t row, int parity, Rational acc) -> void {
    if (row == k) {
      det += parity % 2 == 0 ? acc : -acc;
      return;
    }
    for (size_t c = 0; c < k; ++c) {
      if (used[c]) continue;
      int inv = 0;
      for (size_t d = c + 1; d < k; ++d)
        if (used[d]) ++inv;
      used[c] = true;
      self(self, row + 1, parity + inv, acc * m[row][c]);
      used[c] = false;
    }
  };
  rec(rec, 0, 0, Rational(1));
  return det;
}

CheckResult check_lindstrom(const Network& n, std::uint64_t seed) {
  CheckResult r{"lindstrom", true, ""};
  Poly g = conservative_gf(n);
  if (g != Poly(1L)) {
    r.pass = false;
    r.details = "conservative generating function is not 1: " + g.str() +
                " on " + serialize_network(n);
    return r;
  }
  Network base = relabel_by_edge_id(n);
  auto gfs = flow_gfs_by_destination(base);
  auto alpha = random_positive_weights(base, seed);
  std::map<std::string, Rational> assign(alpha.begin(), alpha.end());
  for (auto& J : all_column_sets(base)) {
    Poly f = gfs.count(J) ? gfs[J] : Poly();
    Rational lhs = specialize(f, assign);
    Rational rhs = path_determinant(base, J, alpha);
    if (lhs != rhs) {
      r.pass = false;
      r.details = describe(base, J, "flow formula != path determinant");
      return r;
    }
  }
  return r;
}

CheckResult check_involution(const Network& n, unsigned budget) {
  CheckResult r{"involution", true, ""};
  for (auto& J : all_column_sets(n)) {
    if (!cancellation_check(n, J, budget)) {
      r.pass = false;
      r.details = describe(n, J, "involution cancellation failed");
      return r;
    }
  }
  return r;
}

CheckResult check_nonplanar(const Network& n, unsigned bound) {
  CheckResult r{"nonplanar", true, ""};
  auto gfs = flow_gfs_by_destination(n);
  auto I = n.source_positions();
  Poly g = gfs[I];
  auto matrix = measurement_matrix_series(n, bound);
  for (auto& J : all_column_sets(n)) {
    std::vector<int> outside;
    for (int j : J)
      if (std::find(I.begin(), I.end(), j) == I.end()) outside.push_back(j);
    bool measurement_type = outside.size() <= 1;
    TruncatedSeries det_route = minor_of_matrix(matrix, J, bound);
    if (measurement_type) {
      Poly f = gfs.count(J) ? gfs[J] : Poly();
      if (series_div(f, g, bound) != det_route) {
        r.pass = false;
        r.details = describe(n, J, "measurement-type flow formula failed");
        return r;
      }
    }
    if (!gf2_plucker_check(n, J, bound)) {
      r.pass = false;
      r.details = describe(n, J, "mod-2 flow formula failed");
      return r;
    }
  }
  return r;
}

}  // namespace circnet
