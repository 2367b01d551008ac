#pragma once

#include <string>
#include <utility>

#include "circnet/poly.hpp"

namespace circnet {

/// Parses a polynomial expression: sums/differences of products of factors,
/// where a factor is a parenthesized expression, a variable (optionally with
/// `^exp`), or a rational literal `p` / `p/q`. `/` between non-literal
/// expressions is rejected here; use parse_ratio for a top-level quotient.
Poly parse_poly(const std::string& text);

/// Parses `EXPR` or `EXPR / EXPR` with the quotient split at parenthesis
/// depth 0. A missing denominator yields denominator 1.
std::pair<Poly, Poly> parse_ratio(const std::string& text);

/// Weight expression of a network edge: a single term `coeff`, `monomial`,
/// or `coeff*monomial` with a positive coefficient.
struct WeightExpr {
  Rational coeff = 1;
  Monomial mono;

  WeightExpr() = default;
  WeightExpr(Rational c, Monomial m) : coeff(std::move(c)), mono(std::move(m)) {}
  static WeightExpr variable(const std::string& name) {
    return WeightExpr(1, Monomial::var(name));
  }

  WeightExpr operator*(const WeightExpr& o) const {
    return WeightExpr(coeff * o.coeff, mono * o.mono);
  }
  bool operator==(const WeightExpr& o) const {
    return coeff == o.coeff && mono == o.mono;
  }
  Poly poly() const { return Poly::term(coeff, mono); }
  std::string str() const;
};

WeightExpr parse_weight(const std::string& text);

}  // namespace circnet
