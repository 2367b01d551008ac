#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace circnet {

using Rational = mpq_class;
using Integer = mpz_class;

/// Error codes shared by all modules. `Error::code()` lets callers and the
/// CLI dispatch on the exact failure without string matching.
enum class Errc {
  ConstantTermNotOne,
  UnboundVariable,
  MalformedDocument,
  DuplicateId,
  DanglingVertex,
  BoundaryDegree,
  MissingRotation,
  NotASource,
  NotPerfectlyOriented,
  BadColumnSet,
  Degree2SelfLoop,
  TooLarge,
  IsAlreadyFlow,
  NonPositiveWeight,
  PreprocessingRequired,
  BadArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Product of variables with positive integer exponents, kept in canonical
/// form: entries sorted by variable name, no zero exponents. The empty
/// monomial is the unit.
class Monomial {
 public:
  using Term = std::pair<std::string, unsigned>;

  Monomial() = default;
  static Monomial var(const std::string& name, unsigned exp = 1);
  static Monomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_unit() const { return terms_.empty(); }
  unsigned total_degree() const;
  unsigned exponent(const std::string& var) const;

  Monomial operator*(const Monomial& o) const;
  Monomial pow(unsigned e) const;

  bool operator==(const Monomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Graded order: total degree first, then lexicographic on the flattened
  // variable sequence (so a^2 < a*b < b^2). This is the canonical print
  // order, so Poly iteration yields terms ready for rendering.
  bool operator<(const Monomial& o) const;

  std::string str() const;  // "x*y^2"; "1" for the unit monomial

 private:
  std::vector<Term> terms_;
};

/// Exact multivariate polynomial, a sparse map from monomials to nonzero
/// rational coefficients. Coefficients are integers in every formula this
/// library computes from variable-weighted networks; rationals appear only
/// when a network document carries rational edge weights.
class Poly {
 public:
  Poly() = default;
  Poly(long v);
  Poly(const Rational& c);
  Poly(const Monomial& m);
  static Poly term(const Rational& coeff, const Monomial& m);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;
  unsigned total_degree() const;  // 0 for the zero polynomial
  std::set<std::string> variables() const;
  bool integer_coeffs() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Drops every term of total degree > bound.
  Poly truncated(unsigned bound) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// Exact evaluation. Every variable of p must be bound.
Rational specialize(const Poly& p,
                    const std::map<std::string, Rational>& assignment);

/// Unreduced ratio of polynomials. The denominator must have a nonzero
/// constant term; it is exactly 1 for every ratio over variable edge
/// weights, where the only constant conservative flow is the empty one.
/// Never reduced to lowest terms; equality is cross-multiplication.
struct RationalFn {
  Poly numer;
  Poly denom;

  RationalFn(Poly n, Poly d);
  std::string str() const;  // "(numer) / (denom)"
};

bool rationalfn_eq(const RationalFn& a, const RationalFn& b);
RationalFn rf_add(const RationalFn& a, const RationalFn& b);
RationalFn rf_sub(const RationalFn& a, const RationalFn& b);
RationalFn rf_mul(const RationalFn& a, const RationalFn& b);

/// Formal power series truncated at a total-degree bound (inclusive): the
/// polynomial part never contains a monomial of total degree > bound.
struct TruncatedSeries {
  Poly poly;
  unsigned bound = 0;

  TruncatedSeries() = default;
  TruncatedSeries(Poly p, unsigned b) : poly(p.truncated(b)), bound(b) {}
};

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b);

/// Neumann-series inverse of g modulo total degree > bound. Requires the
/// constant term of g to be exactly +1.
TruncatedSeries series_invert(const Poly& g, unsigned bound);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const Poly& a, const Poly& b, unsigned bound);
TruncatedSeries series_div(const Poly& f, const Poly& g, unsigned bound);

/// Series expansion of an unreduced ratio; scales numerator and denominator
/// by the denominator's constant term first, so it also covers ratios whose
/// constant term is not 1.
TruncatedSeries ratio_series(const RationalFn& fn, unsigned bound);

/// Makes a canonical rational from a fraction (den != 0).
Rational make_rational(const Integer& num, const Integer& den);

}  // namespace circnet
