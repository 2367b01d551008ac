#include "circnet/poly.hpp"

#include <algorithm>
#include <sstream>

namespace circnet {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ConstantTermNotOne: return "ConstantTermNotOne";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::MalformedDocument: return "MalformedDocument";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::DanglingVertex: return "DanglingVertex";
    case Errc::BoundaryDegree: return "BoundaryDegree";
    case Errc::MissingRotation: return "MissingRotation";
    case Errc::NotASource: return "NotASource";
    case Errc::NotPerfectlyOriented: return "NotPerfectlyOriented";
    case Errc::BadColumnSet: return "BadColumnSet";
    case Errc::Degree2SelfLoop: return "Degree2SelfLoop";
    case Errc::TooLarge: return "TooLarge";
    case Errc::IsAlreadyFlow: return "IsAlreadyFlow";
    case Errc::NonPositiveWeight: return "NonPositiveWeight";
    case Errc::PreprocessingRequired: return "PreprocessingRequired";
    case Errc::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code) {}

Monomial Monomial::var(const std::string& name, unsigned exp) {
  Monomial m;
  if (exp > 0) m.terms_.push_back({name, exp});
  return m;
}

Monomial Monomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  Monomial m;
  for (auto& [name, exp] : terms) {
    if (exp == 0) continue;
    if (!m.terms_.empty() && m.terms_.back().first == name)
      m.terms_.back().second += exp;
    else
      m.terms_.push_back({name, exp});
  }
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto& [name, exp] : terms_) d += exp;
  return d;
}

unsigned Monomial::exponent(const std::string& var) const {
  for (auto& [name, exp] : terms_)
    if (name == var) return exp;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first))
      r.terms_.push_back(*a++);
    else if (a == terms_.end() || b->first < a->first)
      r.terms_.push_back(*b++);
    else {
      r.terms_.push_back({a->first, a->second + b->second});
      ++a, ++b;
    }
  }
  return r;
}

Monomial Monomial::pow(unsigned e) const {
  Monomial r;
  if (e == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= e;
  return r;
}

bool Monomial::operator<(const Monomial& o) const {
  unsigned da = total_degree(), db = o.total_degree();
  if (da != db) return da < db;
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first != b->first) return a->first < b->first;
    // More copies of the shared smallest name sort earlier: a^2 < a*b.
    if (a->second != b->second) return a->second > b->second;
    ++a, ++b;
  }
  return false;
}

std::string Monomial::str() const {
  if (terms_.empty()) return "1";
  std::string s;
  for (auto& [name, exp] : terms_) {
    if (!s.empty()) s += "*";
    s += name;
    if (exp != 1) s += "^" + std::to_string(exp);
  }
  return s;
}

Poly::Poly(long v) {
  if (v != 0) terms_[Monomial()] = Rational(v);
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_[Monomial()] = c;
}

Poly::Poly(const Monomial& m) { terms_[m] = 1; }

Poly Poly::term(const Rational& coeff, const Monomial& m) {
  Poly p;
  if (coeff != 0) p.terms_[m] = coeff;
  return p;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff(Monomial()); }

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> vars;
  for (auto& [m, c] : terms_)
    for (auto& [name, exp] : m.terms()) vars.insert(name);
  return vars;
}

bool Poly::integer_coeffs() const {
  for (auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::truncated(unsigned bound) const {
  Poly r;
  for (auto& [m, c] : terms_)
    if (m.total_degree() <= bound) r.terms_[m] = c;
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (m.is_unit())
      out << a;
    else if (a == 1)
      out << m.str();
    else
      out << a << "*" << m.str();
  }
  return out.str();
}

Rational specialize(const Poly& p,
                    const std::map<std::string, Rational>& assignment) {
  Rational total = 0;
  for (auto& [m, c] : p.terms()) {
    Rational v = c;
    for (auto& [name, exp] : m.terms()) {
      auto it = assignment.find(name);
      if (it == assignment.end())
        throw Error(Errc::UnboundVariable, "no value for variable " + name);
      for (unsigned k = 0; k < exp; ++k) v *= it->second;
    }
    total += v;
  }
  return total;
}

RationalFn::RationalFn(Poly n, Poly d)
    : numer(std::move(n)), denom(std::move(d)) {
  // Ratios from variable-weighted networks have constant term exactly 1 (the
  // empty flow); unit-weight edges can push it higher, but never to zero.
  if (denom.constant_term() == 0)
    throw Error(Errc::BadArgument,
                "RationalFn denominator must have a nonzero constant term, got " +
                    denom.str());
}

std::string RationalFn::str() const {
  return "(" + numer.str() + ") / (" + denom.str() + ")";
}

bool rationalfn_eq(const RationalFn& a, const RationalFn& b) {
  return (a.numer * b.denom - b.numer * a.denom).is_zero();
}

RationalFn rf_add(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.numer * b.denom + b.numer * a.denom, a.denom * b.denom);
}

RationalFn rf_sub(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.numer * b.denom - b.numer * a.denom, a.denom * b.denom);
}

RationalFn rf_mul(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.numer * b.numer, a.denom * b.denom);
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.bound == b.bound && a.poly == b.poly;
}

bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
  return !(a == b);
}

TruncatedSeries series_invert(const Poly& g, unsigned bound) {
  if (g.constant_term() != 1)
    throw Error(Errc::ConstantTermNotOne,
                "series inversion needs constant term 1, got " +
                    g.constant_term().get_str());
  // h = sum_m (1-g)^m; (1-g) has no constant term, so powers gain degree.
  Poly u = (Poly(1L) - g).truncated(bound);
  Poly acc(1L), pw(1L);
  for (unsigned m = 1; m <= bound; ++m) {
    pw = (pw * u).truncated(bound);
    if (pw.is_zero()) break;
    acc += pw;
  }
  return TruncatedSeries(acc, bound);
}

TruncatedSeries series_mul(const TruncatedSeries& a,
                           const TruncatedSeries& b) {
  unsigned bound = std::min(a.bound, b.bound);
  return TruncatedSeries(a.poly * b.poly, bound);
}

TruncatedSeries series_mul(const Poly& a, const Poly& b, unsigned bound) {
  return TruncatedSeries(a * b, bound);
}

TruncatedSeries series_div(const Poly& f, const Poly& g, unsigned bound) {
  return TruncatedSeries(f * series_invert(g, bound).poly, bound);
}

TruncatedSeries ratio_series(const RationalFn& fn, unsigned bound) {
  Rational c = fn.denom.constant_term();
  Poly scale(Rational(1 / c));
  return series_div(scale * fn.numer, scale * fn.denom, bound);
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace circnet
