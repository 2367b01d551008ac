#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "circnet/poly.hpp"
#include "circnet/poly_parse.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace circnet;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

// Cycle weights of the running five-boundary example.
const char* kZ = "z1*z2*z3*z4";
const char* kW = "w1*w2*w3*w4";
const char* kY = "y1*y2*y3*y4";
const char* kT = "f*y2*y3*y4*g*w4*w1*w2";

}  // namespace

TEST_CASE("monomial canonical form and order") {
  Monomial m = Monomial::from_terms({{"b", 1}, {"a", 2}, {"c", 0}});
  CHECK(m.str() == "a^2*b");
  CHECK(m.total_degree() == 3);
  CHECK(m.exponent("a") == 2);
  CHECK(m.exponent("c") == 0);

  // Graded, then flattened-lexicographic.
  Monomial a2 = Monomial::from_terms({{"a", 2}});
  Monomial ab = Monomial::from_terms({{"a", 1}, {"b", 1}});
  Monomial b2 = Monomial::from_terms({{"b", 2}});
  CHECK(a2 < ab);
  CHECK(ab < b2);
  CHECK(Monomial::var("z") < a2);  // degree first
  CHECK(!(a2 < a2));

  CHECK((Monomial::var("x") * Monomial::var("x")).str() == "x^2");
  CHECK(Monomial::var("x").pow(3).str() == "x^3");
  CHECK(Monomial::var("x").pow(0).is_unit());
}

TEST_CASE("poly_add identities") {
  Poly z = P(kZ);
  CHECK((P("1") + z) + Poly() == P(std::string("1+") + kZ));
  CHECK(z + Poly::term(-1, Monomial::from_terms({{"z1", 1}, {"z2", 1}, {"z3", 1}, {"z4", 1}})) ==
        Poly());
  CHECK((P("(1+w)*(1+y)") + P("t")) == P("1+w+y+w*y+t"));
}

TEST_CASE("poly_mul matches the conservative-flow product") {
  Poly z = P(kZ);
  CHECK((P("1") + z) * P("1") == P("1") + z);
  CHECK((P("a1") + P("a2")) * Poly() == Poly());

  // The factored conservative generating function expands to exactly the
  // ten-term sum; the cycle pairs WT, YT share vertices, and indeed the
  // product never produces those terms.
  Poly lhs = (P("1") + P(kZ)) * (P("1") + P(kW) + P(kY) + P(kW) * P(kY) + P(kT));
  Poly expected = P("1") + P(kW) + P(kY) + P(kZ) + P(kT) + P(kW) * P(kZ) +
                  P(kW) * P(kY) + P(kY) * P(kZ) + P(kW) * P(kY) * P(kZ) +
                  P(kZ) * P(kT);
  CHECK(lhs == expected);
  CHECK(lhs.terms().size() == 10);
  CHECK(lhs.coeff(Monomial()) == 1);
}

TEST_CASE("series_invert geometric series") {
  Poly one_plus_z = P("1") + P(kZ);
  // Z has degree 4: degrees 0, 4, 8 fit under 11, and degree 12 appears
  // exactly when the bound reaches it.
  CHECK(series_invert(one_plus_z, 11).poly == P("1") - P(kZ) + P(kZ) * P(kZ));
  CHECK(series_invert(one_plus_z, 12).poly ==
        P("1") - P(kZ) + P(kZ) * P(kZ) - P(kZ) * P(kZ) * P(kZ));
  CHECK(series_invert(P("1"), 9).poly == P("1"));

  Poly cdef = P("c*d*e*f");
  TruncatedSeries inv = series_invert(P("1") + cdef, 8);
  CHECK(inv.poly == P("1") - cdef + cdef * cdef);
  // Multiply back: the product is 1 modulo degree > 8.
  CHECK(((P("1") + cdef) * inv.poly).truncated(8) == P("1"));

  CHECK_THROWS_AS(series_invert(P("2+x"), 4), Error);
  CHECK_THROWS_AS(series_invert(Poly(), 4), Error);
}

TEST_CASE("series_mul and series_div truncation boundaries") {
  Poly num = P("a1*z4*a2");
  Poly den = P("1") + P(kZ);
  CHECK(series_div(num, den, 10).poly == num - num * P(kZ));
  CHECK(series_div(num, den, 11).poly == num - num * P(kZ) + num * P(kZ) * P(kZ));
  CHECK(series_div(Poly(), den, 8).poly == Poly());

  Poly f6 = P("a4*d*a3");
  Poly cdef = P("c*d*e*f");
  CHECK(series_div(f6, P("1") + cdef, 10).poly == f6 - f6 * cdef);
  CHECK(series_div(f6, P("1") + cdef, 11).poly == f6 - f6 * cdef + f6 * cdef * cdef);
}

TEST_CASE("specialize") {
  std::map<std::string, Rational> ones{{"c", 1}, {"d", 1}, {"e", 1}, {"f", 1}};
  CHECK(specialize(P("1+c*d*e*f"), ones) == 2);

  std::map<std::string, Rational> zs{{"z1", make_rational(1, 2)},
                                     {"z2", 2},
                                     {"z3", 3},
                                     {"z4", make_rational(1, 3)}};
  CHECK(specialize(P("1") + P(kZ), zs) == 2);

  CHECK_THROWS_WITH_AS(specialize(P("x*y"), {{"x", 1}}) == 0,
                       "UnboundVariable: no value for variable y", Error);
}

TEST_CASE("rationalfn equality is cross-multiplication") {
  Poly f = P("a4*w2*f*y2*a5") * (P("1") + P(kZ));
  Poly g = (P("1") + P(kZ)) * (P("(1+" + std::string(kW) + ")*(1+" + kY + ")") + P(kT));
  Poly reduced_num = P("a4*w2*f*y2*a5");
  Poly reduced_den = P("(1+" + std::string(kW) + ")*(1+" + kY + ")") + P(kT);

  RationalFn unreduced(f, g), reduced(reduced_num, reduced_den);
  CHECK(rationalfn_eq(unreduced, reduced));
  CHECK(rationalfn_eq(RationalFn(f, g),
                      RationalFn(f * (P("1") + P(kZ)), g * (P("1") + P(kZ)))));
  CHECK(!rationalfn_eq(RationalFn(P(kZ), P("1")), RationalFn(P(kW), P("1"))));
  CHECK_THROWS_AS(RationalFn(P("1"), P("x")), Error);
}

TEST_CASE("canonical rendering") {
  CHECK(Poly().str() == "0");
  CHECK(P("1+z1*z2*z3*z4").str() == "1 + z1*z2*z3*z4");
  CHECK((P("x") - P("2*y")).str() == "x - 2*y");
  CHECK((-P("x") + P("1")).str() == "1 - x");
  CHECK(Poly::term(make_rational(3, 2), Monomial::var("u", 2)).str() == "3/2*u^2");
  CHECK(RationalFn(P("x"), P("1+y")).str() == "(x) / (1 + y)");
  // Ascending degree, then flattened-lex within a degree.
  CHECK((P("b*b") + P("a*b") + P("a*a") + P("c") + P("5")).str() ==
        "5 + c + a^2 + a*b + b^2");
}

TEST_CASE("parser round trips and weight expressions") {
  for (auto* s : {"0", "1 + x", "x - 2*y", "3/2*u^2", "1 + a^2 + a*b"}) {
    Poly p = P(s);
    CHECK(parse_poly(p.str()) == p);
  }
  auto [num, den] = parse_ratio("(a4*w2) / (1 + w1*w2)");
  CHECK(num == P("a4*w2"));
  CHECK(den == P("1+w1*w2"));
  auto [n2, d2] = parse_ratio("x + y");
  CHECK(d2 == P("1"));

  WeightExpr w = parse_weight("2*x1");
  CHECK(w.coeff == 2);
  CHECK(w.mono == Monomial::var("x1"));
  CHECK(parse_weight("3/2").coeff == make_rational(3, 2));
  CHECK(parse_weight("u*w").mono == Monomial::var("u") * Monomial::var("w"));
  CHECK_THROWS_AS(parse_weight("1+x"), Error);
  CHECK_THROWS_AS(parse_weight("0"), Error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 eng(20260811);
  std::vector<std::string> vars{"a", "b", "c", "d", "e", "f"};
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = testing::random_poly(eng, vars, 4, 2);
    Poly q = testing::random_poly(eng, vars, 4, 2);
    Poly r = testing::random_poly(eng, vars, 4, 2);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + Poly() == p);
    CHECK(p * P("1") == p);
    CHECK(p - p == Poly());
  }
}

TEST_CASE("series inverse property: g * invert(g) == 1") {
  std::mt19937_64 eng(7);
  std::vector<std::string> vars{"a", "b", "c"};
  for (int trial = 0; trial < 40; ++trial) {
    Poly g = testing::random_poly(eng, vars, 4, 2);
    g -= Poly(g.constant_term());
    g += P("1");
    unsigned bound = 2 + (unsigned)(eng() % 13);
    Poly h = series_invert(g, bound).poly;
    CHECK((g * h).truncated(bound) == P("1"));
  }
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937_64 eng(99);
  std::vector<std::string> vars{"a", "b", "c", "d"};
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = testing::random_poly(eng, vars, 4, 2);
    Poly q = testing::random_poly(eng, vars, 4, 2);
    std::map<std::string, Rational> assign;
    for (auto& v : vars)
      assign[v] = make_rational((long)(eng() % 9) - 4, 1 + (long)(eng() % 5));
    CHECK(specialize(p * q, assign) == specialize(p, assign) * specialize(q, assign));
    CHECK(specialize(p + q, assign) == specialize(p, assign) + specialize(q, assign));
  }
}

TEST_CASE("rationalfn_eq is an equivalence relation") {
  std::mt19937_64 eng(4242);
  std::vector<std::string> vars{"a", "b"};
  for (int trial = 0; trial < 25; ++trial) {
    Poly f = testing::random_poly(eng, vars, 3, 2);
    Poly m1 = P("1") + testing::random_poly(eng, vars, 2, 2) * P("a");
    Poly m2 = P("1") + testing::random_poly(eng, vars, 2, 2) * P("b");
    // Three representatives of one value, plus reflexivity on each.
    RationalFn r1(f, P("1"));
    RationalFn r2(f * m1, m1);
    RationalFn r3(f * m2, m2);
    CHECK(rationalfn_eq(r1, r1));
    CHECK(rationalfn_eq(r1, r2));
    CHECK(rationalfn_eq(r2, r1));
    CHECK((rationalfn_eq(r1, r2) && rationalfn_eq(r2, r3)) == rationalfn_eq(r1, r3));
  }
}
