#include <doctest.h>

#include "orbitham/taupoly.hpp"

using namespace orbitham;

TEST_CASE("NuPoly arithmetic and printing") {
  NuPoly nu = NuPoly::nu();
  NuPoly p = NuPoly(BigInt(2)) + NuPoly(BigInt(3)) * nu;  // 2 + 3nu
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == 2);
  CHECK(p.coeff(1) == 3);
  CHECK(p.eval(Rational(1, 3)) == Rational(3));
  CHECK((p - p).is_zero());
  NuPoly q = p * p;
  CHECK(q.coeff(0) == 4);
  CHECK(q.coeff(1) == 12);
  CHECK(q.coeff(2) == 9);
  CHECK(p.str() == "3*nu + 2");
}

TEST_CASE("NuPoly gcd and exact division") {
  NuPoly nu = NuPoly::nu();
  NuPoly a = (nu + NuPoly(BigInt(1))) * (nu + NuPoly(BigInt(2))) * NuPoly(BigInt(6));
  NuPoly b = (nu + NuPoly(BigInt(1))) * NuPoly(BigInt(4));
  NuPoly g = NuPoly::gcd(a, b);
  CHECK(g == nu + NuPoly(BigInt(1)));  // primitive gcd
  CHECK(a.divide_exact(g) == (nu + NuPoly(BigInt(2))) * NuPoly(BigInt(6)));
  CHECK_THROWS_AS(a.divide_exact(nu + NuPoly(BigInt(5))), Error);
}

TEST_CASE("NuCoefficient canonical form") {
  NuPoly nu = NuPoly::nu();
  // (2nu + 2) / (4nu + 4) = 1/2
  NuCoefficient c(NuPoly(BigInt(2)) * (nu + NuPoly(BigInt(1))),
                  NuPoly(BigInt(4)) * (nu + NuPoly(BigInt(1))));
  CHECK(c == NuCoefficient(Rational(1, 2)));
  CHECK(c.as_rational() == Rational(1, 2));
  // negative leading denominator is normalized away
  NuCoefficient d(NuPoly(BigInt(1)), NuPoly(BigInt(0)) - nu);
  CHECK(d.den().coeffs().back() > 0);
  // structural equality after arithmetic
  NuCoefficient x = NuCoefficient::nu() / (NuCoefficient::nu() + NuCoefficient(Rational(1)));
  NuCoefficient y = (x + x) - x;
  CHECK(x == y);
}

TEST_CASE("NuCoefficient evaluation and poles") {
  NuCoefficient x = NuCoefficient(Rational(240)) * NuCoefficient::nu() /
                    (NuCoefficient(Rational(1)) +
                     NuCoefficient(Rational(29)) * NuCoefficient::nu());
  CHECK(x.eval(Rational(0)) == Rational(0));
  CHECK(x.eval(Rational(1)) == Rational(8));  // 240/30
  CHECK_FALSE(x.eval(Rational(-1, 29)).has_value());
  auto lin = (NuCoefficient(Rational(-2)) +
              NuCoefficient(Rational(-58)) * NuCoefficient::nu())
                 .as_linear();
  REQUIRE(lin.has_value());
  CHECK(lin->first == -2);
  CHECK(lin->second == -58);
}

TEST_CASE("tau polynomial arithmetic") {
  TauPoly p;
  p.add_term(Weight{1, 0}, Rational(2));
  p.add_term(Weight{0, 1}, Rational(-1));
  TauPoly q = p * p;
  CHECK(q.terms.at(Weight{2, 0}) == 4);
  CHECK(q.terms.at(Weight{1, 1}) == -4);
  CHECK(q.terms.at(Weight{0, 2}) == 1);
  CHECK(q.total_degree() == 2);
  // cancellation removes the term entirely
  TauPoly z = p - p;
  CHECK(z.is_zero());
  // derivative
  TauPoly dp = q.derivative(1);
  CHECK(dp.terms.at(Weight{1, 0}) == 8);
  CHECK(dp.terms.at(Weight{0, 1}) == -4);
  CHECK(q.derivative(1).derivative(2) == q.derivative(2).derivative(1));
}

TEST_CASE("tau polynomial evaluation") {
  TauPoly p;
  p.add_term(Weight{2, 1}, Rational(3));
  p.add_term(Weight{0, 0}, Rational(-5));
  CHECK(eval_exact(p, {Rational(2), Rational(7)}) == 3 * 4 * 7 - 5);
  CHECK(eval_double(p, {2.0, 7.0}) == doctest::Approx(79.0));
}

TEST_CASE("nu-valued tau polynomials and numeric substitution") {
  TauPoly p;
  p.add_term(Weight{1, 0}, Rational(1));
  NuTauPoly np = to_nu_poly(p);
  NuCoefficient pole = NuCoefficient(Rational(1)) /
                       (NuCoefficient(Rational(1)) - NuCoefficient::nu());
  np.add_term(Weight{0, 0}, pole);
  TauPoly at_half = eval_nu(np, Rational(1, 2));
  CHECK(at_half.terms.at(Weight{0, 0}) == Rational(2));
  CHECK_THROWS_AS(eval_nu(np, Rational(1)), Error);
}

TEST_CASE("polynomial printing is graded") {
  TauPoly p;
  p.add_term(Weight{0, 0, 0, 0, 0, 0, 0, 0}, Rational(240));
  p.add_term(Weight{1, 0, 0, 0, 0, 0, 0, 0}, Rational(29));
  CHECK(tau_poly_str(p) == "240 + 29*t1");
}
