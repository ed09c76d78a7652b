#ifndef ORBITHAM_NUPOLY_HPP
#define ORBITHAM_NUPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitham/common.hpp"

namespace orbitham {

// Univariate polynomial in the coupling nu with exact integer coefficients,
// stored densely, lowest degree first.
class NuPoly {
public:
  NuPoly() = default;
  explicit NuPoly(BigInt constant);
  static NuPoly from_coeffs(std::vector<BigInt> coeffs);
  static NuPoly nu();  // the monomial nu

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const BigInt& coeff(int k) const;                               // 0 outside range
  const std::vector<BigInt>& coeffs() const { return c_; }

  NuPoly operator-() const;
  NuPoly operator+(const NuPoly& o) const;
  NuPoly operator-(const NuPoly& o) const;
  NuPoly operator*(const NuPoly& o) const;
  bool operator==(const NuPoly& o) const { return c_ == o.c_; }

  Rational eval(const Rational& nu) const;
  std::string str(const std::string& var = "nu") const;

  BigInt content() const;                    // gcd of coefficients (nonnegative)
  static NuPoly gcd(const NuPoly& a, const NuPoly& b);
  // exact division; fails if not divisible
  NuPoly divide_exact(const NuPoly& d) const;

private:
  std::vector<BigInt> c_;
  void trim();
};

// A coefficient that is an exact rational function of nu.  The representation
// is canonical: numerator and denominator coprime in Z[nu], denominator with
// positive leading coefficient and content coprime to the numerator content.
class NuCoefficient {
public:
  NuCoefficient() : num_(), den_(NuPoly(BigInt(1))) {}
  NuCoefficient(NuPoly num, NuPoly den);
  explicit NuCoefficient(const Rational& q);
  explicit NuCoefficient(long v) : NuCoefficient(Rational(v)) {}
  static NuCoefficient nu();

  const NuPoly& num() const { return num_; }
  const NuPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  NuCoefficient operator-() const;
  NuCoefficient operator+(const NuCoefficient& o) const;
  NuCoefficient operator-(const NuCoefficient& o) const;
  NuCoefficient operator*(const NuCoefficient& o) const;
  NuCoefficient operator/(const NuCoefficient& o) const;
  bool operator==(const NuCoefficient& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const NuCoefficient& o) const { return !(*this == o); }

  // Evaluation at a numeric coupling; empty when the denominator vanishes.
  std::optional<Rational> eval(const Rational& nu) const;
  std::string str(const std::string& var = "nu") const;

  // For coefficients that are plain rationals / linear polynomials in nu.
  std::optional<Rational> as_rational() const;
  std::optional<std::pair<Rational, Rational>> as_linear() const;  // a + b*nu

private:
  NuPoly num_, den_;
  void normalize();
};

}  // namespace orbitham

#endif
