#include "orbitham/nupoly.hpp"

#include <algorithm>

namespace orbitham {

NuPoly::NuPoly(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

NuPoly NuPoly::from_coeffs(std::vector<BigInt> coeffs) {
  NuPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

NuPoly NuPoly::nu() { return from_coeffs({BigInt(0), BigInt(1)}); }

void NuPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& NuPoly::coeff(int k) const {
  static const BigInt zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

NuPoly NuPoly::operator-() const {
  NuPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

NuPoly NuPoly::operator+(const NuPoly& o) const {
  NuPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
  r.trim();
  return r;
}

NuPoly NuPoly::operator-(const NuPoly& o) const { return *this + (-o); }

NuPoly NuPoly::operator*(const NuPoly& o) const {
  if (is_zero() || o.is_zero()) return NuPoly();
  NuPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

Rational NuPoly::eval(const Rational& nu) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * nu + Rational(*it);
  return v;
}

std::string NuPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& a = c_[k];
    if (a == 0) continue;
    if (!s.empty()) s += (a > 0) ? " + " : " - ";
    else if (a < 0) s += "-";
    BigInt mag = abs(a);
    bool unit = (mag == 1);
    if (k == 0) {
      s += mag.get_str();
    } else {
      if (!unit) s += mag.get_str() + "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

BigInt NuPoly::content() const {
  BigInt g = 0;
  for (const auto& x : c_) {
    BigInt t;
    mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    g = t;
  }
  return g;
}

NuPoly NuPoly::divide_exact(const NuPoly& d) const {
  if (d.is_zero()) fail(Errc::internal, "NuPoly division by zero");
  if (is_zero()) return NuPoly();
  if (degree() < d.degree()) fail(Errc::internal, "NuPoly::divide_exact: not divisible");
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quo(degree() - d.degree() + 1, BigInt(0));
  const BigInt& lead = d.c_.back();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[k + d.degree()].get_mpz_t(), lead.get_mpz_t());
    if (r != 0) fail(Errc::internal, "NuPoly::divide_exact: not divisible");
    quo[k] = q;
    for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= q * d.c_[j];
  }
  for (const auto& x : rem)
    if (x != 0) fail(Errc::internal, "NuPoly::divide_exact: nonzero remainder");
  return from_coeffs(std::move(quo));
}

namespace {

NuPoly primitive_part(const NuPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = p.content();
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) out.push_back(x / c);
  return NuPoly::from_coeffs(std::move(out));
}

// fraction-free remainder step: lb*a - la*nu^shift*b, iterated
NuPoly pseudo_rem(NuPoly a, const NuPoly& b) {
  const BigInt& lb = b.coeffs().back();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    const BigInt la = a.coeffs().back();
    std::vector<BigInt> tmp(a.coeffs().size(), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) tmp[i] = lb * a.coeffs()[i];
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) tmp[j + shift] -= la * b.coeffs()[j];
    a = NuPoly::from_coeffs(std::move(tmp));
  }
  return a;
}

}  // namespace

NuPoly NuPoly::gcd(const NuPoly& a, const NuPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  NuPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    NuPoly r = primitive_part(pseudo_rem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (x.coeffs().back() < 0) x = -x;
  return x;
}

NuCoefficient::NuCoefficient(NuPoly num, NuPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Errc::internal, "NuCoefficient with zero denominator");
  normalize();
}

NuCoefficient::NuCoefficient(const Rational& q)
    : num_(NuPoly(BigInt(q.get_num()))), den_(NuPoly(BigInt(q.get_den()))) {
  normalize();
}

NuCoefficient NuCoefficient::nu() { return NuCoefficient(NuPoly::nu(), NuPoly(BigInt(1))); }

void NuCoefficient::normalize() {
  if (num_.is_zero()) {
    den_ = NuPoly(BigInt(1));
    return;
  }
  NuPoly g = NuPoly::gcd(num_, den_);
  if (g.degree() > 0 || g.coeff(0) != 1) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  BigInt cn = num_.content(), cd = den_.content();
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (cg > 1) {
    num_ = num_.divide_exact(NuPoly(cg));
    den_ = den_.divide_exact(NuPoly(cg));
  }
  if (den_.coeffs().back() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

NuCoefficient NuCoefficient::operator-() const {
  NuCoefficient r = *this;
  r.num_ = -r.num_;
  return r;
}

NuCoefficient NuCoefficient::operator+(const NuCoefficient& o) const {
  return NuCoefficient(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

NuCoefficient NuCoefficient::operator-(const NuCoefficient& o) const { return *this + (-o); }

NuCoefficient NuCoefficient::operator*(const NuCoefficient& o) const {
  return NuCoefficient(num_ * o.num_, den_ * o.den_);
}

NuCoefficient NuCoefficient::operator/(const NuCoefficient& o) const {
  if (o.is_zero()) fail(Errc::internal, "NuCoefficient division by zero");
  return NuCoefficient(num_ * o.den_, den_ * o.num_);
}

std::optional<Rational> NuCoefficient::eval(const Rational& nu) const {
  Rational d = den_.eval(nu);
  if (d == 0) return std::nullopt;
  Rational n = num_.eval(nu);
  return n / d;
}

std::string NuCoefficient::str(const std::string& var) const {
  if (is_polynomial()) {
    if (den_.coeff(0) == 1) return num_.str(var);
    return "(" + num_.str(var) + ")/" + den_.coeff(0).get_str();
  }
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::optional<Rational> NuCoefficient::as_rational() const {
  if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
  if (num_.is_zero()) return Rational(0);
  return Rational(num_.coeff(0)) / Rational(den_.coeff(0));
}

std::optional<std::pair<Rational, Rational>> NuCoefficient::as_linear() const {
  if (den_.degree() > 0 || num_.degree() > 1) return std::nullopt;
  Rational d(den_.coeff(0));
  return std::make_pair(Rational(num_.coeff(0)) / d, Rational(num_.coeff(1)) / d);
}

}  // namespace orbitham
