#ifndef ORBITHAM_TAUPOLY_HPP
#define ORBITHAM_TAUPOLY_HPP

#include <map>
#include <string>

#include "orbitham/nupoly.hpp"

namespace orbitham {

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const NuCoefficient& c) { return c.is_zero(); }
}  // namespace detail

// Sparse multivariate polynomial in tau_1..tau_N; keys are exponent vectors.
// Zero coefficients are never stored.
template <class C>
struct BasicTauPoly {
  std::map<Weight, C> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(const Weight& p, const C& c) {
    if (detail::coeff_is_zero(c)) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
      terms.emplace(p, c);
    } else {
      it->second = it->second + c;
      if (detail::coeff_is_zero(it->second)) terms.erase(it);
    }
  }

  BasicTauPoly operator+(const BasicTauPoly& o) const {
    BasicTauPoly r = *this;
    for (const auto& [p, c] : o.terms) r.add_term(p, c);
    return r;
  }

  BasicTauPoly operator-(const BasicTauPoly& o) const {
    BasicTauPoly r = *this;
    for (const auto& [p, c] : o.terms) r.add_term(p, -c);
    return r;
  }

  BasicTauPoly operator*(const C& s) const {
    BasicTauPoly r;
    if (detail::coeff_is_zero(s)) return r;
    for (const auto& [p, c] : terms) {
      C v = c * s;
      if (!detail::coeff_is_zero(v)) r.terms.emplace(p, v);
    }
    return r;
  }

  BasicTauPoly operator*(const BasicTauPoly& o) const {
    BasicTauPoly r;
    for (const auto& [p, c] : terms)
      for (const auto& [q, d] : o.terms) {
        Weight pq(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) pq[i] = p[i] + q[i];
        r.add_term(pq, c * d);
      }
    return r;
  }

  bool operator==(const BasicTauPoly& o) const { return terms == o.terms; }

  // multiply by the single variable tau_a (1-based)
  BasicTauPoly shift_up(int a) const {
    BasicTauPoly r;
    for (const auto& [p, c] : terms) {
      Weight q = p;
      q[a - 1] += 1;
      r.terms.emplace(std::move(q), c);
    }
    return r;
  }

  BasicTauPoly derivative(int a) const {  // d/d tau_a, 1-based
    BasicTauPoly r;
    for (const auto& [p, c] : terms) {
      if (p[a - 1] == 0) continue;
      Weight q = p;
      q[a - 1] -= 1;
      r.add_term(q, c * C(p[a - 1]));
    }
    return r;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [p, c] : terms) {
      int s = 0;
      for (int x : p) s += x;
      if (s > d) d = s;
    }
    return d;
  }
};

using TauPoly = BasicTauPoly<Rational>;  // exact, nu-free coefficients
using NuTauPoly = BasicTauPoly<NuCoefficient>;

Rational eval_exact(const TauPoly& p, const std::vector<Rational>& tau);
double eval_double(const TauPoly& p, const std::vector<double>& tau);

NuTauPoly to_nu_poly(const TauPoly& p);
// substitutes a numeric coupling into every coefficient; fails on poles
TauPoly eval_nu(const NuTauPoly& p, const Rational& nu);
bool integer_coefficients(const TauPoly& p);

// Human-readable layout: "240 + 29*t1" style, graded ordering.
std::string tau_poly_str(const TauPoly& p);
std::string tau_poly_str(const NuTauPoly& p);

}  // namespace orbitham

#endif
