#ifndef ORBITHAM_SPECTRAL_HPP
#define ORBITHAM_SPECTRAL_HPP

#include <optional>

#include "orbitham/hamiltonian.hpp"

namespace orbitham {

// eps_n = -(n, n + 2 nu rho), linear in nu.
NuCoefficient eigenvalue(const Weight& n, const RootSystem& rs);

// Action of the interaction part on an orbit function:
//   h_int M_n = -2 nu [ (rho, n) M_n + sum_m coupling_m M_m ],
// every coupling key strictly below n in Weyl height.
struct HIntRow {
  Weight n;
  Rational rho_dot_n;
  MExpansionQ coupling;
};
HIntRow h_int_on_M(const Weight& n, OrbitAlgebra& alg);

struct Eigenstate {
  Weight label;
  NuCoefficient eigenvalue;
  std::map<Weight, NuCoefficient> expansion_M;  // coefficient of label is 1
  NuTauPoly expansion_tau;
};

// Back-substitution down the height-ordered dominant weights below n.
// Symbolic when nu is empty; at numeric nu a vanishing eps_n - eps_m with a
// nonzero coupling raises a resonance error naming the offending nu.
Eigenstate eigenfunction(const Weight& n, OrbitAlgebra& alg,
                         std::optional<Rational> nu = std::nullopt);

struct SpectrumRow {
  Weight n;
  NuCoefficient eps;
  Rational norm;             // (n, n)
  Rational height;           // Weyl height
  std::optional<long> fmin;  // minimal-flag grading, E8 only
};

// All dominant weights with Weyl height <= bound, ordered by |(n,n)|, then
// height, then lexicographically.
std::vector<SpectrumRow> enumerate_spectrum(const RootSystem& rs, const Rational& height_bound);

struct DegenerateGroup {
  std::vector<Weight> labels;
  NuCoefficient eps;
};

// Groups of distinct dominant weights with identical eigenvalue polynomials,
// among all n with (n, n) <= norm_bound.
std::vector<DegenerateGroup> find_degeneracies(const RootSystem& rs, const Rational& norm_bound);

std::vector<Weight> dominant_weights_below_height(const RootSystem& rs, const Rational& bound);
std::vector<Weight> dominant_weights_below_norm(const RootSystem& rs, const Rational& bound);

}  // namespace orbitham

#endif
