#ifndef ORBITHAM_HAMILTONIAN_HPP
#define ORBITHAM_HAMILTONIAN_HPP

#include <optional>

#include "orbitham/orbitalgebra.hpp"

namespace orbitham {

// Positive-side reflection-pair accumulation over the orbit of n: for every
// positive root alpha and orbit element omega with l = (alpha^vee, omega) >= 2,
// the walk points omega - k*alpha (k = 1..l-1) receive weight (alpha, omega).
// Only dominant landing points are kept; their accumulated weights are exactly
// the orbit-function coefficients of the sum.
MExpansionQ reflection_accumulation(OrbitAlgebra& alg, const Weight& n);

// One row of the tables backing the c coefficients: for pairing value l and
// step k, the orbit hit at n and the number mu of contributing pairs (both
// walk directions counted).
struct ReflectionRow {
  int l = 0;
  int k = 0;
  Weight n;
  long mu = 0;
};
std::vector<ReflectionRow> reflection_rows(OrbitAlgebra& alg, int a);

TauPoly coeff_b(int a, OrbitAlgebra& alg);
TauPoly coeff_A(int a, int b, OrbitAlgebra& alg);
TauPoly coeff_c(int a, OrbitAlgebra& alg);

// Exact value of A_ab at tau = d (orbit sizes) computed without tau
// conversion, directly from multiplicities and orbit sizes.
Rational coeff_A_at_d(int a, int b, OrbitAlgebra& alg);
// Same for c_a, plus the independently derived normalization value
// d_a * sum_{alpha>0} (alpha,w_a)^2 / (alpha,alpha).
Rational coeff_c_at_d(int a, OrbitAlgebra& alg);
Rational c_normalization_value(int a, const RootSystem& rs);

struct AssembleOptions {
  bool slow_tier = false;  // include entries that need the heaviest products
};

// The gauge-rotated Hamiltonian in algebraic form:
//   h = sum_{a,b} A_ab d^2/dtau_a dtau_b + sum_a B_a d/dtau_a,
// with B_a = b_a - 2 nu c_a.  Entries gated out of the default tier are
// absent until assembled with the slow tier.
struct AlgebraicOperator {
  int rank = 0;
  std::vector<std::vector<std::optional<TauPoly>>> A;  // symmetric
  std::vector<TauPoly> b;
  std::vector<std::optional<TauPoly>> c;

  bool has_A(int a, int bb) const { return A[a - 1][bb - 1].has_value(); }
  bool has_c(int a) const { return c[a - 1].has_value(); }
  const TauPoly& A_at(int a, int bb) const;
  const TauPoly& b_at(int a) const { return b[a - 1]; }
  const TauPoly& c_at(int a) const;
  NuTauPoly B(int a) const;  // b_a - 2 nu c_a
};

AlgebraicOperator assemble_operator(OrbitAlgebra& alg, AssembleOptions opts = {});

NuTauPoly apply_operator(const AlgebraicOperator& op, const NuTauPoly& phi);
TauPoly apply_operator(const AlgebraicOperator& op, const TauPoly& phi, const Rational& nu);

struct FlagViolation {
  Weight input;    // monomial the operator acted on
  Weight output;   // offending monomial of the image
  long grade_in = 0;
  long grade_out = 0;
};

struct FlagReport {
  bool preserved = false;
  std::size_t monomials_checked = 0;
  std::optional<FlagViolation> witness;
};

// Checks that the operator maps every monomial p with (f,p) <= bound into the
// span of monomials with grading <= (f,p); with strict_offdiagonal, every
// output monomial other than p itself must have strictly lower grading.
// max_total_degree >= 0 restricts the checked monomials by total degree.
FlagReport verify_flag(const AlgebraicOperator& op, const std::vector<int>& f, long bound,
                       bool strict_offdiagonal, int max_total_degree = -1);

}  // namespace orbitham

#endif
