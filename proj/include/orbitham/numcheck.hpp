#ifndef ORBITHAM_NUMCHECK_HPP
#define ORBITHAM_NUMCHECK_HPP

#include <complex>

#include "orbitham/spectral.hpp"

namespace orbitham {

struct SampleOptions {
  std::uint64_t seed = 424242;
  int samples = 10;
  double box_lo = 0.05;
  double box_hi = 0.45;
  double margin = 0.01;  // reject x with |sin((alpha,x)/2)| below this
  double tol = 1e-8;
};

// Orthonormal realization of the root/weight data (exact LDL^T of the
// simple-root Gram matrix, square roots taken once at the end).
class Embedding {
public:
  explicit Embedding(const RootSystem& rs);

  const RootSystem& rs() const { return *rs_; }
  int dim() const { return static_cast<int>(weight_cart_.size()); }

  // Cartesian coordinates of a weight given in omega coordinates.
  std::vector<double> weight_vector(std::span<const int32_t> omega) const;
  std::vector<double> weight_vector(const Weight& omega) const;
  const std::vector<std::vector<double>>& positive_roots_cart() const { return roots_cart_; }

private:
  const RootSystem* rs_;
  std::vector<std::vector<double>> weight_cart_;  // row a = w_a
  std::vector<std::vector<double>> roots_cart_;
};

using Complex = std::complex<double>;

// tau_a(x) = sum over the orbit of e^{i (omega, x)} with x-derivatives,
// accumulated pairwise.  Orbit functions of self-dual systems are real; in
// general they are complex, so everything is kept complex here.
struct TauValues {
  Complex value{};
  std::vector<Complex> grad;  // d tau_a / d x_k
  Complex laplacian{};        // sum_k d^2 tau_a / d x_k^2
};

TauValues eval_tau(const Embedding& emb, OrbitAlgebra& alg, int a, const std::vector<double>& x,
                   bool with_derivatives);

std::vector<double> sample_point(const Embedding& emb, const SampleOptions& opts, int index);

struct EntryReport {
  std::string entry;
  double max_rel_err = 0;
  double mean_rel_err = 0;
  int worst_sample = -1;
  std::vector<double> worst_point;
  bool ok = true;
};

struct ValidationReport {
  std::uint64_t seed = 0;
  int samples = 0;
  double tol = 0;
  std::vector<EntryReport> entries;
  bool ok = true;
};

struct CoefficientSelection {
  std::vector<std::pair<int, int>> A_pairs;  // empty = all pairs
  bool all_b = true;
  std::vector<int> c_indices;  // empty = all
};

// Compares, at random sample points:
//   (i)  sum_k dtau_a dtau_b   against A_ab(tau(x)),
//   (ii) sum_k d^2 tau_a       against b_a(tau(x)),
//   (iii) sum_k dPhi0 dtau_a   against nu * c_a(tau(x))   (evaluated at nu=1).
ValidationReport validate_coefficients(OrbitAlgebra& alg, const CoefficientSelection& sel,
                                       const SampleOptions& opts);

// Pointwise residual of h phi = eps phi for a computed eigenstate, through the
// Cartesian chain rule; relative to |eps phi|.
ValidationReport validate_eigenfunction(const Eigenstate& state, const Rational& nu,
                                        OrbitAlgebra& alg, const SampleOptions& opts);

// max |Im tau_a(x)| over samples, per fundamental orbit; the imaginary parts
// vanish identically for the self-dual systems (E8 among them).
ValidationReport validate_reality(OrbitAlgebra& alg, const SampleOptions& opts);

}  // namespace orbitham

#endif
