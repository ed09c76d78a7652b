#include "orbitham/numcheck.hpp"

#include <cmath>
#include <random>

namespace orbitham {

namespace {

// exact LDL^T of a rational SPD matrix
void ldlt(const std::vector<std::vector<Rational>>& M, std::vector<std::vector<Rational>>& L,
          std::vector<Rational>& D) {
  const int n = static_cast<int>(M.size());
  L.assign(n, std::vector<Rational>(n, 0));
  D.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    L[i][i] = 1;
    for (int j = 0; j <= i; ++j) {
      Rational s = M[i][j];
      for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k] * D[k];
      if (i == j) {
        if (s <= 0) fail(Errc::internal, "simple-root Gram matrix not positive definite");
        D[i] = s;
      } else {
        L[i][j] = s / D[j];
      }
    }
  }
}

template <class T>
T pairwise_sum(std::vector<T>& v, std::size_t b, std::size_t e) {
  if (e - b <= 64) {
    T s{};
    for (std::size_t i = b; i < e; ++i) s += v[i];
    return s;
  }
  std::size_t mid = b + (e - b) / 2;
  return pairwise_sum(v, b, mid) + pairwise_sum(v, mid, e);
}

}  // namespace

Embedding::Embedding(const RootSystem& rs) : rs_(&rs) {
  const int n = rs.rank();
  // (alpha_i, alpha_j) from the Cartan matrix and root lengths
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = Rational(rs.cartan()[i][j]) * rs.alpha2(j + 1) / 2;
  std::vector<std::vector<Rational>> L;
  std::vector<Rational> D;
  ldlt(M, L, D);
  // simple roots in Cartesian coordinates: alpha_i = sum_j L[i][j] sqrt(D_j) e_j
  std::vector<std::vector<double>> simple(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) simple[i][j] = L[i][j].get_d() * std::sqrt(D[j].get_d());

  // root coordinates of the fundamental weights: solve C^T r = e_a exactly
  std::vector<std::vector<Rational>> ct(n, std::vector<Rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) ct[i][j] = Rational(rs.cartan()[j][i]);
    ct[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (ct[piv][col] == 0) ++piv;
    std::swap(ct[col], ct[piv]);
    Rational d = ct[col][col];
    for (auto& x : ct[col]) x /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || ct[r][col] == 0) continue;
      Rational f = ct[r][col];
      for (int j = 0; j < 2 * n; ++j) ct[r][j] -= f * ct[col][j];
    }
  }
  weight_cart_.assign(n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) {
      double ri = ct[i][n + a].get_d();
      for (int j = 0; j < n; ++j) weight_cart_[a][j] += ri * simple[i][j];
    }

  roots_cart_.clear();
  for (const auto& r : rs.positive_roots()) {
    std::vector<double> v(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[j] += r.root[i] * simple[i][j];
    roots_cart_.push_back(std::move(v));
  }
}

std::vector<double> Embedding::weight_vector(std::span<const int32_t> omega) const {
  const int n = dim();
  std::vector<double> v(n, 0.0);
  for (int a = 0; a < n; ++a) {
    if (omega[a] == 0) continue;
    for (int j = 0; j < n; ++j) v[j] += omega[a] * weight_cart_[a][j];
  }
  return v;
}

std::vector<double> Embedding::weight_vector(const Weight& omega) const {
  std::vector<int32_t> tmp(omega.begin(), omega.end());
  return weight_vector(std::span<const int32_t>(tmp.data(), tmp.size()));
}

TauValues eval_tau(const Embedding& emb, OrbitAlgebra& alg, int a, const std::vector<double>& x,
                   bool with_derivatives) {
  const WeylOrbit& orb = alg.fundamental_orbit(a);
  const int n = emb.dim();
  const std::size_t m = orb.size();
  std::vector<Complex> vals(m);
  std::vector<std::vector<Complex>> grad_terms;
  std::vector<Complex> lap;
  if (with_derivatives) {
    grad_terms.assign(n, std::vector<Complex>(m));
    lap.resize(m);
  }

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> wv = emb.weight_vector(orb.element_span(i));
    double dot = 0, norm2 = 0;
    for (int k = 0; k < n; ++k) {
      dot += wv[k] * x[k];
      norm2 += wv[k] * wv[k];
    }
    Complex e(std::cos(dot), std::sin(dot));
    vals[i] = e;
    if (with_derivatives) {
      for (int k = 0; k < n; ++k) grad_terms[k][i] = Complex(0, wv[k]) * e;
      lap[i] = -norm2 * e;
    }
  }
  TauValues out;
  out.value = pairwise_sum(vals, 0, m);
  if (with_derivatives) {
    out.grad.resize(n);
    for (int k = 0; k < n; ++k) out.grad[k] = pairwise_sum(grad_terms[k], 0, m);
    out.laplacian = pairwise_sum(lap, 0, m);
  }
  return out;
}

std::vector<double> sample_point(const Embedding& emb, const SampleOptions& opts, int index) {
  const int n = emb.dim();
  std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(index));
  std::uniform_real_distribution<double> dist(opts.box_lo, opts.box_hi);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<double> x(n);
    for (int k = 0; k < n; ++k) x[k] = dist(rng);
    bool ok = true;
    for (const auto& alpha : emb.positive_roots_cart()) {
      double dot = 0;
      for (int k = 0; k < n; ++k) dot += alpha[k] * x[k];
      if (std::fabs(std::sin(dot / 2)) < opts.margin) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  fail(Errc::bad_argument, "sample_point: cannot find a point clear of the cot poles");
}

namespace {

struct SampleData {
  std::vector<double> x;
  std::vector<TauValues> tau;       // 1-based fundamental index
  std::vector<Complex> tau_values;  // 0-based
  std::vector<double> phi0_grad;    // dPhi0/dx_k at nu = 1
};

SampleData make_sample(const Embedding& emb, OrbitAlgebra& alg, const SampleOptions& opts,
                       int index, bool with_phi0) {
  SampleData s;
  s.x = sample_point(emb, opts, index);
  const int n = emb.dim();
  s.tau.resize(n + 1);
  s.tau_values.assign(n, Complex{});
  for (int a = 1; a <= n; ++a) {
    s.tau[a] = eval_tau(emb, alg, a, s.x, true);
    s.tau_values[a - 1] = s.tau[a].value;
  }
  if (with_phi0) {
    s.phi0_grad.assign(n, 0.0);
    for (const auto& alpha : emb.positive_roots_cart()) {
      double dot = 0;
      for (int k = 0; k < n; ++k) dot += alpha[k] * s.x[k];
      double cot = std::cos(dot / 2) / std::sin(dot / 2);
      for (int k = 0; k < n; ++k) s.phi0_grad[k] -= 0.5 * alpha[k] * cot;
    }
  }
  return s;
}

// Samples are pure functions of (seed, index): evaluate them in parallel,
// then score sequentially so reports do not depend on the thread count.
std::vector<SampleData> make_samples(const Embedding& emb, OrbitAlgebra& alg,
                                     const SampleOptions& opts, bool with_phi0) {
  for (int a = 1; a <= alg.rs().rank(); ++a) alg.fundamental_orbit(a);  // warm once
  std::vector<SampleData> out(std::max(0, opts.samples));
  parallel_chunks(out.size(), alg.options().threads, [&](std::size_t b, std::size_t e, int) {
    for (std::size_t i = b; i < e; ++i)
      out[i] = make_sample(emb, alg, opts, static_cast<int>(i), with_phi0);
  });
  return out;
}

Complex eval_complex(const TauPoly& p, const std::vector<Complex>& tau) {
  Complex acc{};
  for (const auto& [e, c] : p.terms) {
    Complex t(c.get_d(), 0.0);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (int k = 0; k < e[a]; ++k) t *= tau[a];
    acc += t;
  }
  return acc;
}

void record(EntryReport& rep, const Complex& got, const Complex& want, double scale, int sample,
            const std::vector<double>& x) {
  double rel = std::abs(got - want) / std::max(1.0, std::fabs(scale));
  rep.mean_rel_err += rel;
  if (rel > rep.max_rel_err) {
    rep.max_rel_err = rel;
    rep.worst_sample = sample;
    rep.worst_point = x;
  }
}

}  // namespace

ValidationReport validate_coefficients(OrbitAlgebra& alg, const CoefficientSelection& sel,
                                       const SampleOptions& opts) {
  const RootSystem& rs = alg.rs();
  const int n = rs.rank();
  Embedding emb(rs);

  std::vector<std::pair<int, int>> pairs = sel.A_pairs;
  if (pairs.empty())
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b) pairs.emplace_back(a, b);
  std::vector<int> c_idx = sel.c_indices;
  if (c_idx.empty())
    for (int a = 1; a <= n; ++a) c_idx.push_back(a);

  // exact coefficients up front
  std::map<std::pair<int, int>, TauPoly> A;
  for (auto [a, b] : pairs) A[{a, b}] = coeff_A(a, b, alg);
  std::vector<TauPoly> c_polys(n + 1);
  for (int a : c_idx) c_polys[a] = coeff_c(a, alg);

  ValidationReport report;
  report.seed = opts.seed;
  report.samples = opts.samples;
  report.tol = opts.tol;

  std::vector<EntryReport> entries;
  for (auto [a, b] : pairs)
    entries.push_back({"A_" + std::to_string(a) + "," + std::to_string(b)});
  std::size_t b_base = entries.size();
  if (sel.all_b)
    for (int a = 1; a <= n; ++a) entries.push_back({"b_" + std::to_string(a)});
  std::size_t c_base = entries.size();
  for (int a : c_idx) entries.push_back({"c_" + std::to_string(a)});

  std::vector<SampleData> samples = make_samples(emb, alg, opts, true);
  for (int s = 0; s < opts.samples; ++s) {
    const SampleData& data = samples[s];

    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      auto [a, b] = pairs[pi];
      Complex direct{};
      for (int k = 0; k < n; ++k) direct += data.tau[a].grad[k] * data.tau[b].grad[k];
      Complex exact = eval_complex(A[{a, b}], data.tau_values);
      record(entries[pi], exact, direct, std::abs(direct), s, data.x);
    }
    if (sel.all_b) {
      for (int a = 1; a <= n; ++a) {
        Complex direct = data.tau[a].laplacian;
        Complex exact = -rs.gram()[a - 1][a - 1].get_d() * data.tau_values[a - 1];
        record(entries[b_base + a - 1], exact, direct, std::abs(direct), s, data.x);
      }
    }
    for (std::size_t ci = 0; ci < c_idx.size(); ++ci) {
      int a = c_idx[ci];
      Complex direct{};  // sum_k dPhi0 dtau_a at nu = 1
      for (int k = 0; k < n; ++k) direct += data.phi0_grad[k] * data.tau[a].grad[k];
      Complex exact = eval_complex(c_polys[a], data.tau_values);
      record(entries[c_base + ci], exact, direct, std::abs(direct), s, data.x);
    }
  }
  for (auto& e : entries) {
    e.mean_rel_err /= std::max(1, opts.samples);
    e.ok = e.max_rel_err <= opts.tol;
    report.ok = report.ok && e.ok;
  }
  report.entries = std::move(entries);
  return report;
}

ValidationReport validate_eigenfunction(const Eigenstate& state, const Rational& nu,
                                        OrbitAlgebra& alg, const SampleOptions& opts) {
  const RootSystem& rs = alg.rs();
  const int n = rs.rank();
  Embedding emb(rs);
  TauPoly phi = eval_nu(state.expansion_tau, nu);
  auto eps_v = state.eigenvalue.eval(nu);
  if (!eps_v) fail(Errc::resonance, "eigenvalue pole at nu = " + rational_to_string(nu));
  double eps = Rational(*eps_v).get_d();
  double nu_d = nu.get_d();

  ValidationReport report;
  report.seed = opts.seed;
  report.samples = opts.samples;
  report.tol = opts.tol;
  EntryReport entry{"eigenfunction " + format_weight(state.label)};

  std::vector<TauPoly> dphi(n + 1);
  std::vector<std::vector<TauPoly>> d2phi(n + 1, std::vector<TauPoly>(n + 1));
  for (int a = 1; a <= n; ++a) {
    dphi[a] = phi.derivative(a);
    for (int b = a; b <= n; ++b) d2phi[a][b] = dphi[a].derivative(b);
  }

  std::vector<SampleData> samples = make_samples(emb, alg, opts, true);
  for (int s = 0; s < opts.samples; ++s) {
    const SampleData& data = samples[s];

    // h phi = sum_k [ d2(phi.tau)/dxk2 - 2 nu dPhi0/dxk d(phi.tau)/dxk ]
    Complex hphi{};
    for (int a = 1; a <= n; ++a) {
      Complex da = eval_complex(dphi[a], data.tau_values);
      if (da != Complex{}) {
        hphi += da * data.tau[a].laplacian;
        Complex grad_dot_phi0{};
        for (int k = 0; k < n; ++k) grad_dot_phi0 += data.phi0_grad[k] * data.tau[a].grad[k];
        hphi -= 2.0 * nu_d * grad_dot_phi0 * da;
      }
      for (int b = a; b <= n; ++b) {
        Complex dab = eval_complex(d2phi[a][b], data.tau_values);
        if (dab == Complex{}) continue;
        Complex dot{};
        for (int k = 0; k < n; ++k) dot += data.tau[a].grad[k] * data.tau[b].grad[k];
        hphi += (a == b ? 1.0 : 2.0) * dab * dot;
      }
    }
    Complex phiv = eval_complex(phi, data.tau_values);
    record(entry, hphi, eps * phiv, std::abs(eps * phiv), s, data.x);
  }
  entry.mean_rel_err /= std::max(1, opts.samples);
  entry.ok = entry.max_rel_err <= opts.tol;
  report.ok = entry.ok;
  report.entries.push_back(std::move(entry));
  return report;
}

ValidationReport validate_reality(OrbitAlgebra& alg, const SampleOptions& opts) {
  const RootSystem& rs = alg.rs();
  Embedding emb(rs);
  ValidationReport report;
  report.seed = opts.seed;
  report.samples = opts.samples;
  report.tol = opts.tol;
  for (int a = 1; a <= rs.rank(); ++a) {
    EntryReport entry{"Im tau_" + std::to_string(a)};
    for (int s = 0; s < opts.samples; ++s) {
      std::vector<double> x = sample_point(emb, opts, s);
      TauValues tv = eval_tau(emb, alg, a, x, false);
      record(entry, Complex(tv.value.imag(), 0), Complex{}, 1.0, s, x);
    }
    entry.mean_rel_err /= std::max(1, opts.samples);
    entry.ok = entry.max_rel_err <= opts.tol;
    report.ok = report.ok && entry.ok;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace orbitham
