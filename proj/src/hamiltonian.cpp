#include "orbitham/hamiltonian.hpp"

#include <algorithm>
#include <set>

#include "orbitham/cache.hpp"

namespace orbitham {

namespace {

// Per positive root, integerized pairing data against omega coordinates:
//   (alpha^vee, omega) = (sum_i pair[i] * omega_i) / pair_den
//   (alpha, omega)      = l * (alpha,alpha)/2
struct RootPairing {
  std::vector<long> pair;
  long pair_den = 1;
  Rational half_len2;        // (alpha,alpha)/2
  std::vector<int32_t> omega;  // alpha in omega coordinates
};

std::vector<RootPairing> make_pairings(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<RootPairing> out;
  out.reserve(rs.positive_roots().size());
  for (const auto& r : rs.positive_roots()) {
    RootPairing p;
    p.omega.assign(r.omega.begin(), r.omega.end());
    p.half_len2 = r.length2 / 2;
    // (alpha^vee, omega) = sum_i r_i(alpha) * (alpha_i,alpha_i)/(alpha,alpha) * omega_i
    std::vector<Rational> q(n);
    BigInt den = 1;
    for (int i = 0; i < n; ++i) {
      q[i] = Rational(r.root[i]) * rs.alpha2(i + 1) / r.length2;
      BigInt d = q[i].get_den();
      BigInt g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      den = den / g * d;
    }
    p.pair_den = den.get_si();
    p.pair.resize(n);
    for (int i = 0; i < n; ++i) {
      Rational v = q[i] * den;
      if (v.get_den() != 1) fail(Errc::internal, "pairing rationalization failed");
      p.pair[i] = v.get_num().get_si();
    }
    out.push_back(std::move(p));
  }
  return out;
}

struct AccumulationPass {
  // landing point -> accumulated (alpha,omega) weight, positive side only
  std::map<Weight, Rational> weights;
  // (l, k, landing point) -> positive-side pair count
  std::map<std::tuple<int, int, Weight>, long> counts;
};

AccumulationPass run_accumulation(OrbitAlgebra& alg, const Weight& n, bool with_counts) {
  const RootSystem& rs = alg.rs();
  const int rank = rs.rank();
  if (!is_dominant(n)) fail(Errc::non_dominant, "reflection_accumulation: " + format_weight(n));
  auto pairings = make_pairings(rs);

  const int threads = alg.options().threads > 0 ? alg.options().threads : hardware_threads();
  std::vector<AccumulationPass> partial(std::max(1, threads));

  auto process = [&](std::span<const int32_t> omega, AccumulationPass& local) {
    Weight v(rank);
    for (const auto& rp : pairings) {
      long t = 0;
      for (int i = 0; i < rank; ++i) t += rp.pair[i] * omega[i];
      if (t % rp.pair_den != 0) fail(Errc::internal, "non-integral coroot pairing");
      long l = t / rp.pair_den;
      if (l < 2) continue;
      Rational w = rp.half_len2 * l;  // (alpha, omega)
      for (long k = 1; k < l; ++k) {
        bool dominant = true;
        for (int i = 0; i < rank; ++i) {
          v[i] = omega[i] - static_cast<int>(k) * rp.omega[i];
          if (v[i] < 0) dominant = false;
        }
        if (!dominant) continue;
        local.weights[v] += w;
        if (with_counts) ++local.counts[{static_cast<int>(l), static_cast<int>(k), v}];
      }
    }
  };

  // fundamental orbits are cached flat; other orbits are enumerated here
  int fundamental = 0;
  {
    int ones = 0, idx = 0;
    for (int i = 0; i < rank; ++i) {
      ones += n[i];
      if (n[i] == 1) idx = i + 1;
    }
    if (ones == 1) fundamental = idx;
  }
  if (fundamental > 0) {
    const WeylOrbit& orb = alg.fundamental_orbit(fundamental);
    parallel_chunks(orb.size(), threads, [&](std::size_t b, std::size_t e, int t) {
      for (std::size_t i = b; i < e; ++i) process(orb.element_span(i), partial[t]);
    });
  } else {
    OrbitOptions oo;
    oo.mem_cap_bytes = alg.options().mem_cap_bytes;
    WeylOrbit orb = enumerate_orbit(n, rs, oo);
    parallel_chunks(orb.size(), threads, [&](std::size_t b, std::size_t e, int t) {
      for (std::size_t i = b; i < e; ++i) process(orb.element_span(i), partial[t]);
    });
  }

  AccumulationPass merged;
  for (auto& loc : partial) {
    for (auto& [k, w] : loc.weights) merged.weights[k] += w;
    for (auto& [k, c] : loc.counts) merged.counts[k] += c;
  }
  for (auto it = merged.weights.begin(); it != merged.weights.end();)
    it = (it->second == 0) ? merged.weights.erase(it) : std::next(it);
  return merged;
}

}  // namespace

MExpansionQ reflection_accumulation(OrbitAlgebra& alg, const Weight& n) {
  if (auto hit = alg.cached_accumulation(n)) return *hit;
  if (alg.cache()) {
    if (auto disk = alg.cache()->load_hint(alg.rs(), n)) {
      alg.store_accumulation(n, *disk);
      return *disk;
    }
  }
  MExpansionQ acc = run_accumulation(alg, n, false).weights;
  if (alg.cache()) alg.cache()->store_hint(alg.rs(), n, acc);
  alg.store_accumulation(n, acc);
  return acc;
}

std::vector<ReflectionRow> reflection_rows(OrbitAlgebra& alg, int a) {
  auto pass = run_accumulation(alg, alg.fundamental_weight(a), true);
  // a hit at step k seen from one end of the reflection pair is a hit at step
  // l-k seen from the other, so rows come in mirrored (l, k) pairs
  std::set<std::tuple<int, int, Weight>> keys;
  for (const auto& [key, cnt] : pass.counts) {
    auto [l, k, n] = key;
    keys.insert(key);
    keys.insert({l, l - k, n});
  }
  std::vector<ReflectionRow> rows;
  for (const auto& key : keys) {
    auto [l, k, n] = key;
    ReflectionRow row;
    row.l = l;
    row.k = k;
    row.n = n;
    auto self = pass.counts.find(key);
    auto other = pass.counts.find({l, l - k, n});
    row.mu = (self != pass.counts.end() ? self->second : 0) +
             (other != pass.counts.end() ? other->second : 0);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const ReflectionRow& x, const ReflectionRow& y) {
    if (x.l != y.l) return x.l < y.l;
    if (x.k != y.k) return x.k < y.k;
    return x.n < y.n;
  });
  return rows;
}

TauPoly coeff_b(int a, OrbitAlgebra& alg) {
  const RootSystem& rs = alg.rs();
  if (a < 1 || a > rs.rank()) fail(Errc::index_out_of_range, "coeff_b index " + std::to_string(a));
  TauPoly p;
  p.add_term(alg.fundamental_weight(a), -rs.gram()[a - 1][a - 1]);
  return p;
}

namespace {

// Shared skeleton for A_ab in the M basis: pairs (n, (P - p_n) mu_n).
std::vector<std::pair<Weight, Rational>> coeff_A_mform(int a, int b, OrbitAlgebra& alg,
                                                       Rational& P_out) {
  const RootSystem& rs = alg.rs();
  if (a < 1 || a > rs.rank() || b < 1 || b > rs.rank())
    fail(Errc::index_out_of_range, "coeff_A indices");
  // iterate the smaller fundamental orbit
  int j = a, i = b;
  if (orbit_size(alg.fundamental_weight(i), rs) > orbit_size(alg.fundamental_weight(j), rs))
    std::swap(i, j);
  const Rational P = rs.gram()[a - 1][b - 1];
  P_out = P;
  const Rational waa = rs.gram()[a - 1][a - 1], wbb = rs.gram()[b - 1][b - 1];
  MExpansion mus = alg.decompose_product(alg.fundamental_weight(j), i);
  std::vector<std::pair<Weight, Rational>> out;
  for (const auto& [nw, mu] : mus.terms) {
    Rational pn = (rs.inner_product(nw, nw) - waa - wbb) / 2;
    Rational coef = (P - pn) * Rational(mu);
    if (coef != 0) out.emplace_back(nw, coef);
  }
  return out;
}

}  // namespace

TauPoly coeff_A(int a, int b, OrbitAlgebra& alg) {
  Rational P;
  auto mform = coeff_A_mform(a, b, alg, P);
  TauPoly out;
  for (const auto& [nw, coef] : mform) out = out + alg.m_to_tau(nw) * coef;
  Weight prod(alg.rs().rank(), 0);
  prod[a - 1] += 1;
  prod[b - 1] += 1;
  out.add_term(prod, -P);
  return out;
}

Rational coeff_A_at_d(int a, int b, OrbitAlgebra& alg) {
  Rational P;
  auto mform = coeff_A_mform(a, b, alg, P);
  const RootSystem& rs = alg.rs();
  Rational v = 0;
  for (const auto& [nw, coef] : mform) v += coef * Rational(orbit_size(nw, rs));
  Rational da(orbit_size(alg.fundamental_weight(a), rs));
  Rational db(orbit_size(alg.fundamental_weight(b), rs));
  return v - P * da * db;
}

TauPoly coeff_c(int a, OrbitAlgebra& alg) {
  const RootSystem& rs = alg.rs();
  if (a < 1 || a > rs.rank()) fail(Errc::index_out_of_range, "coeff_c index " + std::to_string(a));
  auto acc = reflection_accumulation(alg, alg.fundamental_weight(a));
  TauPoly out;
  out.add_term(alg.fundamental_weight(a), rs.rho_dot_weight(a));
  for (const auto& [nw, w] : acc) out = out + alg.m_to_tau(nw) * w;
  return out;
}

Rational coeff_c_at_d(int a, OrbitAlgebra& alg) {
  const RootSystem& rs = alg.rs();
  auto acc = reflection_accumulation(alg, alg.fundamental_weight(a));
  Rational v = rs.rho_dot_weight(a) * Rational(orbit_size(alg.fundamental_weight(a), rs));
  for (const auto& [nw, w] : acc) v += w * Rational(orbit_size(nw, rs));
  return v;
}

Rational c_normalization_value(int a, const RootSystem& rs) {
  Weight wa(rs.rank(), 0);
  wa[a - 1] = 1;
  Rational s = 0;
  for (const auto& r : rs.positive_roots()) {
    Rational aw = Rational(r.root[a - 1]) * rs.alpha2(a) / 2;  // (alpha, w_a)
    s += aw * aw / r.length2;
  }
  return Rational(orbit_size(wa, rs)) * s;
}

const TauPoly& AlgebraicOperator::A_at(int a, int bb) const {
  const auto& entry = A[a - 1][bb - 1];
  if (!entry)
    fail(Errc::bad_argument, "operator entry A_" + std::to_string(a) + std::to_string(bb) +
                                 " is gated behind the slow tier; assemble with slow_tier");
  return *entry;
}

const TauPoly& AlgebraicOperator::c_at(int a) const {
  if (!c[a - 1])
    fail(Errc::bad_argument, "coefficient c_" + std::to_string(a) +
                                 " is gated behind the slow tier; assemble with slow_tier");
  return *c[a - 1];
}

NuTauPoly AlgebraicOperator::B(int a) const {
  NuTauPoly out = to_nu_poly(b_at(a));
  NuCoefficient minus2nu = -(NuCoefficient(Rational(2)) * NuCoefficient::nu());
  return out + to_nu_poly(c_at(a)) * minus2nu;
}

AlgebraicOperator assemble_operator(OrbitAlgebra& alg, AssembleOptions opts) {
  const RootSystem& rs = alg.rs();
  const int n = rs.rank();
  // The heaviest E8 products (everything touching the square of the largest
  // fundamental orbit) stay out of the default tier.
  auto gated = [&](int a, int b) {
    return rs.name() == "E8" && !opts.slow_tier && a == 8 && b == 8;
  };
  auto gated_c = [&](int a) { return rs.name() == "E8" && !opts.slow_tier && a == 8; };

  AlgebraicOperator op;
  op.rank = n;
  op.A.assign(n, std::vector<std::optional<TauPoly>>(n));
  op.b.resize(n);
  op.c.assign(n, std::nullopt);
  for (int a = 1; a <= n; ++a) {
    op.b[a - 1] = coeff_b(a, alg);
    if (!gated_c(a)) op.c[a - 1] = coeff_c(a, alg);
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      if (gated(a, b)) continue;
      TauPoly A = coeff_A(a, b, alg);
      op.A[a - 1][b - 1] = A;
      op.A[b - 1][a - 1] = std::move(A);
    }
  return op;
}

NuTauPoly apply_operator(const AlgebraicOperator& op, const NuTauPoly& phi) {
  NuTauPoly out;
  const int n = op.rank;
  for (int a = 1; a <= n; ++a) {
    NuTauPoly da = phi.derivative(a);
    if (da.is_zero()) continue;
    out = out + op.B(a) * da;
    for (int b = a; b <= n; ++b) {
      NuTauPoly dab = da.derivative(b);
      if (dab.is_zero()) continue;
      NuTauPoly contrib = to_nu_poly(op.A_at(a, b)) * dab;
      out = out + contrib;
      if (b != a) out = out + contrib;  // A_ab and A_ba of the double sum
    }
  }
  return out;
}

TauPoly apply_operator(const AlgebraicOperator& op, const TauPoly& phi, const Rational& nu) {
  TauPoly out;
  const int n = op.rank;
  for (int a = 1; a <= n; ++a) {
    TauPoly da = phi.derivative(a);
    if (da.is_zero()) continue;
    TauPoly Ba = op.b_at(a) - op.c_at(a) * (2 * nu);
    out = out + Ba * da;
    for (int b = a; b <= n; ++b) {
      TauPoly dab = da.derivative(b);
      if (dab.is_zero()) continue;
      TauPoly contrib = op.A_at(a, b) * dab;
      out = out + contrib;
      if (b != a) out = out + contrib;
    }
  }
  return out;
}

namespace {

void enumerate_bounded(const std::vector<int>& f, long bound, int max_deg, Weight& cur, int pos,
                       long used, int deg, std::vector<Weight>& out) {
  if (pos == static_cast<int>(f.size())) {
    out.push_back(cur);
    return;
  }
  for (int v = 0;; ++v) {
    long g = used + static_cast<long>(v) * f[pos];
    int d = deg + v;
    if (g > bound || (max_deg >= 0 && d > max_deg)) break;
    cur[pos] = v;
    enumerate_bounded(f, bound, max_deg, cur, pos + 1, g, d, out);
  }
  cur[pos] = 0;
}

}  // namespace

FlagReport verify_flag(const AlgebraicOperator& op, const std::vector<int>& f, long bound,
                       bool strict_offdiagonal, int max_total_degree) {
  if (static_cast<int>(f.size()) != op.rank)
    fail(Errc::dimension_mismatch, "verify_flag: characteristic vector length");
  std::vector<Weight> monomials;
  Weight cur(op.rank, 0);
  enumerate_bounded(f, bound, max_total_degree, cur, 0, 0, 0, monomials);
  std::sort(monomials.begin(), monomials.end(), [&](const Weight& x, const Weight& y) {
    long gx = 0, gy = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      gx += static_cast<long>(x[i]) * f[i];
      gy += static_cast<long>(y[i]) * f[i];
    }
    if (gx != gy) return gx < gy;
    return x < y;
  });

  FlagReport report;
  for (const Weight& p : monomials) {
    long gp = 0;
    for (std::size_t i = 0; i < f.size(); ++i) gp += static_cast<long>(p[i]) * f[i];
    NuTauPoly mono;
    mono.add_term(p, NuCoefficient(Rational(1)));
    NuTauPoly image = apply_operator(op, mono);
    for (const auto& [q, coef] : image.terms) {
      long gq = 0;
      for (std::size_t i = 0; i < f.size(); ++i) gq += static_cast<long>(q[i]) * f[i];
      bool ok = (q == p) ? gq <= gp : (strict_offdiagonal ? gq < gp : gq <= gp);
      if (!ok) {
        report.preserved = false;
        report.monomials_checked++;
        report.witness = FlagViolation{p, q, gp, gq};
        return report;
      }
    }
    report.monomials_checked++;
  }
  report.preserved = true;
  return report;
}

}  // namespace orbitham
