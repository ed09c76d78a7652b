#include "orbitham/spectral.hpp"

#include <algorithm>

namespace orbitham {

NuCoefficient eigenvalue(const Weight& n, const RootSystem& rs) {
  if (!is_dominant(n)) fail(Errc::non_dominant, "eigenvalue: " + format_weight(n));
  Rational norm = rs.inner_product(n, n);
  Rational rho_n = 0;
  for (int a = 1; a <= rs.rank(); ++a) rho_n += rs.rho_dot_weight(a) * n[a - 1];
  // -(n,n) - 2 (rho,n) nu
  NuCoefficient c = NuCoefficient(-norm) + NuCoefficient(-2 * rho_n) * NuCoefficient::nu();
  return c;
}

HIntRow h_int_on_M(const Weight& n, OrbitAlgebra& alg) {
  const RootSystem& rs = alg.rs();
  if (!is_dominant(n)) fail(Errc::non_dominant, "h_int_on_M: " + format_weight(n));
  HIntRow row;
  row.n = n;
  row.rho_dot_n = 0;
  for (int a = 1; a <= rs.rank(); ++a) row.rho_dot_n += rs.rho_dot_weight(a) * n[a - 1];
  if (!is_zero(n)) row.coupling = reflection_accumulation(alg, n);
  // triangularity: every coupled weight lies strictly below n
  Rational hn = rs.weyl_height(n);
  for (const auto& [m, w] : row.coupling)
    if (!(rs.weyl_height(m) < hn))
      fail(Errc::internal, "h_int_on_M: non-triangular coupling at " + format_weight(m));
  return row;
}

namespace {

void enumerate_height_rec(const RootSystem& rs, const Rational& bound, Weight& cur, int pos,
                          const Rational& used, std::vector<Weight>& out) {
  if (pos == rs.rank()) {
    out.push_back(cur);
    return;
  }
  const Rational& k = rs.coweyl_dot_weight(pos + 1);
  for (int v = 0;; ++v) {
    Rational g = used + k * v;
    if (g > bound) break;
    cur[pos] = v;
    enumerate_height_rec(rs, bound, cur, pos + 1, g, out);
  }
  cur[pos] = 0;
}

void enumerate_norm_rec(const RootSystem& rs, const Rational& bound, Weight& cur, int pos,
                        std::vector<Weight>& out) {
  if (pos == rs.rank()) {
    if (rs.inner_product(cur, cur) <= bound) out.push_back(cur);
    return;
  }
  // Gram entries of the supported systems are nonnegative, so the partial
  // diagonal contribution is already a lower bound for the final norm.
  const Rational& gaa = rs.gram()[pos][pos];
  for (int v = 0;; ++v) {
    if (gaa * v * v > bound) break;
    cur[pos] = v;
    if (rs.inner_product(cur, cur) > bound) {
      cur[pos] = 0;
      break;
    }
    enumerate_norm_rec(rs, bound, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Weight> dominant_weights_below_height(const RootSystem& rs, const Rational& bound) {
  std::vector<Weight> out;
  Weight cur(rs.rank(), 0);
  enumerate_height_rec(rs, bound, cur, 0, Rational(0), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> dominant_weights_below_norm(const RootSystem& rs, const Rational& bound) {
  std::vector<Weight> out;
  Weight cur(rs.rank(), 0);
  enumerate_norm_rec(rs, bound, cur, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

Eigenstate eigenfunction(const Weight& n, OrbitAlgebra& alg, std::optional<Rational> nu) {
  const RootSystem& rs = alg.rs();
  if (!is_dominant(n)) fail(Errc::non_dominant, "eigenfunction: " + format_weight(n));

  Eigenstate state;
  state.label = n;
  state.eigenvalue = eigenvalue(n, rs);

  // levels strictly below n in height, processed top-down
  Rational hn = rs.weyl_height(n);
  std::vector<Weight> below = dominant_weights_below_height(rs, hn);
  below.erase(std::remove(below.begin(), below.end(), n), below.end());
  std::sort(below.begin(), below.end(), [&](const Weight& x, const Weight& y) {
    Rational hx = rs.weyl_height(x), hy = rs.weyl_height(y);
    if (hx != hy) return hx > hy;
    return x < y;
  });

  // coupling rows for n and everything below it
  std::map<Weight, HIntRow> rows;
  rows.emplace(n, h_int_on_M(n, alg));
  for (const Weight& m : below) rows.emplace(m, h_int_on_M(m, alg));

  const NuCoefficient minus2nu = -(NuCoefficient(Rational(2)) * NuCoefficient::nu());
  std::map<Weight, NuCoefficient> coef;
  coef.emplace(n, NuCoefficient(Rational(1)));

  for (const Weight& m : below) {
    if (rs.weyl_height(m) >= hn) continue;
    // drive term: sum over higher states m'' of C_{m''} * coupling(m'' -> m)
    NuCoefficient drive;
    for (const auto& [mp, cmp] : coef) {
      auto it = rows.at(mp).coupling.find(m);
      if (it != rows.at(mp).coupling.end()) drive = drive + cmp * NuCoefficient(it->second);
    }
    if (drive.is_zero()) continue;
    NuCoefficient gap = state.eigenvalue - eigenvalue(m, rs);
    if (nu) {
      auto gap_v = gap.eval(*nu);
      auto drive_v = (minus2nu * drive).eval(*nu);
      if (!gap_v || !drive_v) fail(Errc::internal, "eigenfunction: unexpected pole");
      if (*gap_v == 0) {
        if (*drive_v == 0) continue;
        fail(Errc::resonance, "resonance at nu = " + rational_to_string(*nu) + ": eps" +
                                  format_weight(n) + " = eps" + format_weight(m) +
                                  " with nonzero coupling");
      }
      coef.emplace(m, NuCoefficient(*drive_v / *gap_v));
    } else {
      coef.emplace(m, minus2nu * drive / gap);
    }
  }

  state.expansion_M = coef;
  for (const auto& [m, cm] : coef) {
    NuTauPoly part = to_nu_poly(alg.m_to_tau(m));
    state.expansion_tau = state.expansion_tau + part * cm;
  }
  return state;
}

std::vector<SpectrumRow> enumerate_spectrum(const RootSystem& rs, const Rational& height_bound) {
  static const std::vector<int> kMinimalFlagE8 = {2, 2, 3, 3, 4, 4, 5, 6};
  std::vector<Weight> doms = dominant_weights_below_height(rs, height_bound);
  std::vector<SpectrumRow> rows;
  rows.reserve(doms.size());
  for (const Weight& n : doms) {
    SpectrumRow r;
    r.n = n;
    r.eps = eigenvalue(n, rs);
    r.norm = rs.inner_product(n, n);
    r.height = rs.weyl_height(n);
    if (rs.name() == "E8") {
      long g = 0;
      for (int i = 0; i < 8; ++i) g += static_cast<long>(n[i]) * kMinimalFlagE8[i];
      r.fmin = g;
    }
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const SpectrumRow& x, const SpectrumRow& y) {
    if (x.norm != y.norm) return x.norm < y.norm;
    if (x.height != y.height) return x.height < y.height;
    return x.n < y.n;
  });
  return rows;
}

std::vector<DegenerateGroup> find_degeneracies(const RootSystem& rs, const Rational& norm_bound) {
  std::vector<Weight> doms = dominant_weights_below_norm(rs, norm_bound);
  // eigenvalue is determined by the pair ((n,n), (rho,n))
  std::map<std::pair<Rational, Rational>, std::vector<Weight>> groups;
  for (const Weight& n : doms) {
    Rational norm = rs.inner_product(n, n);
    Rational rho_n = 0;
    for (int a = 1; a <= rs.rank(); ++a) rho_n += rs.rho_dot_weight(a) * n[a - 1];
    groups[{norm, rho_n}].push_back(n);
  }
  std::vector<DegenerateGroup> out;
  for (auto& [key, labels] : groups) {
    if (labels.size() < 2) continue;
    DegenerateGroup g;
    std::sort(labels.begin(), labels.end());
    g.labels = std::move(labels);
    g.eps = eigenvalue(g.labels.front(), rs);
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const DegenerateGroup& a, const DegenerateGroup& b) {
    return a.labels.front() < b.labels.front();
  });
  return out;
}

}  // namespace orbitham
