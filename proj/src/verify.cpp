#include "orbitham/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace orbitham::verify {

namespace {

Weight to_weight(const std::array<int, 8>& a) { return Weight(a.begin(), a.end()); }

std::string tick(bool ok) { return ok ? "ok" : "FAIL"; }

NuCoefficient linear_eps(long c0, long c1) {
  return NuCoefficient(Rational(c0)) + NuCoefficient(Rational(c1)) * NuCoefficient::nu();
}

}  // namespace

Check orbit_sizes(OrbitAlgebra& alg) {
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool pass = true;
  for (int a = 1; a <= 8; ++a) {
    const WeylOrbit& orb = alg.fundamental_orbit(a);
    long expected = reference::kE8OrbitSizes[a - 1];
    bool ok = static_cast<long>(orb.size()) == expected &&
              orbit_size(alg.fundamental_weight(a), alg.rs()) == expected;
    pass = pass && ok;
    detail << "d_" << a << "=" << orb.size() << " ";
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  pass = pass && secs < 120.0;
  detail << "(" << secs << "s)";
  return {"E8 fundamental orbit sizes", pass, detail.str()};
}

Check product_fixture(OrbitAlgebra& alg) {
  MExpansion got = alg.decompose_product(alg.fundamental_weight(1), 2);
  MExpansion want;
  for (const auto& t : reference::kE8ProductM1M2) want.terms.emplace(to_weight(t.n), BigInt(t.mu));
  bool pass = got == want;
  std::ostringstream detail;
  for (const auto& [n, mu] : got.terms) detail << mu.get_str() << "*M" << format_weight(n) << " ";
  return {"M_1 * M_2 decomposition", pass, detail.str()};
}

Check coeff_A12_fixture(OrbitAlgebra& alg) {
  TauPoly got = coeff_A(1, 2, alg);
  bool pass = got == reference::e8_coeff_A12();
  return {"A_12 coefficient", pass, tau_poly_str(got)};
}

Check coeff_b_fixtures(OrbitAlgebra& alg) {
  bool pass = true;
  std::ostringstream detail;
  for (int a = 1; a <= 8; ++a) {
    TauPoly got = coeff_b(a, alg);
    bool ok = got == reference::e8_coeff_b(a);
    pass = pass && ok;
    if (!ok) detail << "b_" << a << " " << tick(ok) << " ";
  }
  if (pass) detail << "b_a = -w_a^2 tau_a, lengths (2,4,6,8,12,14,20,30)";
  return {"b coefficients", pass, detail.str()};
}

Check coeff_c_fixtures(OrbitAlgebra& alg, int a_lo, int a_hi) {
  bool pass = true;
  std::ostringstream detail;
  for (int a = a_lo; a <= a_hi; ++a) {
    TauPoly got = coeff_c(a, alg);
    bool ok = got == reference::e8_coeff_c(a);
    pass = pass && ok;
    detail << "c_" << a << " " << tick(ok) << " ";
  }
  return {"c coefficients " + std::to_string(a_lo) + ".." + std::to_string(a_hi), pass,
          detail.str()};
}

Check reflection_table_fixtures(OrbitAlgebra& alg) {
  bool pass = true;
  std::ostringstream detail;
  // group the reference rows per fundamental index
  std::map<int, std::map<std::tuple<int, int, Weight>, long>> want;
  for (const auto& r : reference::e8_reflection_rows())
    want[r.a][{r.l, r.k, to_weight(r.n)}] = r.mu;
  for (int a = 1; a <= 8; ++a) {
    auto rows = reflection_rows(alg, a);
    std::map<std::tuple<int, int, Weight>, long> got;
    for (const auto& r : rows) got[{r.l, r.k, r.n}] = r.mu;
    bool ok = got == want[a];
    pass = pass && ok;
    detail << "a=" << a << " rows=" << rows.size() << " " << tick(ok) << " ";
  }
  // printed expansions M_n(tau)
  std::map<Weight, bool> seen;
  for (const auto& r : reference::e8_reflection_rows()) {
    Weight n = to_weight(r.n);
    if (seen.count(n) || !reference::has_e8_m_to_tau(r.n)) continue;
    seen[n] = true;
    bool ok = alg.m_to_tau(n) == reference::e8_m_to_tau(r.n);
    pass = pass && ok;
    if (!ok) detail << "M" << format_weight(n) << " FAIL ";
  }
  detail << "expansions=" << seen.size();
  return {"reflection tables and printed expansions", pass, detail.str()};
}

Check normalization_identities(OrbitAlgebra& alg, bool include_heaviest) {
  bool pass = true;
  std::ostringstream detail;
  int pairs = 0;
  for (int a = 1; a <= 8; ++a)
    for (int b = a; b <= 8; ++b) {
      if (!include_heaviest && a == 8 && b == 8) continue;
      Rational v = coeff_A_at_d(a, b, alg);
      ++pairs;
      if (v != 0) {
        pass = false;
        detail << "A_" << a << b << "(d)=" << rational_to_string(v) << " ";
      }
    }
  detail << "A pairs checked: " << pairs << "; ";
  for (int a = 1; a <= 8; ++a) {
    Rational got = coeff_c_at_d(a, alg);
    Rational want = c_normalization_value(a, alg.rs());
    if (got != want) {
      pass = false;
      detail << "c_" << a << "(d) mismatch ";
    }
  }
  detail << "c identities checked: 8";
  return {"normalization identities at tau = d", pass, detail.str()};
}

Check spectrum_closed_form(OrbitAlgebra& alg) {
  auto rows = enumerate_spectrum(alg.rs(), Rational(135));
  bool pass = rows.size() == 29;
  std::map<Weight, const reference::SpectrumRowRef*> want;
  for (const auto& r : reference::e8_spectrum_table()) want[to_weight(r.n)] = &r;
  for (const auto& row : rows) {
    auto it = want.find(row.n);
    if (it == want.end()) {
      pass = false;
      continue;
    }
    const auto* ref = it->second;
    bool ok = row.eps == linear_eps(ref->eps_const, ref->eps_nu) &&
              row.norm == Rational(ref->norm) && row.height == Rational(ref->height) &&
              row.fmin && *row.fmin == ref->fmin_grading;
    pass = pass && ok;
  }
  return {"spectrum table, closed form", pass,
          std::to_string(rows.size()) + " states with ht <= 135"};
}

Check spectrum_operator_diagonal(OrbitAlgebra& alg, const AlgebraicOperator& op) {
  bool pass = true;
  std::ostringstream detail;
  int checked = 0;
  for (const auto& ref : reference::e8_spectrum_table()) {
    Weight n = to_weight(ref.n);
    NuTauPoly phi = to_nu_poly(alg.m_to_tau(n));
    NuTauPoly image = apply_operator(op, phi);
    NuCoefficient diag;
    for (const auto& [p, coef] : image.terms) {
      MExpansion pm = alg.tau_power_to_M(p);
      auto it = pm.terms.find(n);
      if (it != pm.terms.end()) diag = diag + coef * NuCoefficient(Rational(it->second));
    }
    bool ok = diag == linear_eps(ref.eps_const, ref.eps_nu);
    pass = pass && ok;
    ++checked;
    if (!ok) detail << "diag" << format_weight(n) << "=" << diag.str() << " FAIL ";
  }
  detail << checked << " diagonal entries";
  return {"spectrum table, operator diagonal", pass, detail.str()};
}

Check degeneracy_scan(OrbitAlgebra& alg) {
  auto groups = find_degeneracies(alg.rs(), Rational(121));
  Weight a = to_weight(reference::kDegeneratePairA);
  Weight b = to_weight(reference::kDegeneratePairB);
  NuCoefficient eps = linear_eps(reference::kDegenerateEpsConst, reference::kDegenerateEpsNu);
  bool found = false;
  Rational min_norm(-1);
  for (const auto& g : groups) {
    Rational norm = alg.rs().inner_product(g.labels.front(), g.labels.front());
    if (min_norm < 0 || norm < min_norm) min_norm = norm;
    if (std::count(g.labels.begin(), g.labels.end(), a) &&
        std::count(g.labels.begin(), g.labels.end(), b) && g.eps == eps)
      found = true;
  }
  // the published low-lying table stops at (n,n) = 34; that range must be clean
  bool none_in_table = min_norm > 34;
  bool pass = found && none_in_table;
  std::ostringstream detail;
  detail << groups.size() << " degenerate groups with (n,n) <= 121; first at (n,n)="
         << rational_to_string(min_norm);
  return {"degeneracy scan", pass, detail.str()};
}

Check eigenfunction_residuals(OrbitAlgebra& alg, const AlgebraicOperator& op, long height_bound) {
  bool pass = true;
  std::ostringstream detail;
  auto states = dominant_weights_below_height(alg.rs(), Rational(height_bound));
  int checked = 0;
  for (const Weight& n : states) {
    Eigenstate sym = eigenfunction(n, alg);
    // exact residual, symbolic coupling
    NuTauPoly residual = apply_operator(op, sym.expansion_tau) -
                         sym.expansion_tau * sym.eigenvalue;
    bool ok = residual.is_zero();
    // exact residual at nu = 1/2
    Eigenstate half = eigenfunction(n, alg, Rational(1, 2));
    TauPoly phi_half = eval_nu(half.expansion_tau, Rational(1, 2));
    auto eps_half = half.eigenvalue.eval(Rational(1, 2));
    TauPoly res_half =
        apply_operator(op, phi_half, Rational(1, 2)) - phi_half * *eps_half;
    ok = ok && res_half.is_zero();
    pass = pass && ok;
    ++checked;
    if (!ok) detail << "residual" << format_weight(n) << " FAIL ";
  }
  // nu = 0 limit: the fundamental states collapse to single invariants
  for (int a = 1; a <= alg.rs().rank(); ++a) {
    Eigenstate st = eigenfunction(alg.fundamental_weight(a), alg, Rational(0));
    TauPoly phi = eval_nu(st.expansion_tau, Rational(0));
    TauPoly tau_a;
    tau_a.add_term(alg.fundamental_weight(a), Rational(1));
    bool ok = phi == tau_a &&
              *st.eigenvalue.eval(Rational(0)) ==
                  -alg.rs().gram()[a - 1][a - 1];
    pass = pass && ok;
    if (!ok) detail << "nu=0 limit a=" << a << " FAIL ";
  }
  detail << checked << " states (symbolic and nu=1/2), 8 nu=0 limits";
  return {"eigenfunction residuals", pass, detail.str()};
}

Check flag_preservation(const AlgebraicOperator& op) {
  std::vector<int> fmin(reference::kFlagMin.begin(), reference::kFlagMin.end());
  std::vector<int> forb(reference::kFlagOrbit.begin(), reference::kFlagOrbit.end());
  std::vector<int> frat(reference::kFlagRational.begin(), reference::kFlagRational.end());

  FlagReport r1 = verify_flag(op, fmin, 6, false);
  FlagReport r2 = verify_flag(op, forb, 270, true, 2);
  FlagReport r3 = verify_flag(op, frat, 11, false);
  bool pass = r1.preserved && r2.preserved && !r3.preserved && r3.witness.has_value();
  std::ostringstream detail;
  detail << "minimal flag: " << tick(r1.preserved) << " (" << r1.monomials_checked
         << " monomials); Weyl flag strict: " << tick(r2.preserved) << " ("
         << r2.monomials_checked << "); rational vector rejected: " << tick(!r3.preserved);
  if (r3.witness)
    detail << " witness " << format_weight(r3.witness->input) << " -> "
           << format_weight(r3.witness->output) << " grade " << r3.witness->grade_in << " -> "
           << r3.witness->grade_out;
  return {"flag preservation", pass, detail.str()};
}

Check flag_angles() {
  auto cos_digits = [](long dot, long nf, long ff) -> BigInt {
    // cos = dot / sqrt(nf * ff); return 10^24-scaled truncation of the value
    BigInt num = BigInt(dot) * BigInt(dot);
    BigInt den = BigInt(nf) * BigInt(ff);
    // digits of sqrt(num/den): isqrt(num * den * 10^48) / den
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 48);
    BigInt t = num * den * scale;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), t.get_mpz_t());
    BigInt out = root / den;  // floor(10^24 * cos)
    return out;
  };
  auto to_decimal = [](const BigInt& scaled) {
    std::string s = scaled.get_str();
    while (s.size() < 25) s = "0" + s;
    return s.substr(0, s.size() - 24) + "." + s.substr(s.size() - 24);
  };

  long sum_orb = 0, ff_orb = 0;
  for (int x : reference::kFlagOrbit) {
    sum_orb += x;
    ff_orb += x * x;
  }
  long sum_min = 0, ff_min = 0;
  for (int x : reference::kFlagMin) {
    sum_min += x;
    ff_min += x * x;
  }
  std::string got_orb = to_decimal(cos_digits(sum_orb, 8, ff_orb));
  std::string got_min = to_decimal(cos_digits(sum_min, 8, ff_min));
  // compare 12+ significant digits against the reference decimals
  auto agree = [](const std::string& got, const std::string& want) {
    return got.substr(0, 16) == std::string(want).substr(0, 16);
  };
  // exact squares as well
  Rational sq_orb(sum_orb * sum_orb, 8L * ff_orb), sq_min(sum_min * sum_min, 8L * ff_min);
  sq_orb.canonicalize();
  sq_min.canonicalize();
  bool sq_ok = sq_orb == Rational(24025, 28246) && sq_min == Rational(841, 952);
  bool pass = sq_ok && agree(got_orb, reference::kCosThetaOrbit) &&
              agree(got_min, reference::kCosThetaMin);
  return {"flag angles", pass, "cos(orbit)=" + got_orb + " cos(min)=" + got_min};
}

Check numeric_rank2(const std::string& system, int samples, double tol) {
  OrbitAlgebra alg(RootSystem::build(system));
  SampleOptions opts;
  opts.samples = samples;
  opts.tol = tol;
  CoefficientSelection sel;  // all entries
  ValidationReport rep = validate_coefficients(alg, sel, opts);
  double worst = 0;
  for (const auto& e : rep.entries) worst = std::max(worst, e.max_rel_err);
  std::ostringstream detail;
  detail << system << " full operator, " << samples << " samples, max rel err " << worst;
  return {"numeric cross-check " + system, rep.ok, detail.str()};
}

Check numeric_e8_entries(OrbitAlgebra& alg, int samples, double tol) {
  SampleOptions opts;
  opts.samples = samples;
  opts.tol = tol;
  CoefficientSelection sel;
  sel.A_pairs = {{1, 1}, {1, 2}};
  sel.all_b = true;
  sel.c_indices = {1, 2};
  ValidationReport rep = validate_coefficients(alg, sel, opts);
  double worst = 0;
  for (const auto& e : rep.entries) worst = std::max(worst, e.max_rel_err);
  // x = 0 checks: exact vanishing of A_11, A_12 at tau = d
  std::vector<Rational> d;
  for (int a = 1; a <= 8; ++a) d.emplace_back(orbit_size(alg.fundamental_weight(a), alg.rs()));
  bool at_zero = eval_exact(coeff_A(1, 1, alg), d) == 0 && eval_exact(coeff_A(1, 2, alg), d) == 0;
  std::ostringstream detail;
  detail << "A_11, A_12, b_*, c_1, c_2 at " << samples << " samples, max rel err " << worst
         << "; x=0 vanishing " << tick(at_zero);
  return {"numeric cross-check E8 entries", rep.ok && at_zero, detail.str()};
}

E6FootnoteReport e6_footnote_report(OrbitAlgebra& e6) {
  const int n = 6;
  auto ref = reference::e6_corrected_coefficients();
  std::vector<Rational> ours_b(n);
  std::vector<TauPoly> ours_c(n);
  for (int a = 1; a <= n; ++a) {
    ours_b[a - 1] = -e6.rs().gram()[a - 1][a - 1];
    ours_c[a - 1] = coeff_c(a, e6);
  }

  auto relabel = [&](const TauPoly& p, const std::vector<int>& pi) {
    TauPoly out;
    for (const auto& [e, c] : p.terms) {
      Weight q(n, 0);
      for (int i = 0; i < n; ++i) q[pi[i] - 1] = e[i];
      out.terms.emplace(std::move(q), c);
    }
    return out;
  };

  std::vector<int> best;
  int best_c = -1, best_b = -1;
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    int c_match = 0, b_match = 0;
    for (int a = 1; a <= n; ++a) {
      if (relabel(ref[a - 1].c, pi) == ours_c[pi[a - 1] - 1]) ++c_match;
      if (ref[a - 1].b_coeff == ours_b[pi[a - 1] - 1]) ++b_match;
    }
    if (c_match > best_c || (c_match == best_c && b_match > best_b)) {
      best_c = c_match;
      best_b = b_match;
      best = pi;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));

  E6FootnoteReport report;
  report.mapping = best;
  report.c_parts_match = best_c == n;
  for (int a = 1; a <= n; ++a) {
    bool cm = relabel(ref[a - 1].c, best) == ours_c[best[a - 1] - 1];
    bool bm = ref[a - 1].b_coeff == ours_b[best[a - 1] - 1];
    std::ostringstream line;
    line << "published B_" << a << " -> internal " << best[a - 1] << ": c "
         << tick(cm) << ", b " << tick(bm);
    if (!bm)
      line << " (published " << rational_to_string(ref[a - 1].b_coeff) << ", computed "
           << rational_to_string(ours_b[best[a - 1] - 1]) << ")";
    if (cm && bm)
      report.matched.push_back(line.str());
    else
      report.mismatched.push_back(line.str());
  }
  return report;
}

Check e6_footnote(OrbitAlgebra& e6, bool expect_documented_outcome) {
  E6FootnoteReport rep = e6_footnote_report(e6);
  std::ostringstream detail;
  detail << "mapping (published->internal): ";
  for (int x : rep.mapping) detail << x << " ";
  detail << "| " << rep.matched.size() << " fully matched, " << rep.mismatched.size()
         << " with b-part discrepancy";
  for (const auto& m : rep.mismatched) detail << " | " << m;
  bool pass;
  if (expect_documented_outcome) {
    // Documented outcome: the mapping is the published (Bourbaki) node order,
    // every c part matches, and the published b parts disagree at indices
    // 2, 4, 5, 6 (their values are a permutation of the computed ones).
    std::vector<int> bourbaki_to_internal = {1, 3, 4, 6, 5, 2};
    pass = rep.mapping == bourbaki_to_internal && rep.c_parts_match &&
           rep.mismatched.size() == 4;
  } else {
    pass = rep.mismatched.empty();
  }
  return {"E6 corrected coefficient list", pass, detail.str()};
}

}  // namespace orbitham::verify
