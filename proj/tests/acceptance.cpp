// Acceptance suite: runs every reproduction criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <iostream>

#include "orbitham/verify.hpp"

using namespace orbitham;

namespace {

int failures = 0;

void report(int index, const verify::Check& check, const std::string& title) {
  if (!check.pass) ++failures;
  std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << index << ". " << title << "\n"
            << "       " << check.detail << "\n";
  std::cout.flush();
}

verify::Check merge(std::initializer_list<verify::Check> checks) {
  verify::Check out;
  out.pass = true;
  for (const auto& c : checks) {
    out.pass = out.pass && c.pass;
    if (!out.detail.empty()) out.detail += " | ";
    out.detail += c.detail;
  }
  return out;
}

}  // namespace

int main() {
  auto t_start = std::chrono::steady_clock::now();
  OrbitAlgebra alg(RootSystem::build("E8"));

  // 1. fundamental orbit sizes (includes the < 2 min budget)
  report(1, verify::orbit_sizes(alg), "E8 fundamental orbit sizes");

  // 2. M_1 M_2 decomposition
  report(2, verify::product_fixture(alg), "M_1 M_2 decomposition fixture");

  // 3. A_12
  report(3, verify::coeff_A12_fixture(alg), "A_12 coefficient");

  // 4. all eight b_a
  report(4, verify::coeff_b_fixtures(alg), "b coefficients");

  // 5. all eight c_a; c_1..c_7 in the default tier, c_8 in the slow tier
  {
    auto t0 = std::chrono::steady_clock::now();
    verify::Check fast = verify::coeff_c_fixtures(alg, 1, 7);
    double fast_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    verify::Check slow = verify::coeff_c_fixtures(alg, 8, 8);
    verify::Check both = merge({fast, slow});
    both.pass = both.pass && fast_secs < 1800.0;
    both.detail += " | default tier " + std::to_string(fast_secs) + "s";
    report(5, both, "c coefficients (default tier c_1..c_7, slow tier c_8)");
  }

  // 6. reflection tables: multiplicities and printed expansions
  report(6, verify::reflection_table_fixtures(alg), "reflection-pair tables");

  // 7. normalization identities at tau = d, all 36 pairs and all c_a
  report(7, verify::normalization_identities(alg, true), "normalization identities");

  // 8. first 29 spectrum rows, twice
  report(8, verify::spectrum_closed_form(alg), "spectrum table (closed form)");
  AssembleOptions slow_opts;
  slow_opts.slow_tier = true;
  AlgebraicOperator op = assemble_operator(alg, slow_opts);
  {
    verify::Check c = verify::spectrum_operator_diagonal(alg, op);
    c.name = "8b";
    report(8, c, "spectrum table (operator diagonal)");
  }

  // 9. degeneracies
  report(9, verify::degeneracy_scan(alg), "degenerate pair and the clean low range");

  // 10. eigenfunction residuals up to height 97, symbolic and nu = 1/2
  report(10, verify::eigenfunction_residuals(alg, op, 97), "eigenfunction residuals");

  // 11. flag preservation and the rational-model rejection
  report(11, verify::flag_preservation(op), "flag preservation");

  // 12. numeric cross-validation
  {
    verify::Check a2 = verify::numeric_rank2("A2", 100, 1e-9);
    verify::Check g2 = verify::numeric_rank2("G2", 100, 1e-9);
    verify::Check e8 = verify::numeric_e8_entries(alg, 10, 1e-8);
    report(12, merge({a2, g2, e8}), "numeric cross-validation (A2, G2, E8 entries)");
  }

  // 13. flag angles
  report(13, verify::flag_angles(), "flag angles");

  // 14. E6 corrected coefficient list
  {
    OrbitAlgebra e6(RootSystem::build("E6"));
    report(14, verify::e6_footnote(e6, true), "E6 corrected coefficient list");
  }

  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << " (" << total << "s total)\n";
  return failures == 0 ? 0 : 1;
}
