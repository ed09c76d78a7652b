#ifndef ORBITHAM_VERIFY_HPP
#define ORBITHAM_VERIFY_HPP

#include "orbitham/numcheck.hpp"
#include "orbitham/reference_tables.hpp"

namespace orbitham::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// E8 reproduction checks against the reference tables.
Check orbit_sizes(OrbitAlgebra& alg);
Check product_fixture(OrbitAlgebra& alg);          // M_1 M_2 decomposition
Check coeff_A12_fixture(OrbitAlgebra& alg);
Check coeff_b_fixtures(OrbitAlgebra& alg);
Check coeff_c_fixtures(OrbitAlgebra& alg, int a_lo, int a_hi);
Check reflection_table_fixtures(OrbitAlgebra& alg);  // multiplicities + expansions
Check normalization_identities(OrbitAlgebra& alg, bool include_heaviest);
Check spectrum_closed_form(OrbitAlgebra& alg);
Check spectrum_operator_diagonal(OrbitAlgebra& alg, const AlgebraicOperator& op);
Check degeneracy_scan(OrbitAlgebra& alg);
Check eigenfunction_residuals(OrbitAlgebra& alg, const AlgebraicOperator& op, long height_bound);
Check flag_preservation(const AlgebraicOperator& op);
Check flag_angles();
Check numeric_rank2(const std::string& system, int samples, double tol);
Check numeric_e8_entries(OrbitAlgebra& alg, int samples, double tol);

struct E6FootnoteReport {
  std::vector<int> mapping;  // published index a (1-based) -> internal index
  std::vector<std::string> matched;
  std::vector<std::string> mismatched;
  bool c_parts_match = false;
};
E6FootnoteReport e6_footnote_report(OrbitAlgebra& e6);
Check e6_footnote(OrbitAlgebra& e6, bool expect_documented_outcome);

}  // namespace orbitham::verify

#endif
