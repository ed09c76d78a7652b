#ifndef ORBITHAM_REFERENCE_TABLES_HPP
#define ORBITHAM_REFERENCE_TABLES_HPP

#include <array>

#include "orbitham/taupoly.hpp"

// Reference tables for the E8 trigonometric model (orbit sizes, coefficient
// polynomials, the low-lying spectrum) and the corrected E6 coefficient list,
// as published.  The verification suites compare recomputed values against
// these fixtures.
namespace orbitham::reference {

inline constexpr std::array<long, 8> kE8OrbitSizes = {240,   2160,  6720,   17280,
                                                      60480, 69120, 241920, 483840};
inline constexpr long kE8WeylOrder = 696729600;
inline constexpr std::array<int, 8> kE8GramDiagonal = {2, 4, 6, 8, 12, 14, 20, 30};
inline constexpr std::array<int, 8> kE8WeylVectorRootCoords = {29, 46, 57, 68, 84, 91, 110, 135};
inline constexpr std::array<int, 8> kE8HighestRootCoords = {2, 2, 3, 3, 4, 4, 5, 6};
inline constexpr std::array<int, 8> kE8BourbakiNumbers = {8, 1, 7, 2, 6, 3, 5, 4};
inline constexpr int kE8RhoSquared = 620;

inline constexpr std::array<int, 8> kFlagOrbit = {29, 46, 57, 68, 84, 91, 110, 135};
inline constexpr std::array<int, 8> kFlagMin = {2, 2, 3, 3, 4, 4, 5, 6};
inline constexpr std::array<int, 8> kFlagRational = {1, 3, 5, 5, 7, 7, 9, 11};

// cos of the angles between the two characteristic vectors and (1,...,1),
// to 24 significant digits; exact squares are 24025/28246 and 841/952.
inline constexpr const char* kCosThetaOrbit = "0.922259676860426953385082";
inline constexpr const char* kCosThetaMin = "0.939895399150638365931270";

// M_1 M_2 = M_[1,1,0,...] + 126 M_1 + 64 M_2 + 27 M_3 + 8 M_4
struct MTerm {
  std::array<int, 8> n;
  long mu;
};
inline constexpr std::array<MTerm, 5> kE8ProductM1M2 = {{
    {{1, 1, 0, 0, 0, 0, 0, 0}, 1},
    {{1, 0, 0, 0, 0, 0, 0, 0}, 126},
    {{0, 1, 0, 0, 0, 0, 0, 0}, 64},
    {{0, 0, 1, 0, 0, 0, 0, 0}, 27},
    {{0, 0, 0, 1, 0, 0, 0, 0}, 8},
}};

TauPoly e8_coeff_A12();
TauPoly e8_coeff_c(int a);   // 1..8, the printed lists
TauPoly e8_coeff_b(int a);   // -w_a^2 tau_a with the E8 lengths

// The table rows backing the c coefficients: for each fundamental index a,
// pairing value l and step k, the hit orbit n with multiplicity mu and the
// printed expansion M_n(tau).
struct ReflectionRowRef {
  int a;
  int l;
  int k;
  std::array<int, 8> n;
  long mu;
};
const std::vector<ReflectionRowRef>& e8_reflection_rows();
// printed expansions for the weights appearing in those rows
TauPoly e8_m_to_tau(const std::array<int, 8>& n);
bool has_e8_m_to_tau(const std::array<int, 8>& n);

struct SpectrumRowRef {
  std::array<int, 8> n;
  long eps_const;  // eps = eps_const + eps_nu * nu
  long eps_nu;
  int fmin_grading;
  long norm;
  long height;
};
const std::array<SpectrumRowRef, 29>& e8_spectrum_table();

inline constexpr std::array<int, 8> kDegeneratePairA = {0, 2, 1, 0, 0, 0, 0, 0};
inline constexpr std::array<int, 8> kDegeneratePairB = {2, 0, 0, 0, 0, 1, 0, 0};
inline constexpr long kDegenerateEpsConst = -38;
inline constexpr long kDegenerateEpsNu = -298;

// Corrected E6 list, in the published indexing: B_a = b_a - 2 nu c_a.
struct E6CoefficientRef {
  Rational b_coeff;  // coefficient of tau_a in b_a
  TauPoly c;         // c_a as printed, same indexing
};
std::array<E6CoefficientRef, 6> e6_corrected_coefficients();

}  // namespace orbitham::reference

#endif
