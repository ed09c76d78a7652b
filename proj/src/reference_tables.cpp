#include "orbitham/reference_tables.hpp"

namespace orbitham::reference {

namespace {

using Term = std::pair<std::array<int, 8>, long>;

TauPoly make8(std::initializer_list<Term> terms) {
  TauPoly p;
  for (const auto& [e, c] : terms) p.terms.emplace(Weight(e.begin(), e.end()), Rational(c));
  return p;
}

TauPoly make_rank(int rank, std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
  TauPoly p;
  for (const auto& [e, c] : terms) {
    Weight w = e;
    w.resize(rank, 0);
    p.terms.emplace(std::move(w), c);
  }
  return p;
}

}  // namespace

TauPoly e8_coeff_A12() {
  return make8({
      {{1, 1, 0, 0, 0, 0, 0, 0}, -2},
      {{1, 0, 0, 0, 0, 0, 0, 0}, 504},
      {{0, 1, 0, 0, 0, 0, 0, 0}, 192},
      {{0, 0, 1, 0, 0, 0, 0, 0}, 54},
      {{0, 0, 0, 1, 0, 0, 0, 0}, 8},
  });
}

TauPoly e8_coeff_b(int a) {
  TauPoly p;
  Weight w(8, 0);
  w[a - 1] = 1;
  p.terms.emplace(std::move(w), Rational(-kE8GramDiagonal[a - 1]));
  return p;
}

TauPoly e8_coeff_c(int a) {
  switch (a) {
    case 1:
      return make8({{{0, 0, 0, 0, 0, 0, 0, 0}, 240}, {{1, 0, 0, 0, 0, 0, 0, 0}, 29}});
    case 2:
      return make8({{{1, 0, 0, 0, 0, 0, 0, 0}, 126}, {{0, 1, 0, 0, 0, 0, 0, 0}, 46}});
    case 3:
      return make8({{{1, 0, 0, 0, 0, 0, 0, 0}, 168},
                    {{0, 1, 0, 0, 0, 0, 0, 0}, 84},
                    {{0, 0, 1, 0, 0, 0, 0, 0}, 57}});
    case 4:
      return make8({{{0, 1, 0, 0, 0, 0, 0, 0}, 192},
                    {{0, 0, 1, 0, 0, 0, 0, 0}, 72},
                    {{0, 0, 0, 1, 0, 0, 0, 0}, 68}});
    case 5:
      return make8({{{1, 0, 0, 0, 0, 0, 0, 0}, -7560},
                    {{0, 1, 0, 0, 0, 0, 0, 0}, -3672},
                    {{0, 0, 1, 0, 0, 0, 0, 0}, -1512},
                    {{0, 0, 0, 1, 0, 0, 0, 0}, -312},
                    {{0, 0, 0, 0, 1, 0, 0, 0}, 84},
                    {{1, 1, 0, 0, 0, 0, 0, 0}, 60}});
    case 6:
      return make8({{{1, 0, 0, 0, 0, 0, 0, 0}, -12096},
                    {{0, 1, 0, 0, 0, 0, 0, 0}, -6144},
                    {{0, 0, 1, 0, 0, 0, 0, 0}, -2448},
                    {{0, 0, 0, 1, 0, 0, 0, 0}, -656},
                    {{0, 0, 0, 0, 1, 0, 0, 0}, 40},
                    {{0, 0, 0, 0, 0, 1, 0, 0}, 91},
                    {{1, 1, 0, 0, 0, 0, 0, 0}, 96}});
    case 7:
      return make8({{{0, 0, 0, 0, 0, 0, 0, 0}, -14515200},
                    {{1, 0, 0, 0, 0, 0, 0, 0}, -5231520},
                    {{0, 1, 0, 0, 0, 0, 0, 0}, -1715040},
                    {{0, 0, 1, 0, 0, 0, 0, 0}, -462600},
                    {{0, 0, 0, 1, 0, 0, 0, 0}, -85440},
                    {{0, 0, 0, 0, 1, 0, 0, 0}, 4280},
                    {{0, 0, 0, 0, 0, 1, 0, 0}, 525},
                    {{0, 0, 0, 0, 0, 0, 1, 0}, 110},
                    {{2, 0, 0, 0, 0, 0, 0, 0}, 60480},
                    {{1, 1, 0, 0, 0, 0, 0, 0}, 14880},
                    {{1, 0, 1, 0, 0, 0, 0, 0}, -1080},
                    {{1, 0, 0, 1, 0, 0, 0, 0}, -175},
                    {{0, 1, 1, 0, 0, 0, 0, 0}, 40}});
    case 8:
      return make8({{{0, 0, 0, 0, 0, 0, 0, 0}, 1221350400},
                    {{1, 0, 0, 0, 0, 0, 0, 0}, 440847360},
                    {{0, 1, 0, 0, 0, 0, 0, 0}, 147717360},
                    {{0, 0, 1, 0, 0, 0, 0, 0}, 40671720},
                    {{0, 0, 0, 1, 0, 0, 0, 0}, 7663040},
                    {{0, 0, 0, 0, 1, 0, 0, 0}, -387480},
                    {{0, 0, 0, 0, 0, 1, 0, 0}, -52435},
                    {{0, 0, 0, 0, 0, 0, 1, 0}, -1985},
                    {{0, 0, 0, 0, 0, 0, 0, 1}, 135},
                    {{2, 0, 0, 0, 0, 0, 0, 0}, -7644672},
                    {{1, 1, 0, 0, 0, 0, 0, 0}, -2343552},
                    {{1, 0, 1, 0, 0, 0, 0, 0}, -95256},
                    {{1, 0, 0, 1, 0, 0, 0, 0}, -8583},
                    {{1, 0, 0, 0, 1, 0, 0, 0}, 1952},
                    {{1, 0, 0, 0, 0, 1, 0, 0}, 204},
                    {{0, 2, 0, 0, 0, 0, 0, 0}, -66144},
                    {{0, 1, 1, 0, 0, 0, 0, 0}, -17664},
                    {{0, 1, 0, 1, 0, 0, 0, 0}, -399},
                    {{0, 1, 0, 0, 1, 0, 0, 0}, 24},
                    {{0, 0, 2, 0, 0, 0, 0, 0}, -648},
                    {{0, 0, 1, 1, 0, 0, 0, 0}, -84},
                    {{3, 0, 0, 0, 0, 0, 0, 0}, 36288},
                    {{2, 1, 0, 0, 0, 0, 0, 0}, 9024}});
    default:
      fail(Errc::index_out_of_range, "e8_coeff_c index " + std::to_string(a));
  }
}

const std::vector<ReflectionRowRef>& e8_reflection_rows() {
  static const std::vector<ReflectionRowRef> rows = {
      {1, 2, 1, {0, 0, 0, 0, 0, 0, 0, 0}, 240},
      {2, 2, 1, {1, 0, 0, 0, 0, 0, 0, 0}, 126},
      {3, 2, 1, {0, 1, 0, 0, 0, 0, 0, 0}, 84},
      {3, 3, 1, {1, 0, 0, 0, 0, 0, 0, 0}, 56},
      {3, 3, 2, {1, 0, 0, 0, 0, 0, 0, 0}, 56},
      {4, 2, 1, {0, 0, 1, 0, 0, 0, 0, 0}, 72},
      {4, 3, 1, {0, 1, 0, 0, 0, 0, 0, 0}, 64},
      {4, 3, 2, {0, 1, 0, 0, 0, 0, 0, 0}, 64},
      {5, 2, 1, {1, 1, 0, 0, 0, 0, 0, 0}, 60},
      {5, 3, 1, {0, 0, 0, 1, 0, 0, 0, 0}, 56},
      {5, 3, 2, {0, 0, 0, 1, 0, 0, 0, 0}, 56},
      {5, 4, 1, {0, 0, 1, 0, 0, 0, 0, 0}, 27},
      {5, 4, 3, {0, 0, 1, 0, 0, 0, 0, 0}, 27},
      {5, 4, 2, {0, 1, 0, 0, 0, 0, 0, 0}, 84},
      {6, 2, 1, {0, 0, 0, 0, 1, 0, 0, 0}, 40},
      {6, 3, 1, {1, 1, 0, 0, 0, 0, 0, 0}, 32},
      {6, 3, 2, {1, 1, 0, 0, 0, 0, 0, 0}, 32},
      {6, 4, 1, {0, 0, 0, 1, 0, 0, 0, 0}, 28},
      {6, 4, 3, {0, 0, 0, 1, 0, 0, 0, 0}, 28},
      {6, 4, 2, {0, 0, 1, 0, 0, 0, 0, 0}, 72},
      {7, 2, 1, {0, 1, 1, 0, 0, 0, 0, 0}, 40},
      {7, 3, 1, {1, 0, 0, 1, 0, 0, 0, 0}, 35},
      {7, 3, 2, {1, 0, 0, 1, 0, 0, 0, 0}, 35},
      {7, 4, 1, {0, 0, 0, 0, 0, 1, 0, 0}, 35},
      {7, 4, 3, {0, 0, 0, 0, 0, 1, 0, 0}, 35},
      {7, 4, 2, {0, 0, 0, 0, 1, 0, 0, 0}, 40},
      {7, 5, 1, {0, 0, 0, 0, 1, 0, 0, 0}, 16},
      {7, 5, 4, {0, 0, 0, 0, 1, 0, 0, 0}, 16},
      {7, 5, 2, {0, 0, 0, 1, 0, 0, 0, 0}, 56},
      {7, 5, 3, {0, 0, 0, 1, 0, 0, 0, 0}, 56},
      {8, 2, 1, {0, 1, 0, 0, 1, 0, 0, 0}, 24},
      {8, 3, 1, {0, 0, 1, 1, 0, 0, 0, 0}, 20},
      {8, 3, 2, {0, 0, 1, 1, 0, 0, 0, 0}, 20},
      {8, 4, 1, {1, 0, 0, 0, 0, 1, 0, 0}, 15},
      {8, 4, 3, {1, 0, 0, 0, 0, 1, 0, 0}, 15},
      {8, 4, 2, {1, 0, 0, 0, 1, 0, 0, 0}, 40},
      {8, 5, 1, {0, 1, 0, 1, 0, 0, 0, 0}, 21},
      {8, 5, 4, {0, 1, 0, 1, 0, 0, 0, 0}, 21},
      {8, 5, 2, {0, 1, 1, 0, 0, 0, 0, 0}, 16},
      {8, 5, 3, {0, 1, 1, 0, 0, 0, 0, 0}, 16},
      {8, 6, 1, {0, 0, 0, 0, 0, 0, 1, 0}, 10},
      {8, 6, 5, {0, 0, 0, 0, 0, 0, 1, 0}, 10},
      {8, 6, 2, {0, 0, 0, 0, 0, 1, 0, 0}, 35},
      {8, 6, 4, {0, 0, 0, 0, 0, 1, 0, 0}, 35},
      {8, 6, 3, {0, 0, 0, 0, 1, 0, 0, 0}, 40},
  };
  return rows;
}

bool has_e8_m_to_tau(const std::array<int, 8>& n) {
  int count = 0;
  for (int x : n) count += x;
  if (count <= 1) return true;
  static const std::vector<std::array<int, 8>> known = {
      {1, 1, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0, 0}, {1, 0, 0, 1, 0, 0, 0, 0},
      {0, 1, 0, 0, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 1, 0, 0},
      {1, 0, 0, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0, 0},
  };
  for (const auto& k : known)
    if (k == n) return true;
  return false;
}

TauPoly e8_m_to_tau(const std::array<int, 8>& n) {
  int count = 0;
  for (int x : n) count += x;
  if (count == 0) return make8({{{0, 0, 0, 0, 0, 0, 0, 0}, 1}});
  if (count == 1) {
    TauPoly p;
    p.terms.emplace(Weight(n.begin(), n.end()), Rational(1));
    return p;
  }
  const std::array<int, 8> m11 = {1, 1, 0, 0, 0, 0, 0, 0};
  const std::array<int, 8> m011 = {0, 1, 1, 0, 0, 0, 0, 0};
  const std::array<int, 8> m1001 = {1, 0, 0, 1, 0, 0, 0, 0};
  const std::array<int, 8> m01001 = {0, 1, 0, 0, 1, 0, 0, 0};
  const std::array<int, 8> m0011 = {0, 0, 1, 1, 0, 0, 0, 0};
  const std::array<int, 8> m100001 = {1, 0, 0, 0, 0, 1, 0, 0};
  const std::array<int, 8> m10001 = {1, 0, 0, 0, 1, 0, 0, 0};
  const std::array<int, 8> m0101 = {0, 1, 0, 1, 0, 0, 0, 0};
  if (n == m11)
    return make8({{{1, 1, 0, 0, 0, 0, 0, 0}, 1},
                  {{1, 0, 0, 0, 0, 0, 0, 0}, -126},
                  {{0, 1, 0, 0, 0, 0, 0, 0}, -64},
                  {{0, 0, 1, 0, 0, 0, 0, 0}, -27},
                  {{0, 0, 0, 1, 0, 0, 0, 0}, -8}});
  if (n == m011)
    return make8({{{0, 0, 0, 0, 0, 0, 0, 0}, -362880},
                  {{1, 0, 0, 0, 0, 0, 0, 0}, -141372},
                  {{0, 1, 0, 0, 0, 0, 0, 0}, -48084},
                  {{0, 0, 1, 0, 0, 0, 0, 0}, -13644},
                  {{0, 0, 0, 1, 0, 0, 0, 0}, -2668},
                  {{0, 0, 0, 0, 1, 0, 0, 0}, 145},
                  {{0, 0, 0, 0, 0, 1, 0, 0}, 28},
                  {{2, 0, 0, 0, 0, 0, 0, 0}, 1512},
                  {{1, 1, 0, 0, 0, 0, 0, 0}, 456},
                  {{1, 0, 1, 0, 0, 0, 0, 0}, -27},
                  {{1, 0, 0, 1, 0, 0, 0, 0}, -7},
                  {{0, 1, 1, 0, 0, 0, 0, 0}, 1}});
  if (n == m1001)
    return make8({{{1, 0, 0, 0, 0, 0, 0, 0}, 4032},
                  {{0, 1, 0, 0, 0, 0, 0, 0}, 1984},
                  {{0, 0, 1, 0, 0, 0, 0, 0}, 792},
                  {{0, 0, 0, 1, 0, 0, 0, 0}, 200},
                  {{0, 0, 0, 0, 1, 0, 0, 0}, -16},
                  {{0, 0, 0, 0, 0, 1, 0, 0}, -7},
                  {{1, 0, 0, 1, 0, 0, 0, 0}, 1},
                  {{1, 1, 0, 0, 0, 0, 0, 0}, -32}});
  if (n == m01001)
    return make8({{{0, 0, 0, 0, 0, 0, 0, 0}, 38707200},
                  {{1, 0, 0, 0, 0, 0, 0, 0}, 13809600},
                  {{0, 1, 0, 0, 0, 0, 0, 0}, 4643920},
                  {{0, 0, 1, 0, 0, 0, 0, 0}, 1272600},
                  {{0, 0, 0, 1, 0, 0, 0, 0}, 238400},
                  {{0, 0, 0, 0, 1, 0, 0, 0}, -12050},
                  {{0, 0, 0, 0, 0, 1, 0, 0}, -1575},
                  {{0, 0, 0, 0, 0, 0, 1, 0}, -60},
                  {{2, 0, 0, 0, 0, 0, 0, 0}, -283248},
                  {{1, 1, 0, 0, 0, 0, 0, 0}, -88888},
                  {{1, 0, 1, 0, 0, 0, 0, 0}, -8064},
                  {{1, 0, 0, 1, 0, 0, 0, 0}, -1457},
                  {{1, 0, 0, 0, 1, 0, 0, 0}, 118},
                  {{1, 0, 0, 0, 0, 1, 0, 0}, 21},
                  {{0, 2, 0, 0, 0, 0, 0, 0}, -2156},
                  {{0, 1, 1, 0, 0, 0, 0, 0}, -656},
                  {{0, 1, 0, 1, 0, 0, 0, 0}, -56},
                  {{0, 1, 0, 0, 1, 0, 0, 0}, 1},
                  {{3, 0, 0, 0, 0, 0, 0, 0}, 1512},
                  {{2, 1, 0, 0, 0, 0, 0, 0}, 456},
                  {{0, 0, 2, 0, 0, 0, 0, 0}, -27},
                  {{0, 0, 1, 1, 0, 0, 0, 0}, -6}});
  if (n == m0011)
    return make8({{{0, 0, 0, 0, 0, 0, 0, 0}, 13685760},
                  {{1, 0, 0, 0, 0, 0, 0, 0}, 5046624},
                  {{0, 1, 0, 0, 0, 0, 0, 0}, 1663728},
                  {{0, 0, 1, 0, 0, 0, 0, 0}, 459144},
                  {{0, 0, 0, 1, 0, 0, 0, 0}, 86768},
                  {{0, 0, 0, 0, 1, 0, 0, 0}, -4384},
                  {{0, 0, 0, 0, 0, 1, 0, 0}, -607},
                  {{0, 0, 0, 0, 0, 0, 1, 0}, -21},
                  {{2, 0, 0, 0, 0, 0, 0, 0}, -48384},
                  {{1, 1, 0, 0, 0, 0, 0, 0}, -12816},
                  {{1, 0, 1, 0, 0, 0, 0, 0}, 2808},
                  {{1, 0, 0, 1, 0, 0, 0, 0}, 697},
                  {{1, 0, 0, 0, 1, 0, 0, 0}, -16},
                  {{1, 0, 0, 0, 0, 1, 0, 0}, -6},
                  {{0, 2, 0, 0, 0, 0, 0, 0}, -512},
                  {{0, 1, 1, 0, 0, 0, 0, 0}, -88},
                  {{0, 1, 0, 1, 0, 0, 0, 0}, 21},
                  {{0, 0, 1, 1, 0, 0, 0, 0}, 1},
                  {{2, 1, 0, 0, 0, 0, 0, 0}, -32}});
  if (n == m100001)
    return make8({{{0, 0, 0, 0, 0, 0, 0, 0}, -18247680},
                  {{1, 0, 0, 0, 0, 0, 0, 0}, -6704640},
                  {{0, 1, 0, 0, 0, 0, 0, 0}, -2211984},
                  {{0, 0, 1, 0, 0, 0, 0, 0}, -607104},
                  {{0, 0, 0, 1, 0, 0, 0, 0}, -114196},
                  {{0, 0, 0, 0, 1, 0, 0, 0}, 5784},
                  {{0, 0, 0, 0, 0, 1, 0, 0}, 800},
                  {{0, 0, 0, 0, 0, 0, 1, 0}, 25},
                  {{2, 0, 0, 0, 0, 0, 0, 0}, 72576},
                  {{1, 1, 0, 0, 0, 0, 0, 0}, 19584},
                  {{1, 0, 1, 0, 0, 0, 0, 0}, -2088},
                  {{1, 0, 0, 1, 0, 0, 0, 0}, -448},
                  {{1, 0, 0, 0, 0, 1, 0, 0}, 1},
                  {{0, 2, 0, 0, 0, 0, 0, 0}, 384},
                  {{0, 1, 1, 0, 0, 0, 0, 0}, 96},
                  {{0, 1, 0, 1, 0, 0, 0, 0}, -7}});
  if (n == m10001)
    return make8({{{0, 0, 0, 0, 0, 0, 0, 0}, 3265920},
                  {{1, 0, 0, 0, 0, 0, 0, 0}, 1212624},
                  {{0, 1, 0, 0, 0, 0, 0, 0}, 403380},
                  {{0, 0, 1, 0, 0, 0, 0, 0}, 111087},
                  {{0, 0, 0, 1, 0, 0, 0, 0}, 21068},
                  {{0, 0, 0, 0, 1, 0, 0, 0}, -1081},
                  {{0, 0, 0, 0, 0, 1, 0, 0}, -168},
                  {{0, 0, 0, 0, 0, 0, 1, 0}, -4},
                  {{2, 0, 0, 0, 0, 0, 0, 0}, -13608},
                  {{1, 1, 0, 0, 0, 0, 0, 0}, -3624},
                  {{1, 0, 1, 0, 0, 0, 0, 0}, 243},
                  {{1, 0, 0, 1, 0, 0, 0, 0}, 49},
                  {{1, 0, 0, 0, 1, 0, 0, 0}, 1},
                  {{0, 1, 1, 0, 0, 0, 0, 0}, -10}});
  if (n == m0101)
    return make8({{{0, 0, 0, 0, 0, 0, 0, 0}, 3179520},
                  {{1, 0, 0, 0, 0, 0, 0, 0}, 1173312},
                  {{0, 1, 0, 0, 0, 0, 0, 0}, 387952},
                  {{0, 0, 1, 0, 0, 0, 0, 0}, 106776},
                  {{0, 0, 0, 1, 0, 0, 0, 0}, 20144},
                  {{0, 0, 0, 0, 1, 0, 0, 0}, -1024},
                  {{0, 0, 0, 0, 0, 1, 0, 0}, -145},
                  {{0, 0, 0, 0, 0, 0, 1, 0}, -5},
                  {{2, 0, 0, 0, 0, 0, 0, 0}, -12672},
                  {{1, 1, 0, 0, 0, 0, 0, 0}, -3456},
                  {{1, 0, 1, 0, 0, 0, 0, 0}, 360},
                  {{1, 0, 0, 1, 0, 0, 0, 0}, 77},
                  {{0, 2, 0, 0, 0, 0, 0, 0}, -64},
                  {{0, 1, 1, 0, 0, 0, 0, 0}, -16},
                  {{0, 1, 0, 1, 0, 0, 0, 0}, 1}});
  fail(Errc::bad_argument, "no reference expansion for " +
                               format_weight(Weight(n.begin(), n.end())));
}

const std::array<SpectrumRowRef, 29>& e8_spectrum_table() {
  static const std::array<SpectrumRowRef, 29> rows = {{
      {{0, 0, 0, 0, 0, 0, 0, 0}, 0, 0, 0, 0, 0},
      {{1, 0, 0, 0, 0, 0, 0, 0}, -2, -58, 2, 2, 29},
      {{0, 1, 0, 0, 0, 0, 0, 0}, -4, -92, 2, 4, 46},
      {{0, 0, 1, 0, 0, 0, 0, 0}, -6, -114, 3, 6, 57},
      {{2, 0, 0, 0, 0, 0, 0, 0}, -8, -116, 4, 8, 58},
      {{0, 0, 0, 1, 0, 0, 0, 0}, -8, -136, 3, 8, 68},
      {{1, 1, 0, 0, 0, 0, 0, 0}, -10, -150, 4, 10, 75},
      {{0, 0, 0, 0, 1, 0, 0, 0}, -12, -168, 4, 12, 84},
      {{1, 0, 1, 0, 0, 0, 0, 0}, -14, -172, 5, 14, 86},
      {{0, 0, 0, 0, 0, 1, 0, 0}, -14, -182, 4, 14, 91},
      {{0, 2, 0, 0, 0, 0, 0, 0}, -16, -184, 4, 16, 92},
      {{1, 0, 0, 1, 0, 0, 0, 0}, -16, -194, 5, 16, 97},
      {{3, 0, 0, 0, 0, 0, 0, 0}, -18, -174, 6, 18, 87},
      {{0, 1, 1, 0, 0, 0, 0, 0}, -18, -206, 5, 18, 103},
      {{2, 1, 0, 0, 0, 0, 0, 0}, -20, -208, 6, 20, 104},
      {{0, 0, 0, 0, 0, 0, 1, 0}, -20, -220, 5, 20, 110},
      {{1, 0, 0, 0, 1, 0, 0, 0}, -22, -226, 6, 22, 113},
      {{0, 1, 0, 1, 0, 0, 0, 0}, -22, -228, 5, 22, 114},
      {{0, 0, 2, 0, 0, 0, 0, 0}, -24, -228, 6, 24, 114},
      {{1, 0, 0, 0, 0, 1, 0, 0}, -24, -240, 6, 24, 120},
      {{2, 0, 1, 0, 0, 0, 0, 0}, -26, -230, 7, 26, 115},
      {{1, 2, 0, 0, 0, 0, 0, 0}, -26, -242, 6, 26, 121},
      {{0, 0, 1, 1, 0, 0, 0, 0}, -26, -250, 6, 26, 125},
      {{2, 0, 0, 1, 0, 0, 0, 0}, -28, -252, 7, 28, 126},
      {{0, 1, 0, 0, 1, 0, 0, 0}, -28, -260, 6, 28, 130},
      {{1, 1, 1, 0, 0, 0, 0, 0}, -30, -264, 7, 30, 132},
      {{0, 0, 0, 0, 0, 0, 0, 1}, -30, -270, 6, 30, 135},
      {{4, 0, 0, 0, 0, 0, 0, 0}, -32, -232, 8, 32, 116},
      {{3, 1, 0, 0, 0, 0, 0, 0}, -34, -266, 8, 34, 133},
  }};
  return rows;
}

std::array<E6CoefficientRef, 6> e6_corrected_coefficients() {
  // B_1 = -(4/3)(1+12nu) tau1          B_2 = -(4/3) tau2 - 2nu (11 tau2 + 72)
  // B_3 = -(10/3) tau3 - 10nu (3 tau3 + 8 tau6)
  // B_4 = -(10/3) tau4 - 6nu (7 tau4 + 8 tau1 tau6 - 28 tau2 - 216)
  // B_5 = -2 tau5 - 10nu (3 tau5 + 8 tau1)
  // B_6 = -2(3 + 8nu) tau6
  std::array<E6CoefficientRef, 6> out;
  out[0] = {Rational(-4, 3), make_rank(6, {{{1, 0, 0, 0, 0, 0}, Rational(8)}})};
  out[1] = {Rational(-4, 3), make_rank(6, {{{0, 1, 0, 0, 0, 0}, Rational(11)},
                                           {{0, 0, 0, 0, 0, 0}, Rational(72)}})};
  out[2] = {Rational(-10, 3), make_rank(6, {{{0, 0, 1, 0, 0, 0}, Rational(15)},
                                            {{0, 0, 0, 0, 0, 1}, Rational(40)}})};
  out[3] = {Rational(-10, 3), make_rank(6, {{{0, 0, 0, 1, 0, 0}, Rational(21)},
                                            {{1, 0, 0, 0, 0, 1}, Rational(24)},
                                            {{0, 1, 0, 0, 0, 0}, Rational(-84)},
                                            {{0, 0, 0, 0, 0, 0}, Rational(-216) * 3}})};
  out[4] = {Rational(-2), make_rank(6, {{{0, 0, 0, 0, 1, 0}, Rational(15)},
                                        {{1, 0, 0, 0, 0, 0}, Rational(40)}})};
  out[5] = {Rational(-6), make_rank(6, {{{0, 0, 0, 0, 0, 1}, Rational(8)}})};
  return out;
}

}  // namespace orbitham::reference
