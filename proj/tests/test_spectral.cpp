#include <doctest.h>

#include "orbitham/reference_tables.hpp"
#include "orbitham/spectral.hpp"

using namespace orbitham;

namespace {

Weight fw(int rank, int a) {
  Weight w(rank, 0);
  w[a - 1] = 1;
  return w;
}

NuCoefficient linear_eps(long c0, long c1) {
  return NuCoefficient(Rational(c0)) + NuCoefficient(Rational(c1)) * NuCoefficient::nu();
}

// characteristic polynomial coefficients via the Faddeev-LeVerrier recursion
std::vector<Rational> char_poly(const std::vector<std::vector<Rational>>& A) {
  const int n = static_cast<int>(A.size());
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, 0));
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = 1;
  std::vector<std::vector<Rational>> AM = M;
  for (int k = 1; k <= n; ++k) {
    // M_k = A * (M_{k-1} + c_{k-1} I)
    for (int i = 0; i < n; ++i) M[i][i] += c[k - 1];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int l = 0; l < n; ++l) s += A[i][l] * M[l][j];
        AM[i][j] = s;
      }
    M = AM;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += M[i][i];
    c[k] = -tr / k;
  }
  return c;  // x^n + c1 x^{n-1} + ... + cn
}

}  // namespace

TEST_CASE("closed-form eigenvalues") {
  RootSystem rs = RootSystem::build("E8");
  CHECK(eigenvalue(fw(8, 1), rs) == linear_eps(-2, -58));
  CHECK(eigenvalue(fw(8, 8), rs) == linear_eps(-30, -270));
  CHECK(eigenvalue(Weight(8, 0), rs) == NuCoefficient(Rational(0)));
  CHECK(eigenvalue(Weight{1, 1, 0, 0, 0, 0, 0, 0}, rs) == linear_eps(-10, -150));
  CHECK_THROWS_AS(eigenvalue(Weight{-1, 0, 0, 0, 0, 0, 0, 0}, rs), Error);
}

TEST_CASE("interaction rows: diagonal and triangular coupling") {
  OrbitAlgebra alg(RootSystem::build("E8"));
  HIntRow row = h_int_on_M(fw(8, 1), alg);
  CHECK(row.rho_dot_n == 29);
  CHECK(row.coupling.size() == 1);
  CHECK(row.coupling.at(Weight(8, 0)) == 240);
  // h_int M_0 = 0
  HIntRow zero = h_int_on_M(Weight(8, 0), alg);
  CHECK(zero.coupling.empty());
  CHECK(zero.rho_dot_n == 0);
  // diagonal is -2 nu (rho, w_a) for every fundamental weight
  for (int a = 1; a <= 8; ++a)
    CHECK(h_int_on_M(fw(8, a), alg).rho_dot_n == alg.rs().rho_dot_weight(a));
  // strict height drop on a composite state
  const RootSystem& rs = alg.rs();
  HIntRow comp = h_int_on_M(Weight{1, 1, 0, 0, 0, 0, 0, 0}, alg);
  for (const auto& [m, w] : comp.coupling)
    CHECK(rs.weyl_height(m) < rs.weyl_height(Weight{1, 1, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("first excited eigenfunction in closed form") {
  OrbitAlgebra alg(RootSystem::build("E8"));
  Eigenstate st = eigenfunction(fw(8, 1), alg);
  CHECK(st.eigenvalue == linear_eps(-2, -58));
  REQUIRE(st.expansion_M.size() == 2);
  CHECK(st.expansion_M.at(fw(8, 1)) == NuCoefficient(Rational(1)));
  // c_0 = 240 nu / (1 + 29 nu)
  NuCoefficient expect = NuCoefficient(Rational(240)) * NuCoefficient::nu() /
                         (NuCoefficient(Rational(1)) +
                          NuCoefficient(Rational(29)) * NuCoefficient::nu());
  CHECK(st.expansion_M.at(Weight(8, 0)) == expect);
  // tau form: tau_1 + 240 nu/(1+29 nu)
  CHECK(st.expansion_tau.terms.at(fw(8, 1)) == NuCoefficient(Rational(1)));
  CHECK(st.expansion_tau.terms.at(Weight(8, 0)) == expect);
}

TEST_CASE("ground state and the nu = 0 limit") {
  OrbitAlgebra alg(RootSystem::build("E8"));
  Eigenstate ground = eigenfunction(Weight(8, 0), alg, Rational(3, 7));
  CHECK(ground.expansion_M.size() == 1);
  CHECK(*ground.eigenvalue.eval(Rational(3, 7)) == 0);
  for (int a : {1, 2, 3}) {
    Eigenstate st = eigenfunction(fw(8, a), alg, Rational(0));
    TauPoly phi = eval_nu(st.expansion_tau, Rational(0));
    TauPoly tau_a;
    tau_a.add_term(fw(8, a), Rational(1));
    CHECK(phi == tau_a);
    CHECK(*st.eigenvalue.eval(Rational(0)) == -alg.rs().gram()[a - 1][a - 1]);
  }
}

TEST_CASE("resonance is detected and reported") {
  OrbitAlgebra alg(RootSystem::build("A2"));
  // eps_[2,0] - eps_[0,1] = -2 - 2 nu vanishes at nu = -1 with coupling
  CHECK_NOTHROW(eigenfunction(Weight{2, 0}, alg, Rational(1, 2)));
  try {
    eigenfunction(Weight{2, 0}, alg, Rational(-1));
    FAIL("expected resonance");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::resonance);
    CHECK(std::string(e.what()).find("-1") != std::string::npos);
  }
  // symbolic mode never divides by a zero polynomial
  CHECK_NOTHROW(eigenfunction(Weight{2, 0}, alg));
}

TEST_CASE("symbolic eigenfunctions satisfy the operator exactly") {
  OrbitAlgebra alg(RootSystem::build("A2"));
  AlgebraicOperator op = assemble_operator(alg);
  for (const Weight& n : {Weight{1, 0}, Weight{1, 1}, Weight{2, 0}, Weight{2, 2}}) {
    Eigenstate st = eigenfunction(n, alg);
    NuTauPoly residual =
        apply_operator(op, st.expansion_tau) - st.expansion_tau * st.eigenvalue;
    CHECK(residual.is_zero());
  }
}

TEST_CASE("spectrum enumeration: content and ordering") {
  RootSystem rs = RootSystem::build("E8");
  auto rows = enumerate_spectrum(rs, Rational(135));
  REQUIRE(rows.size() == 29);
  // ordered by |(n,n)|, ties by height
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i - 1].norm <= rows[i].norm);
    if (rows[i - 1].norm == rows[i].norm) CHECK(rows[i - 1].height <= rows[i].height);
  }
  CHECK(rows[0].n == Weight(8, 0));
  CHECK(rows[1].n == fw(8, 1));
  // the [1,1,0,...] row: eps = -10 - 150 nu, fmin grading 4, height 75
  bool found = false;
  for (const auto& r : rows)
    if (r.n == Weight{1, 1, 0, 0, 0, 0, 0, 0}) {
      found = true;
      CHECK(r.eps == linear_eps(-10, -150));
      CHECK(r.fmin == 4);
      CHECK(r.height == 75);
    }
  CHECK(found);
  // nu = 0 evaluation gives the pure Laplacian spectrum -(n,n)
  for (const auto& r : rows) CHECK(*r.eps.eval(Rational(0)) == -r.norm);
}

TEST_CASE("A2 spectrum against a dense characteristic-polynomial oracle") {
  OrbitAlgebra alg(RootSystem::build("A2"));
  AlgebraicOperator op = assemble_operator(alg);
  const long H = 4;
  auto rows = enumerate_spectrum(alg.rs(), Rational(H));
  // basis: all monomials with ht <= H (the same labels)
  std::vector<Weight> basis;
  for (const auto& r : rows) basis.push_back(r.n);
  std::sort(basis.begin(), basis.end());
  std::map<Weight, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

  for (const Rational& nu : {Rational(1), Rational(5, 7)}) {
    const int N = static_cast<int>(basis.size());
    std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, 0));
    for (int j = 0; j < N; ++j) {
      TauPoly mono;
      mono.add_term(basis[j], Rational(1));
      TauPoly image = apply_operator(op, mono, nu);
      for (const auto& [e, c] : image.terms) {
        REQUIRE(index.count(e));  // the flag keeps the image inside the space
        M[index[e]][j] += c;
      }
    }
    std::vector<Rational> cp = char_poly(M);
    // expected: product of (x - eps_n(nu)) over the same labels
    std::vector<Rational> prod{Rational(1)};
    for (const auto& r : rows) {
      Rational eps = *r.eps.eval(nu);
      std::vector<Rational> next(prod.size() + 1, Rational(0));
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i] += prod[i];          // x * prod
        next[i + 1] -= eps * prod[i];
      }
      prod = std::move(next);
    }
    CHECK(cp == prod);
  }
}

TEST_CASE("degeneracy scan") {
  RootSystem e8 = RootSystem::build("E8");
  auto groups = find_degeneracies(e8, Rational(121));
  Weight a(reference::kDegeneratePairA.begin(), reference::kDegeneratePairA.end());
  Weight b(reference::kDegeneratePairB.begin(), reference::kDegeneratePairB.end());
  bool found = false;
  for (const auto& g : groups) {
    if (std::count(g.labels.begin(), g.labels.end(), a)) {
      CHECK(std::count(g.labels.begin(), g.labels.end(), b) == 1);
      CHECK(g.eps == linear_eps(reference::kDegenerateEpsConst, reference::kDegenerateEpsNu));
      found = true;
    }
    CHECK(e8.inner_product(g.labels.front(), g.labels.front()) > 34);
  }
  CHECK(found);

  // A2: nothing below the first shell, then the conjugate doublet {w1, w2}
  // (equal norm and equal height) shows up as a genuine degeneracy
  RootSystem a2 = RootSystem::build("A2");
  CHECK(find_degeneracies(a2, Rational(1, 2)).empty());
  auto small = find_degeneracies(a2, Rational(2, 3));
  REQUIRE(small.size() == 1);
  CHECK(small[0].labels == std::vector<Weight>{Weight{0, 1}, Weight{1, 0}});
}

TEST_CASE("dominant weight enumeration bounds") {
  RootSystem rs = RootSystem::build("E8");
  CHECK(dominant_weights_below_height(rs, Rational(135)).size() == 29);
  CHECK(dominant_weights_below_height(rs, Rational(28)).size() == 1);
  auto by_norm = dominant_weights_below_norm(rs, Rational(4));
  CHECK(by_norm.size() == 3);  // 0, w1, w2
}
