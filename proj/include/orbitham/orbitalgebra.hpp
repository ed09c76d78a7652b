#ifndef ORBITHAM_ORBITALGEBRA_HPP
#define ORBITHAM_ORBITALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>

#include "orbitham/taupoly.hpp"
#include "orbitham/weylorbit.hpp"

namespace orbitham {

class CacheStore;

// Exact integer linear combination of orbit functions M_n, keyed by dominant
// weights.  No zero coefficients are stored.
struct MExpansion {
  std::map<Weight, BigInt> terms;

  void add(const Weight& n, const BigInt& c) {
    if (c == 0) return;
    auto it = terms.find(n);
    if (it == terms.end()) {
      terms.emplace(n, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool operator==(const MExpansion& o) const { return terms == o.terms; }
};

// Rational-coefficient linear combination of orbit functions.
using MExpansionQ = std::map<Weight, Rational>;

Rational grading(const Weight& p, const std::vector<int>& f);
Rational grading(const Weight& p, const std::vector<Rational>& f);

struct AlgebraOptions {
  int threads = 0;  // 0 = hardware_concurrency
  std::size_t mem_cap_bytes = std::size_t(2) << 30;
};

// The orbit-function algebra of one root system: cached fundamental orbits,
// product decompositions and basis conversions, all exact and memoized.
class OrbitAlgebra {
public:
  explicit OrbitAlgebra(RootSystem rs, AlgebraOptions opts = {});

  const RootSystem& rs() const { return rs_; }
  const AlgebraOptions& options() const { return opts_; }

  // attach a persistent cache (not owned); nullptr detaches
  void attach_cache(CacheStore* cache) { cache_ = cache; }

  const WeylOrbit& fundamental_orbit(int a);  // 1-based

  // M_j * M_{w_a} = sum_k mu_k M_k; exact multiplicities.
  MExpansion decompose_product(const Weight& j, int a);

  // prod_a tau_a^{p_a} in the M basis.
  MExpansion tau_power_to_M(const Weight& p);

  // M_n as a polynomial in tau; integer coefficients, top term tau^n.
  TauPoly m_to_tau(const Weight& n);

  // Number of distinct product decompositions computed so far.
  std::size_t decomposition_count() const;

  Weight fundamental_weight(int a) const;

  // memo shared with the reflection-pair accumulation in the Hamiltonian layer
  std::optional<MExpansionQ> cached_accumulation(const Weight& n) const;
  void store_accumulation(const Weight& n, const MExpansionQ& acc);
  CacheStore* cache() const { return cache_; }

private:
  RootSystem rs_;
  AlgebraOptions opts_;
  CacheStore* cache_ = nullptr;

  mutable std::mutex mu_;
  std::map<int, std::unique_ptr<WeylOrbit>> orbits_;
  std::map<std::pair<Weight, int>, MExpansion> decomp_memo_;
  std::map<Weight, MExpansion> tau2m_memo_;
  std::map<Weight, TauPoly> m2tau_memo_;
  std::map<Weight, MExpansionQ> accum_memo_;

  MExpansion decompose_uncached(const Weight& j, int a);
};

}  // namespace orbitham

#endif
