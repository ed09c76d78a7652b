#ifndef ORBITHAM_WEYLORBIT_HPP
#define ORBITHAM_WEYLORBIT_HPP

#include <cstdint>
#include <functional>
#include <span>

#include "orbitham/rootdata.hpp"

namespace orbitham {

struct OrbitOptions {
  std::size_t mem_cap_bytes = std::size_t(2) << 30;  // refuse orbits beyond this
};

// A fully enumerated Weyl orbit.  Elements are stored flat (rank-strided,
// lexicographically sorted) so the large fundamental orbits stay compact.
class WeylOrbit {
public:
  WeylOrbit(Weight dominant, int rank, std::vector<int32_t> flat);

  const Weight& dominant() const { return dominant_; }
  std::size_t size() const { return count_; }
  int rank() const { return rank_; }

  std::span<const int32_t> element_span(std::size_t i) const {
    return {flat_.data() + i * rank_, static_cast<std::size_t>(rank_)};
  }
  Weight element(std::size_t i) const;
  const std::vector<int32_t>& flat() const { return flat_; }

private:
  Weight dominant_;
  int rank_;
  std::size_t count_;
  std::vector<int32_t> flat_;
};

Weight simple_reflection(int i, const Weight& lam, const RootSystem& rs);  // 1-based i

Weight dominant_conjugate(const Weight& lam, const RootSystem& rs);

// In-place dominantization of a raw coordinate buffer; returns the number of
// reflections applied.  Hot-path variant used by the orbit algebra.
int dominantize_inplace(int32_t* v, const RootSystem& rs);

BigInt orbit_size(const Weight& dominant, const RootSystem& rs);  // orbit-stabilizer

WeylOrbit enumerate_orbit(const Weight& dominant, const RootSystem& rs,
                          const OrbitOptions& opts = {});

// Visits every orbit element once, in enumeration (BFS) order.
void orbit_stream(const Weight& dominant, const RootSystem& rs,
                  const std::function<void(std::span<const int32_t>)>& fn,
                  const OrbitOptions& opts = {});

bool orbit_contains(const Weight& dominant, const Weight& mu, const RootSystem& rs);

}  // namespace orbitham

#endif
