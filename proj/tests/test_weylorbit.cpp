#include <doctest.h>

#include <set>

#include "orbitham/reference_tables.hpp"
#include "orbitham/weylorbit.hpp"

using namespace orbitham;

namespace {

Weight fw(int rank, int a) {
  Weight w(rank, 0);
  w[a - 1] = 1;
  return w;
}

// Brute-force closure of {seed} under all simple reflections; independent of
// the dominantization walk.
std::set<Weight> group_closure(const Weight& seed, const RootSystem& rs) {
  std::set<Weight> seen{seed};
  std::vector<Weight> frontier{seed};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& v : frontier)
      for (int i = 1; i <= rs.rank(); ++i) {
        Weight w = simple_reflection(i, v, rs);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("simple reflections on A2") {
  RootSystem rs = RootSystem::build("A2");
  CHECK(simple_reflection(1, Weight{1, 0}, rs) == Weight{-1, 1});
  CHECK(simple_reflection(1, Weight{-1, 1}, rs) == Weight{1, 0});  // involution
  CHECK(simple_reflection(2, Weight{1, 0}, rs) == Weight{1, 0});   // fixed point
  CHECK_THROWS_AS(simple_reflection(3, Weight{1, 0}, rs), Error);
}

TEST_CASE("reflections preserve the bilinear form") {
  for (const char* name : {"A2", "G2", "B3"}) {
    RootSystem rs = RootSystem::build(name);
    Weight v(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) v[i] = (i * 7 + 3) % 5 - 2;
    for (int i = 1; i <= rs.rank(); ++i) {
      Weight w = simple_reflection(i, v, rs);
      CHECK(rs.inner_product(w, w) == rs.inner_product(v, v));
    }
  }
}

TEST_CASE("dominant conjugate on A2, checked against the full group") {
  RootSystem rs = RootSystem::build("A2");
  CHECK(dominant_conjugate(Weight{-1, 1}, rs) == Weight{1, 0});
  // oracle: enumerate the whole 6-element group orbit of [0,-1]
  std::set<Weight> orbit = group_closure(Weight{0, -1}, rs);
  Weight dom;
  int dominants = 0;
  for (const Weight& v : orbit)
    if (is_dominant(v)) {
      dom = v;
      ++dominants;
    }
  CHECK(dominants == 1);
  CHECK(dom == Weight{1, 0});
  CHECK(dominant_conjugate(Weight{0, -1}, rs) == dom);
  // idempotence on dominants
  CHECK(dominant_conjugate(Weight{3, 2}, rs) == Weight{3, 2});
}

TEST_CASE("orbits match the brute-force group closure on small systems") {
  for (const char* name : {"A2", "G2", "B3"}) {
    RootSystem rs = RootSystem::build(name);
    for (int a = 1; a <= rs.rank(); ++a) {
      WeylOrbit orb = enumerate_orbit(fw(rs.rank(), a), rs);
      std::set<Weight> expect = group_closure(fw(rs.rank(), a), rs);
      CHECK(orb.size() == expect.size());
      std::set<Weight> got;
      for (std::size_t i = 0; i < orb.size(); ++i) got.insert(orb.element(i));
      CHECK(got == expect);
      CHECK(orbit_size(fw(rs.rank(), a), rs) == BigInt(static_cast<long>(expect.size())));
    }
  }
}

TEST_CASE("orbit elements are lexicographically sorted and deterministic") {
  RootSystem rs = RootSystem::build("E8");
  WeylOrbit orb = enumerate_orbit(fw(8, 1), rs);
  CHECK(orb.size() == 240);
  for (std::size_t i = 1; i < orb.size(); ++i) CHECK(orb.element(i - 1) < orb.element(i));
}

TEST_CASE("orbit invariants: zero sum and equal norms") {
  for (const char* name : {"A2", "G2", "E6"}) {
    RootSystem rs = RootSystem::build(name);
    Weight d(rs.rank(), 0);
    d[0] = 1;
    if (rs.rank() > 2) d[2] = 2;
    WeylOrbit orb = enumerate_orbit(d, rs);
    Weight sum(rs.rank(), 0);
    Rational norm = rs.inner_product(d, d);
    for (std::size_t i = 0; i < orb.size(); ++i) {
      Weight el = orb.element(i);
      for (int k = 0; k < rs.rank(); ++k) sum[k] += el[k];
      CHECK(rs.inner_product(el, el) == norm);
    }
    CHECK(is_zero(sum));
  }
}

TEST_CASE("E8 fundamental orbit sizes and the Weyl order") {
  RootSystem rs = RootSystem::build("E8");
  BigInt order = rs.weyl_order();
  for (int a = 1; a <= 8; ++a) {
    BigInt size = orbit_size(fw(8, a), rs);
    CHECK(size == reference::kE8OrbitSizes[a - 1]);
    CHECK(order % size == 0);  // orbit-stabilizer
  }
  // spot-check against enumeration for the two smallest
  CHECK(enumerate_orbit(fw(8, 1), rs).size() == 240);
  CHECK(enumerate_orbit(fw(8, 2), rs).size() == 2160);
}

TEST_CASE("stabilizer formula agrees with enumeration on mixed weights") {
  RootSystem rs = RootSystem::build("E6");
  for (const Weight& d : {Weight{1, 1, 0, 0, 0, 0}, Weight{0, 0, 2, 0, 0, 0},
                          Weight{1, 0, 0, 0, 0, 1}, Weight{0, 1, 0, 1, 0, 0}}) {
    WeylOrbit orb = enumerate_orbit(d, rs);
    CHECK(BigInt(static_cast<long>(orb.size())) == orbit_size(d, rs));
  }
}

TEST_CASE("orbit_contains works without materializing") {
  RootSystem rs = RootSystem::build("A2");
  CHECK(orbit_contains(Weight{1, 0}, Weight{-1, 1}, rs));
  CHECK_FALSE(orbit_contains(Weight{1, 0}, Weight{0, 1}, rs));
  RootSystem e8 = RootSystem::build("E8");
  CHECK_FALSE(orbit_contains(fw(8, 2), Weight{2, 0, 0, 0, 0, 0, 0, 0}, e8));
  CHECK(orbit_contains(Weight{2, 0, 0, 0, 0, 0, 0, 0}, Weight{2, 0, 0, 0, 0, 0, 0, 0}, e8));
}

TEST_CASE("non-dominant inputs and the memory cap are rejected") {
  RootSystem rs = RootSystem::build("E8");
  CHECK_THROWS_AS(enumerate_orbit(Weight{-1, 0, 0, 0, 0, 0, 0, 0}, rs), Error);
  OrbitOptions tiny;
  tiny.mem_cap_bytes = 1024;
  try {
    enumerate_orbit(fw(8, 8), rs, tiny);
    FAIL("expected memory cap error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::memory_cap);
  }
}

TEST_CASE("orbit_stream visits every element exactly once") {
  RootSystem rs = RootSystem::build("G2");
  std::set<Weight> seen;
  std::size_t calls = 0;
  orbit_stream(Weight{1, 1}, rs, [&](std::span<const int32_t> v) {
    seen.insert(Weight(v.begin(), v.end()));
    ++calls;
  });
  CHECK(calls == seen.size());
  CHECK(BigInt(static_cast<long>(calls)) == orbit_size(Weight{1, 1}, rs));
}
