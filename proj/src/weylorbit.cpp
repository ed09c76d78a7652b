#include "orbitham/weylorbit.hpp"

#include <algorithm>
#include <unordered_set>

namespace orbitham {

WeylOrbit::WeylOrbit(Weight dominant, int rank, std::vector<int32_t> flat)
    : dominant_(std::move(dominant)), rank_(rank), count_(flat.size() / rank),
      flat_(std::move(flat)) {}

Weight WeylOrbit::element(std::size_t i) const {
  auto s = element_span(i);
  return Weight(s.begin(), s.end());
}

Weight simple_reflection(int i, const Weight& lam, const RootSystem& rs) {
  if (i < 1 || i > rs.rank()) fail(Errc::index_out_of_range, "reflection index " + std::to_string(i));
  if (static_cast<int>(lam.size()) != rs.rank())
    fail(Errc::dimension_mismatch, "simple_reflection: wrong weight length");
  Weight out = lam;
  int li = lam[i - 1];
  if (li == 0) return out;
  const auto& row = rs.cartan()[i - 1];
  for (int j = 0; j < rs.rank(); ++j) out[j] -= li * row[j];
  return out;
}

int dominantize_inplace(int32_t* v, const RootSystem& rs) {
  const int n = rs.rank();
  const auto& cartan = rs.cartan();
  int steps = 0;
  for (;;) {
    int i = -1;
    for (int k = 0; k < n; ++k)
      if (v[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) return steps;
    const int li = v[i];
    const auto& row = cartan[i];
    for (int j = 0; j < n; ++j) v[j] -= li * row[j];
    ++steps;
  }
}

Weight dominant_conjugate(const Weight& lam, const RootSystem& rs) {
  if (static_cast<int>(lam.size()) != rs.rank())
    fail(Errc::dimension_mismatch, "dominant_conjugate: wrong weight length");
  std::vector<int32_t> buf(lam.begin(), lam.end());
  dominantize_inplace(buf.data(), rs);
  return Weight(buf.begin(), buf.end());
}

BigInt orbit_size(const Weight& dominant, const RootSystem& rs) {
  if (!is_dominant(dominant)) fail(Errc::non_dominant, "orbit_size: weight is not dominant");
  std::vector<int> zeros;
  for (int a = 0; a < rs.rank(); ++a)
    if (dominant[a] == 0) zeros.push_back(a + 1);
  return rs.weyl_order() / rs.parabolic_order(zeros);
}

namespace {

// Orbit elements of a dominant weight d have coordinates of the form
// (beta^vee, d) for roots beta, so the largest pairing bounds them all.
bool packable(const Weight& d, const RootSystem& rs) {
  if (rs.rank() > 8) return false;
  Rational bound = 0;
  for (const auto& r : rs.positive_roots()) {
    Rational bd = 0;
    for (int a = 0; a < rs.rank(); ++a)
      bd += Rational(r.root[a]) * rs.alpha2(a + 1) / 2 * d[a];
    bd = 2 * bd / r.length2;
    if (bd > bound) bound = bd;
  }
  return bound <= 127;
}

inline uint64_t pack8(const int32_t* v, int n) {
  uint64_t key = 0;
  for (int i = 0; i < n; ++i) {
    int32_t x = v[i];
    key = (key << 8) | static_cast<uint8_t>(static_cast<int8_t>(x));
  }
  return key;
}

struct VecHash {
  std::size_t operator()(const Weight& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

template <class Visit>
void bfs_orbit(const Weight& dominant, const RootSystem& rs, std::size_t expected,
               Visit&& visit) {
  const int n = rs.rank();
  const auto& cartan = rs.cartan();
  bool use_pack = packable(dominant, rs);
  std::unordered_set<uint64_t> seen_packed;
  std::unordered_set<Weight, VecHash> seen_generic;
  if (use_pack)
    seen_packed.reserve(expected * 2);
  else
    seen_generic.reserve(expected * 2);

  std::vector<int32_t> frontier(dominant.begin(), dominant.end());
  std::vector<int32_t> next;
  auto remember = [&](const int32_t* v) -> bool {
    if (use_pack) {
      for (int i = 0; i < n; ++i)
        if (v[i] < -128 || v[i] > 127) fail(Errc::internal, "orbit coordinate out of pack range");
      return seen_packed.insert(pack8(v, n)).second;
    }
    return seen_generic.insert(Weight(v, v + n)).second;
  };
  remember(frontier.data());
  visit(frontier.data());

  std::vector<int32_t> buf(n);
  while (!frontier.empty()) {
    next.clear();
    const std::size_t m = frontier.size() / n;
    for (std::size_t e = 0; e < m; ++e) {
      const int32_t* v = frontier.data() + e * n;
      for (int i = 0; i < n; ++i) {
        if (v[i] <= 0) continue;  // walk down in height only
        const auto& row = cartan[i];
        const int li = v[i];
        for (int j = 0; j < n; ++j) buf[j] = v[j] - li * row[j];
        if (remember(buf.data())) {
          visit(buf.data());
          next.insert(next.end(), buf.begin(), buf.end());
        }
      }
    }
    frontier.swap(next);
  }
}

}  // namespace

WeylOrbit enumerate_orbit(const Weight& dominant, const RootSystem& rs, const OrbitOptions& opts) {
  if (!is_dominant(dominant)) fail(Errc::non_dominant, "enumerate_orbit: weight is not dominant");
  BigInt size = orbit_size(dominant, rs);
  BigInt bytes = size * rs.rank() * static_cast<long>(sizeof(int32_t));
  if (bytes > BigInt(static_cast<unsigned long>(opts.mem_cap_bytes)))
    fail(Errc::memory_cap, "orbit of " + format_weight(dominant) + " needs " + bytes.get_str() +
                               " bytes, over the configured cap");
  std::size_t expected = size.get_ui();
  const int n = rs.rank();
  std::vector<int32_t> flat;
  flat.reserve(expected * n);
  bfs_orbit(dominant, rs, expected, [&](const int32_t* v) {
    flat.insert(flat.end(), v, v + n);
  });
  if (flat.size() != expected * n)
    fail(Errc::internal, "orbit enumeration size mismatch for " + format_weight(dominant));

  // deterministic order: lexicographic on coordinates
  std::vector<std::size_t> idx(expected);
  for (std::size_t i = 0; i < expected; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const int32_t* x = flat.data() + a * n;
    const int32_t* y = flat.data() + b * n;
    return std::lexicographical_compare(x, x + n, y, y + n);
  });
  std::vector<int32_t> sorted;
  sorted.reserve(flat.size());
  for (std::size_t i : idx) {
    const int32_t* x = flat.data() + i * n;
    sorted.insert(sorted.end(), x, x + n);
  }
  return WeylOrbit(dominant, n, std::move(sorted));
}

void orbit_stream(const Weight& dominant, const RootSystem& rs,
                  const std::function<void(std::span<const int32_t>)>& fn,
                  const OrbitOptions& opts) {
  if (!is_dominant(dominant)) fail(Errc::non_dominant, "orbit_stream: weight is not dominant");
  BigInt size = orbit_size(dominant, rs);
  BigInt bytes = size * rs.rank() * static_cast<long>(sizeof(int32_t));
  if (bytes > BigInt(static_cast<unsigned long>(opts.mem_cap_bytes)))
    fail(Errc::memory_cap, "orbit of " + format_weight(dominant) + " over the configured cap");
  const int n = rs.rank();
  bfs_orbit(dominant, rs, size.get_ui(), [&](const int32_t* v) {
    fn(std::span<const int32_t>(v, static_cast<std::size_t>(n)));
  });
}

bool orbit_contains(const Weight& dominant, const Weight& mu, const RootSystem& rs) {
  if (!is_dominant(dominant)) fail(Errc::non_dominant, "orbit_contains: weight is not dominant");
  return dominant_conjugate(mu, rs) == dominant;
}

}  // namespace orbitham
