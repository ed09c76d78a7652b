#ifndef ORBITHAM_COMMON_HPP
#define ORBITHAM_COMMON_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace orbitham {

using BigInt = mpz_class;
using Rational = mpq_class;

// A weight in fundamental-weight (omega) coordinates.
using Weight = std::vector<int>;

enum class Errc {
  unknown_system,
  rank_out_of_range,
  dimension_mismatch,
  index_out_of_range,
  non_dominant,
  memory_cap,
  resonance,
  cache_mismatch,
  bad_argument,
  tolerance_breach,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }
  const char* code_name() const;

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

inline bool is_dominant(const Weight& v) {
  for (int x : v)
    if (x < 0) return false;
  return true;
}

inline bool is_zero(const Weight& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

std::string format_weight(const Weight& v);
Weight parse_weight(const std::string& s, int rank);  // "w3", "1,0,0", "[1,0,0]"

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

// Runs fn(begin, end, thread_index) over [0,n) split into contiguous chunks.
// With threads <= 1 runs inline; results must not depend on the split.
void parallel_chunks(std::size_t n, int threads,
                     const std::function<void(std::size_t, std::size_t, int)>& fn);

int hardware_threads();

}  // namespace orbitham

#endif
