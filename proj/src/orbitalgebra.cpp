#include "orbitham/orbitalgebra.hpp"

#include <algorithm>

#include "orbitham/cache.hpp"

namespace orbitham {

Rational grading(const Weight& p, const std::vector<int>& f) {
  if (p.size() != f.size()) fail(Errc::dimension_mismatch, "grading: length mismatch");
  long s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<long>(p[i]) * f[i];
  return Rational(s);
}

Rational grading(const Weight& p, const std::vector<Rational>& f) {
  if (p.size() != f.size()) fail(Errc::dimension_mismatch, "grading: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += f[i] * p[i];
  return s;
}

OrbitAlgebra::OrbitAlgebra(RootSystem rs, AlgebraOptions opts)
    : rs_(std::move(rs)), opts_(opts) {}

Weight OrbitAlgebra::fundamental_weight(int a) const {
  if (a < 1 || a > rs_.rank()) fail(Errc::index_out_of_range, "fundamental index " + std::to_string(a));
  Weight w(rs_.rank(), 0);
  w[a - 1] = 1;
  return w;
}

const WeylOrbit& OrbitAlgebra::fundamental_orbit(int a) {
  if (a < 1 || a > rs_.rank()) fail(Errc::index_out_of_range, "fundamental index " + std::to_string(a));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = orbits_.find(a);
    if (it != orbits_.end()) return *it->second;
  }
  OrbitOptions oo;
  oo.mem_cap_bytes = opts_.mem_cap_bytes;
  auto orb = std::make_unique<WeylOrbit>(enumerate_orbit(fundamental_weight(a), rs_, oo));
  std::lock_guard<std::mutex> lk(mu_);
  auto [it, inserted] = orbits_.emplace(a, std::move(orb));
  return *it->second;
}

// One pass over the fundamental orbit: count landings of j + omega per
// dominant conjugate k, then mu_k = N_k * |Orbit(j)| / |Orbit(k)|.  The count
// N_k is independent of which orbit element of j is used, so the division is
// exact; both facts are asserted.
MExpansion OrbitAlgebra::decompose_uncached(const Weight& j, int a) {
  if (!is_dominant(j)) fail(Errc::non_dominant, "decompose_product: " + format_weight(j));
  const WeylOrbit& orb = fundamental_orbit(a);
  const int n = rs_.rank();
  const std::size_t m = orb.size();
  const int threads = opts_.threads > 0 ? opts_.threads : hardware_threads();

  std::vector<std::map<Weight, long>> partial(std::max(1, threads));
  parallel_chunks(m, threads, [&](std::size_t b, std::size_t e, int t) {
    std::vector<int32_t> buf(n);
    auto& local = partial[t];
    for (std::size_t idx = b; idx < e; ++idx) {
      auto el = orb.element_span(idx);
      for (int i = 0; i < n; ++i) buf[i] = el[i] + j[i];
      dominantize_inplace(buf.data(), rs_);
      Weight k(buf.begin(), buf.end());
      ++local[k];
    }
  });
  std::map<Weight, long> counts;
  for (const auto& loc : partial)
    for (const auto& [k, c] : loc) counts[k] += c;

  BigInt size_j = orbit_size(j, rs_);
  MExpansion out;
  BigInt mass = 0;
  for (const auto& [k, c] : counts) {
    BigInt num = BigInt(c) * size_j;
    BigInt size_k = orbit_size(k, rs_);
    BigInt mu, rem;
    mpz_tdiv_qr(mu.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), size_k.get_mpz_t());
    if (rem != 0)
      fail(Errc::internal, "decompose_product: non-integer multiplicity at " + format_weight(k));
    out.terms.emplace(k, mu);
    mass += mu * size_k;
  }
  if (mass != size_j * BigInt(m))
    fail(Errc::internal, "decompose_product: orbit mass mismatch for " + format_weight(j) +
                             " * w" + std::to_string(a));
  // the top weight j + w_a enters with multiplicity 1
  Weight top = j;
  top[a - 1] += 1;
  auto it = out.terms.find(top);
  if (it == out.terms.end() || it->second != 1)
    fail(Errc::internal, "decompose_product: top multiplicity != 1");
  return out;
}

MExpansion OrbitAlgebra::decompose_product(const Weight& j, int a) {
  if (a < 1 || a > rs_.rank()) fail(Errc::index_out_of_range, "fundamental index " + std::to_string(a));
  if (static_cast<int>(j.size()) != rs_.rank())
    fail(Errc::dimension_mismatch, "decompose_product: wrong weight length");
  auto key = std::make_pair(j, a);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = decomp_memo_.find(key);
    if (it != decomp_memo_.end()) return it->second;
  }
  if (cache_) {
    auto hit = cache_->load_decomposition(rs_, j, a);
    if (hit) {
      std::lock_guard<std::mutex> lk(mu_);
      return decomp_memo_.emplace(key, std::move(*hit)).first->second;
    }
  }
  MExpansion d = decompose_uncached(j, a);
  if (cache_) cache_->store_decomposition(rs_, j, a, d);
  std::lock_guard<std::mutex> lk(mu_);
  return decomp_memo_.emplace(key, std::move(d)).first->second;
}

MExpansion OrbitAlgebra::tau_power_to_M(const Weight& p) {
  if (static_cast<int>(p.size()) != rs_.rank())
    fail(Errc::dimension_mismatch, "tau_power_to_M: wrong exponent length");
  for (int x : p)
    if (x < 0) fail(Errc::bad_argument, "tau_power_to_M: negative exponent");
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = tau2m_memo_.find(p);
    if (it != tau2m_memo_.end()) return it->second;
  }
  MExpansion acc;
  acc.terms.emplace(Weight(rs_.rank(), 0), BigInt(1));
  for (int a = 1; a <= rs_.rank(); ++a) {
    for (int rep = 0; rep < p[a - 1]; ++rep) {
      MExpansion next;
      for (const auto& [nw, coef] : acc.terms) {
        MExpansion d = decompose_product(nw, a);
        for (const auto& [k, mu] : d.terms) next.add(k, coef * mu);
      }
      acc = std::move(next);
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  return tau2m_memo_.emplace(p, std::move(acc)).first->second;
}

TauPoly OrbitAlgebra::m_to_tau(const Weight& n) {
  if (!is_dominant(n)) fail(Errc::non_dominant, "m_to_tau: " + format_weight(n));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = m2tau_memo_.find(n);
    if (it != m2tau_memo_.end()) return it->second;
  }
  if (cache_) {
    auto hit = cache_->load_m2tau(rs_, n);
    if (hit) {
      std::lock_guard<std::mutex> lk(mu_);
      return m2tau_memo_.emplace(n, std::move(*hit)).first->second;
    }
  }
  TauPoly result;
  if (is_zero(n)) {
    result.add_term(n, Rational(1));
  } else {
    int ones = 0;
    for (int x : n) ones += x;
    if (ones == 1) {
      result.add_term(n, Rational(1));  // M_a = tau_a
    } else {
      // peel off the fundamental weight with the smallest orbit
      int a = 0;
      BigInt best;
      for (int i = 1; i <= rs_.rank(); ++i) {
        if (n[i - 1] == 0) continue;
        BigInt sz = orbit_size(fundamental_weight(i), rs_);
        if (a == 0 || sz < best) {
          a = i;
          best = sz;
        }
      }
      Weight np = n;
      np[a - 1] -= 1;
      TauPoly base = m_to_tau(np).shift_up(a);
      MExpansion d = decompose_product(np, a);
      for (const auto& [k, mu] : d.terms) {
        if (k == n) continue;
        base = base - m_to_tau(k) * Rational(mu);
      }
      result = std::move(base);
    }
  }
  if (!integer_coefficients(result))
    fail(Errc::internal, "m_to_tau: non-integer coefficients at " + format_weight(n));
  auto top = result.terms.find(n);
  if (top == result.terms.end() || top->second != 1)
    fail(Errc::internal, "m_to_tau: top monomial must be tau^n");
  if (cache_) cache_->store_m2tau(rs_, n, result);
  std::lock_guard<std::mutex> lk(mu_);
  return m2tau_memo_.emplace(n, std::move(result)).first->second;
}

std::size_t OrbitAlgebra::decomposition_count() const {
  std::lock_guard<std::mutex> lk(mu_);
  return decomp_memo_.size();
}

std::optional<MExpansionQ> OrbitAlgebra::cached_accumulation(const Weight& n) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = accum_memo_.find(n);
  if (it == accum_memo_.end()) return std::nullopt;
  return it->second;
}

void OrbitAlgebra::store_accumulation(const Weight& n, const MExpansionQ& acc) {
  std::lock_guard<std::mutex> lk(mu_);
  accum_memo_.emplace(n, acc);
}

// ---- TauPoly helpers ----

Rational eval_exact(const TauPoly& p, const std::vector<Rational>& tau) {
  Rational acc = 0;
  for (const auto& [e, c] : p.terms) {
    Rational t = c;
    for (std::size_t a = 0; a < e.size(); ++a)
      for (int k = 0; k < e[a]; ++k) t *= tau[a];
    acc += t;
  }
  return acc;
}

double eval_double(const TauPoly& p, const std::vector<double>& tau) {
  double acc = 0;
  for (const auto& [e, c] : p.terms) {
    double t = c.get_d();
    for (std::size_t a = 0; a < e.size(); ++a)
      for (int k = 0; k < e[a]; ++k) t *= tau[a];
    acc += t;
  }
  return acc;
}

NuTauPoly to_nu_poly(const TauPoly& p) {
  NuTauPoly out;
  for (const auto& [e, c] : p.terms) out.terms.emplace(e, NuCoefficient(c));
  return out;
}

TauPoly eval_nu(const NuTauPoly& p, const Rational& nu) {
  TauPoly out;
  for (const auto& [e, c] : p.terms) {
    auto v = c.eval(nu);
    if (!v) fail(Errc::resonance, "coefficient pole at nu = " + rational_to_string(nu));
    out.add_term(e, *v);
  }
  return out;
}

bool integer_coefficients(const TauPoly& p) {
  for (const auto& [e, c] : p.terms)
    if (c.get_den() != 1) return false;
  return true;
}

namespace {

template <class C, class Str>
std::string poly_str_impl(const std::map<Weight, C>& terms, Str&& coeff_str) {
  if (terms.empty()) return "0";
  // order monomials by total degree then lex, constants first
  std::vector<const std::pair<const Weight, C>*> items;
  for (const auto& t : terms) items.push_back(&t);
  std::sort(items.begin(), items.end(), [](auto* x, auto* y) {
    int dx = 0, dy = 0;
    for (int v : x->first) dx += v;
    for (int v : y->first) dy += v;
    if (dx != dy) return dx < dy;
    return x->first < y->first;
  });
  std::string s;
  for (auto* t : items) {
    std::string mono;
    for (std::size_t a = 0; a < t->first.size(); ++a) {
      int e = t->first[a];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(a + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string c = coeff_str(t->second, !mono.empty());
    if (!s.empty()) {
      if (!c.empty() && c[0] == '-') {
        s += " - ";
        c = c.substr(1);
      } else {
        s += " + ";
      }
    }
    s += c;
    if (!mono.empty()) {
      if (c != "" && c != "-") s += "*";
      s += mono;
    }
  }
  return s;
}

}  // namespace

std::string tau_poly_str(const TauPoly& p) {
  return poly_str_impl(p.terms, [](const Rational& c, bool has_mono) {
    if (has_mono && c == 1) return std::string("");
    if (has_mono && c == -1) return std::string("-");
    return rational_to_string(c);
  });
}

std::string tau_poly_str(const NuTauPoly& p) {
  return poly_str_impl(p.terms, [](const NuCoefficient& c, bool has_mono) {
    auto r = c.as_rational();
    if (r) {
      if (has_mono && *r == 1) return std::string("");
      if (has_mono && *r == -1) return std::string("-");
      return rational_to_string(*r);
    }
    return "(" + c.str() + ")";
  });
}

}  // namespace orbitham
