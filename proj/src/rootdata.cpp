#include "orbitham/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include <mutex>

namespace orbitham {

const char* Error::code_name() const {
  switch (code_) {
    case Errc::unknown_system: return "unknown_system";
    case Errc::rank_out_of_range: return "rank_out_of_range";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::non_dominant: return "non_dominant";
    case Errc::memory_cap: return "memory_cap";
    case Errc::resonance: return "resonance";
    case Errc::cache_mismatch: return "cache_mismatch";
    case Errc::bad_argument: return "bad_argument";
    case Errc::tolerance_breach: return "tolerance_breach";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

std::string format_weight(const Weight& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

Weight parse_weight(const std::string& in, int rank) {
  std::string s = in;
  if (!s.empty() && (s[0] == 'w' || s[0] == 'W')) {
    int a = 0;
    try {
      a = std::stoi(s.substr(1));
    } catch (...) {
      fail(Errc::bad_argument, "cannot parse weight '" + in + "'");
    }
    if (a < 1 || a > rank) fail(Errc::index_out_of_range, "fundamental index out of range: " + in);
    Weight w(rank, 0);
    w[a - 1] = 1;
    return w;
  }
  Weight w;
  std::string num;
  for (char c : s) {
    if (c == '[' || c == ']' || c == ' ') continue;
    if (c == ',') {
      if (num.empty()) fail(Errc::bad_argument, "cannot parse weight '" + in + "'");
      w.push_back(std::stoi(num));
      num.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      num += c;
    } else {
      fail(Errc::bad_argument, "cannot parse weight '" + in + "'");
    }
  }
  if (!num.empty()) w.push_back(std::stoi(num));
  if (static_cast<int>(w.size()) != rank)
    fail(Errc::dimension_mismatch, "weight '" + in + "' has " + std::to_string(w.size()) +
                                       " coordinates, expected " + std::to_string(rank));
  return w;
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) fail(Errc::bad_argument, "cannot parse rational '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

int hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

void parallel_chunks(std::size_t n, int threads,
                     const std::function<void(std::size_t, std::size_t, int)>& fn) {
  if (threads <= 0) threads = hardware_threads();
  std::size_t t = std::min<std::size_t>(threads, n == 0 ? 1 : n);
  if (t <= 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(t);
  std::size_t chunk = (n + t - 1) / t;
  for (std::size_t i = 0; i < t; ++i) {
    std::size_t b = i * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    workers.emplace_back([&fn, b, e, i] { fn(b, e, static_cast<int>(i)); });
  }
  for (auto& w : workers) w.join();
}

namespace {

struct Family {
  char letter;
  int rank;
};

Family parse_system_name(const std::string& name) {
  if (name.size() < 2) fail(Errc::unknown_system, "unknown root system '" + name + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  std::string digits = name.substr(1);
  if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(Errc::unknown_system, "unknown root system '" + name + "'");
  int rank = 0;
  try {
    rank = std::stoi(digits);
  } catch (...) {
    fail(Errc::unknown_system, "unknown root system '" + name + "'");
  }
  return {letter, rank};
}

// Bourbaki Cartan matrix and simple-root squared lengths (long roots = 2).
void bourbaki_data(char letter, int rank, std::vector<std::vector<int>>& C,
                   std::vector<Rational>& alpha2) {
  auto chain = [&](int n) {
    C.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) C[i][i + 1] = C[i + 1][i] = -1;
  };
  switch (letter) {
    case 'A':
      if (rank < 1 || rank > 16) fail(Errc::rank_out_of_range, "A_n supports 1 <= n <= 16");
      chain(rank);
      alpha2.assign(rank, Rational(2));
      break;
    case 'B':
      if (rank < 2 || rank > 16) fail(Errc::rank_out_of_range, "B_n supports 2 <= n <= 16");
      chain(rank);
      // alpha_n short: C[n-1][n] = -2 in the (alpha_i, alpha_j^vee) convention
      C[rank - 2][rank - 1] = -2;
      C[rank - 1][rank - 2] = -1;
      alpha2.assign(rank, Rational(2));
      alpha2[rank - 1] = Rational(1);
      break;
    case 'C':
      if (rank < 2 || rank > 16) fail(Errc::rank_out_of_range, "C_n supports 2 <= n <= 16");
      chain(rank);
      C[rank - 2][rank - 1] = -1;
      C[rank - 1][rank - 2] = -2;
      alpha2.assign(rank, Rational(1));
      alpha2[rank - 1] = Rational(2);
      break;
    case 'D':
      if (rank < 3 || rank > 16) fail(Errc::rank_out_of_range, "D_n supports 3 <= n <= 16");
      chain(rank);
      C[rank - 2][rank - 1] = C[rank - 1][rank - 2] = 0;
      C[rank - 3][rank - 1] = C[rank - 1][rank - 3] = -1;
      alpha2.assign(rank, Rational(2));
      break;
    case 'E': {
      if (rank < 6 || rank > 8) fail(Errc::rank_out_of_range, "E_n supports n in {6,7,8}");
      C.assign(rank, std::vector<int>(rank, 0));
      for (int i = 0; i < rank; ++i) C[i][i] = 2;
      auto link = [&](int a, int b) { C[a - 1][b - 1] = C[b - 1][a - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      link(2, 4);
      if (rank >= 7) link(6, 7);
      if (rank == 8) link(7, 8);
      alpha2.assign(rank, Rational(2));
      break;
    }
    case 'F':
      if (rank != 4) fail(Errc::rank_out_of_range, "F_n supports n = 4 only");
      chain(4);
      C[1][2] = -2;
      C[2][1] = -1;
      alpha2 = {Rational(2), Rational(2), Rational(1), Rational(1)};
      break;
    case 'G':
      if (rank != 2) fail(Errc::rank_out_of_range, "G_n supports n = 2 only");
      C = {{2, -1}, {-3, 2}};
      alpha2 = {Rational(2, 3), Rational(2)};
      break;
    default:
      fail(Errc::unknown_system, std::string("unknown root system family '") + letter + "'");
  }
}

std::vector<std::vector<Rational>> invert_transpose(const std::vector<std::vector<int>>& C) {
  int n = static_cast<int>(C.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(C[j][i]);
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) fail(Errc::internal, "singular Cartan matrix");
    std::swap(a[col], a[piv]);
    Rational d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = col; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt pow2(int n) {
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n);
  return p;
}

// Order of the finite Weyl group of one connected Dynkin diagram, given its
// adjacency with bond multiplicities m_ij = C_ij * C_ji.
BigInt component_order(const std::vector<int>& nodes,
                       const std::function<int(int, int)>& bond) {
  int n = static_cast<int>(nodes.size());
  if (n == 1) return 2;
  int max_bond = 1;
  std::vector<int> degree(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = bond(nodes[i], nodes[j]);
      if (m > 0) {
        edges.emplace_back(i, j);
        ++degree[i];
        ++degree[j];
        max_bond = std::max(max_bond, m);
      }
    }
  if (max_bond == 3) {
    if (n == 2) return 12;  // G2
    fail(Errc::internal, "unsupported diagram (triple bond in rank > 2)");
  }
  int branch = -1;
  for (int i = 0; i < n; ++i)
    if (degree[i] >= 3) branch = i;
  if (max_bond == 2) {
    if (branch >= 0) fail(Errc::internal, "unsupported diagram (branched double bond)");
    // path with one double bond: B/C if at the end, F4 if in the middle
    int di = -1, dj = -1;
    for (auto [i, j] : edges)
      if (bond(nodes[i], nodes[j]) == 2) di = i, dj = j;
    bool end_bond = degree[di] == 1 || degree[dj] == 1;
    if (end_bond) return pow2(n) * factorial(n);  // B_n / C_n
    if (n == 4) return BigInt(1152);              // F4
    fail(Errc::internal, "unsupported diagram (interior double bond)");
  }
  // simply laced
  if (branch < 0) return factorial(n + 1);  // A_n
  if (degree[branch] > 3) fail(Errc::internal, "unsupported diagram (degree > 3)");
  // leg lengths from the branch node
  std::vector<int> legs;
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (int x : adj[cur])
        if (x != prev) next = x;
      if (next < 0) break;
      if (static_cast<int>(adj[cur].size()) > 2)
        fail(Errc::internal, "unsupported diagram (two branch nodes)");
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs.size() != 3) fail(Errc::internal, "unsupported diagram");
  if (legs[0] == 1 && legs[1] == 1) return pow2(n - 1) * factorial(n);  // D_n
  if (legs[0] == 1 && legs[1] == 2) {
    if (legs[2] == 2) return BigInt(51840);      // E6
    if (legs[2] == 3) return BigInt(2903040);    // E7
    if (legs[2] == 4) return BigInt(696729600);  // E8
  }
  fail(Errc::internal, "unsupported diagram");
}

}  // namespace

struct RootSystemBuilder {
  static RootSystem run(const std::string& name) {
    Family fam = parse_system_name(name);
    std::vector<std::vector<int>> C;
    std::vector<Rational> alpha2;
    bourbaki_data(fam.letter, fam.rank, C, alpha2);
    int n = fam.rank;

    // Gram matrix of fundamental weights in Bourbaki order.
    auto Cti = invert_transpose(C);  // root coords of w_a = column a of C^{-T}
    std::vector<std::vector<Rational>> rootip(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rootip[i][j] = Rational(C[i][j]) * alpha2[j] / 2;
    std::vector<std::vector<Rational>> G(n, std::vector<Rational>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Rational s = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) s += Cti[i][a] * rootip[i][j] * Cti[j][b];
        G[a][b] = s;
      }

    // Length-ordered permutation: increasing (w_a, w_a), ties by Bourbaki index.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
      if (G[x][x] != G[y][y]) return G[x][x] < G[y][y];
      return x < y;
    });

    RootSystem rs;
    rs.name_ = std::string(1, fam.letter) + std::to_string(fam.rank);
    rs.rank_ = n;
    rs.bourbaki_.resize(n);
    rs.cartan_.assign(n, std::vector<int>(n));
    rs.alpha2_.resize(n);
    rs.gram_.assign(n, std::vector<Rational>(n));
    for (int a = 0; a < n; ++a) {
      rs.bourbaki_[a] = perm[a] + 1;
      rs.alpha2_[a] = alpha2[perm[a]];
      for (int b = 0; b < n; ++b) {
        rs.cartan_[a][b] = C[perm[a]][perm[b]];
        rs.gram_[a][b] = G[perm[a]][perm[b]];
      }
    }
    rs.simple_roots_omega_.resize(n);
    for (int i = 0; i < n; ++i)
      rs.simple_roots_omega_[i] = Weight(rs.cartan_[i].begin(), rs.cartan_[i].end());

    build_positive_roots(rs);
    build_weyl_data(rs);
    return rs;
  }

  static void build_positive_roots(RootSystem& rs) {
    int n = rs.rank_;
    std::map<Weight, PositiveRoot> seen;
    std::vector<PositiveRoot> frontier;
    for (int i = 0; i < n; ++i) {
      PositiveRoot r;
      r.omega = rs.simple_roots_omega_[i];
      r.root.assign(n, 0);
      r.root[i] = 1;
      r.height = 1;
      r.length2 = rs.alpha2_[i];
      seen[r.omega] = r;
      frontier.push_back(r);
    }
    while (!frontier.empty()) {
      std::vector<PositiveRoot> next;
      for (const auto& r : frontier) {
        for (int i = 0; i < n; ++i) {
          int li = r.omega[i];
          PositiveRoot s;
          s.omega.resize(n);
          for (int j = 0; j < n; ++j) s.omega[j] = r.omega[j] - li * rs.cartan_[i][j];
          s.root = r.root;
          s.root[i] -= li;
          bool positive = false, negative = false;
          for (int x : s.root) {
            if (x > 0) positive = true;
            if (x < 0) negative = true;
          }
          if (!positive || negative) continue;
          s.height = std::accumulate(s.root.begin(), s.root.end(), 0);
          s.length2 = r.length2;
          if (seen.emplace(s.omega, s).second) next.push_back(s);
        }
      }
      frontier = std::move(next);
    }
    rs.positive_roots_.reserve(seen.size());
    for (auto& [om, r] : seen) rs.positive_roots_.push_back(r);
    std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
              [](const PositiveRoot& a, const PositiveRoot& b) {
                if (a.height != b.height) return a.height < b.height;
                return a.root < b.root;
              });
    const PositiveRoot& top = rs.positive_roots_.back();
    rs.highest_root_omega_ = top.omega;
    rs.highest_root_coords_ = top.root;
  }

  static void build_weyl_data(RootSystem& rs) {
    int n = rs.rank_;
    // rho in root coordinates: solve C^T r = (1,...,1)
    auto Cti = invert_transpose(rs.cartan_);
    rs.weyl_root_coords_.assign(n, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rs.weyl_root_coords_[i] += Cti[i][j];

    rs.rho_dot_w_.assign(n, Rational(0));
    rs.coweyl_k_.assign(n, Rational(0));
    for (const auto& r : rs.positive_roots_) {
      for (int a = 0; a < n; ++a) {
        // (alpha, w_a) = r_a(alpha) * (alpha_a, alpha_a) / 2
        Rational aw = Rational(r.root[a]) * rs.alpha2_[a] / 2;
        rs.rho_dot_w_[a] += aw / 2;
        rs.coweyl_k_[a] += aw / r.length2;
      }
    }
    rs.rho_dot_w_.shrink_to_fit();

    rs.integer_heights_ = true;
    rs.coweyl_k_int_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      if (rs.coweyl_k_[a].get_den() != 1) {
        rs.integer_heights_ = false;
        break;
      }
      rs.coweyl_k_int_[a] = rs.coweyl_k_[a].get_num().get_si();
    }

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    rs.weyl_order_ = rs.parabolic_order(all);
  }
};

RootSystem RootSystem::build(const std::string& name) { return RootSystemBuilder::run(name); }

const Weight& RootSystem::simple_root_omega(int i) const {
  if (i < 1 || i > rank_) fail(Errc::index_out_of_range, "simple root index " + std::to_string(i));
  return simple_roots_omega_[i - 1];
}

const Rational& RootSystem::rho_dot_weight(int a) const {
  if (a < 1 || a > rank_) fail(Errc::index_out_of_range, "weight index " + std::to_string(a));
  return rho_dot_w_[a - 1];
}

const Rational& RootSystem::coweyl_dot_weight(int a) const {
  if (a < 1 || a > rank_) fail(Errc::index_out_of_range, "weight index " + std::to_string(a));
  return coweyl_k_[a - 1];
}

const Rational& RootSystem::alpha2(int i) const {
  if (i < 1 || i > rank_) fail(Errc::index_out_of_range, "simple root index " + std::to_string(i));
  return alpha2_[i - 1];
}

BigInt RootSystem::parabolic_order(const std::vector<int>& nodes) const {
  for (int i : nodes)
    if (i < 1 || i > rank_) fail(Errc::index_out_of_range, "node index " + std::to_string(i));
  if (nodes.empty()) return 1;
  std::vector<int> idx;
  for (int i : nodes) idx.push_back(i - 1);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  auto bond = [this](int i, int j) { return cartan_[i][j] * cartan_[j][i]; };
  std::set<int> pending(idx.begin(), idx.end());
  BigInt order = 1;
  while (!pending.empty()) {
    std::vector<int> comp{*pending.begin()};
    pending.erase(pending.begin());
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (auto it = pending.begin(); it != pending.end();) {
        if (bond(comp[h], *it) > 0) {
          comp.push_back(*it);
          it = pending.erase(it);
        } else {
          ++it;
        }
      }
    }
    order *= component_order(comp, bond);
  }
  return order;
}

Rational RootSystem::inner_product(const Weight& u, const Weight& v) const {
  if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
    fail(Errc::dimension_mismatch, "inner_product: expected vectors of length " +
                                       std::to_string(rank_));
  Rational s = 0;
  for (int a = 0; a < rank_; ++a) {
    if (u[a] == 0) continue;
    Rational row = 0;
    for (int b = 0; b < rank_; ++b)
      if (v[b] != 0) row += gram_[a][b] * v[b];
    s += Rational(u[a]) * row;
  }
  return s;
}

Rational RootSystem::weyl_height(const Weight& v) const {
  if (static_cast<int>(v.size()) != rank_)
    fail(Errc::dimension_mismatch, "weyl_height: expected vector of length " +
                                       std::to_string(rank_));
  Rational s = 0;
  for (int a = 0; a < rank_; ++a) s += coweyl_k_[a] * v[a];
  return s;
}

long RootSystem::height_int(const Weight& v) const {
  long s = 0;
  for (int a = 0; a < rank_; ++a) s += coweyl_k_int_[a] * v[a];
  return s;
}

}  // namespace orbitham
