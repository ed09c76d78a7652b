#ifndef ORBITHAM_ROOTDATA_HPP
#define ORBITHAM_ROOTDATA_HPP

#include <string>
#include <utility>
#include <vector>

#include "orbitham/common.hpp"

namespace orbitham {

struct PositiveRoot {
  Weight omega;            // omega coordinates (integers, rows of Cartan combos)
  std::vector<int> root;   // coordinates in the basis of simple roots
  int height;              // sum of root coordinates
  Rational length2;        // (alpha, alpha)
};

// Exact data for one crystallographic root system.  Simple roots are indexed
// 1..rank in the length-ordered convention: fundamental weights sorted by
// increasing squared length, ties broken by Bourbaki number.  Simply-laced
// systems are normalized so every root has squared length 2; otherwise the
// long roots are scaled to squared length 2.
class RootSystem {
public:
  static RootSystem build(const std::string& name);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }

  // cartan()[i][j] = (alpha_i, alpha_j^vee); row i is alpha_i in omega coords.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const Weight& simple_root_omega(int i) const;  // 1-based

  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  const Weight& highest_root_omega() const { return highest_root_omega_; }
  const std::vector<int>& highest_root_coords() const { return highest_root_coords_; }

  Weight weyl_vector_omega() const { return Weight(rank_, 1); }
  const std::vector<Rational>& weyl_vector_root_coords() const { return weyl_root_coords_; }

  // (rho, w_a) and the co-Weyl pairing k_a = (rho^vee, w_a); 1-based index.
  const Rational& rho_dot_weight(int a) const;
  const Rational& coweyl_dot_weight(int a) const;

  // Internal index a (1-based) -> Bourbaki number of the same node.
  const std::vector<int>& bourbaki_numbers() const { return bourbaki_; }

  const BigInt& weyl_order() const { return weyl_order_; }
  // Order of the parabolic subgroup generated by the given simple reflections
  // (1-based node indices).
  BigInt parabolic_order(const std::vector<int>& nodes) const;

  Rational inner_product(const Weight& u, const Weight& v) const;
  Rational weyl_height(const Weight& v) const;  // (rho^vee, v)

  // Fast path: when every k_a is an integer (e.g. all simply-laced systems).
  bool integer_heights() const { return integer_heights_; }
  long height_int(const Weight& v) const;  // requires integer_heights()

  const Rational& alpha2(int i) const;  // (alpha_i, alpha_i), 1-based

private:
  std::string name_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Weight> simple_roots_omega_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<PositiveRoot> positive_roots_;
  Weight highest_root_omega_;
  std::vector<int> highest_root_coords_;
  std::vector<Rational> weyl_root_coords_;
  std::vector<Rational> rho_dot_w_;
  std::vector<Rational> coweyl_k_;
  std::vector<long> coweyl_k_int_;
  bool integer_heights_ = false;
  std::vector<int> bourbaki_;
  std::vector<Rational> alpha2_;
  BigInt weyl_order_;

  friend struct RootSystemBuilder;
};

}  // namespace orbitham

#endif
