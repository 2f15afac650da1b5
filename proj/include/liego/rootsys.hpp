#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liego/rational.hpp"

namespace liego {

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D' };

LieType lie_type_from(char c);  // throws on anything but A/B/C/D
std::string type_rank_str(LieType t, int rank);

// A root as an integer coefficient vector over the simple roots. All root
// combinatorics stays in this basis; no Euclidean coordinates anywhere.
struct Root {
  std::vector<int> c;

  Root() = default;
  explicit Root(std::vector<int> coeffs) : c(std::move(coeffs)) {}
  Root(std::initializer_list<int> coeffs) : c(coeffs) {}

  bool is_zero() const;
  bool is_positive() const;  // nonzero, all coefficients >= 0
  int height() const;        // coefficient sum
  std::string str() const;   // "[1 2 0]"

  Root operator-() const;
  friend Root operator+(const Root& x, const Root& y);
  friend Root operator-(const Root& x, const Root& y);
  auto operator<=>(const Root&) const = default;
};

struct CartanMatrix {
  LieType type;
  int rank = 0;
  // a[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j)
  std::vector<std::vector<int>> a;
};

// Positive roots of one classical type/rank, with the symmetrized-Cartan
// bilinear form (long roots normalized to squared length 2).
//
// Enumeration order: the simple roots alpha_1..alpha_l first, then the
// remaining positive roots in lexicographic coefficient order. Immutable
// after construction.
class RootSystem {
 public:
  static RootSystem build(LieType type, int rank);

  const CartanMatrix& cartan() const { return cartan_; }
  LieType type() const { return cartan_.type; }
  int rank() const { return cartan_.rank; }
  std::uint32_t id() const { return id_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  Root simple_root(int i) const;  // 0-based
  Root highest_root() const;

  bool contains(const Root& r) const;  // signed membership
  // Index into positive_roots() for r or -r; -1 when r is not a root.
  int pos_index(const Root& r) const;

  // Symmetric bilinear form (x, y); arguments may be any integer
  // combinations of simple roots. Throws on dimension mismatch.
  Rat pairing(const Root& x, const Root& y) const;
  Rat length_sq(const Root& r) const { return pairing(r, r); }

  // <beta, alpha_i^vee> for the i-th simple root (0-based).
  int cartan_int_simple(const Root& beta, int i) const;
  // <beta, alpha^vee> for any root alpha; always an integer.
  int cartan_int(const Root& beta, const Root& alpha) const;

  // Coroot alpha^vee over the simple coroot basis; integer for any root.
  std::vector<int> coroot(const Root& alpha) const;

  // (p, q) with p = max k such that beta - k alpha is a root and
  // q = max k such that beta + k alpha is a root. Requires beta != +-alpha.
  std::pair<int, int> root_string(const Root& alpha, const Root& beta) const;

  // Nonempty for the low-rank coincidences (B1 ~ A1, C1 ~ A1, C2 ~ B2, D3 ~ A3).
  const std::string& coincidence_note() const { return note_; }

  // Closed-form |R+| for the type: l(l+1)/2, l^2, l^2, l(l-1).
  static long expected_positive_count(LieType type, int rank);

 private:
  RootSystem() = default;
  void enumerate();
  void check_closure() const;

  CartanMatrix cartan_;
  QVec half_lengths_;  // d_i = (alpha_i, alpha_i)/2 per simple root
  std::vector<Root> positive_;
  std::set<Root> members_;  // all roots, both signs
  std::map<Root, int> pos_index_;
  std::string note_;
  std::uint32_t id_ = 0;
};

RootSystem build_root_system(LieType type, int rank);

}  // namespace liego
