#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liego/chevalley.hpp"
#include "liego/rational.hpp"
#include "liego/rootsys.hpp"

namespace liego {

// Element of the compact real form in the basis
//   {i h_1..i h_l, A_alpha = e_alpha - e_{-alpha}, B_alpha = i(e_alpha + e_{-alpha})},
// indexed by positive roots only. The reduction A_{-g} = -A_g, B_{-g} = B_g is
// applied eagerly, so equal elements compare equal.
struct LieElement {
  std::uint32_t algebra_id = 0;
  QVec torus;             // over {i h_j}
  std::map<Root, Rat> a;  // positive root -> A-coefficient
  std::map<Root, Rat> b;  // positive root -> B-coefficient

  bool is_zero() const;
  bool operator==(const LieElement&) const = default;
};

LieElement operator+(const LieElement& x, const LieElement& y);
LieElement operator-(const LieElement& x, const LieElement& y);
LieElement operator*(const Rat& c, const LieElement& x);

// The compact real form: bracket table of the {iH, A, B} basis, the
// positive-definite form B = -kappa (block data), and exact B-orthogonal
// projection. The complex conjugation is never materialized; the basis
// construction bakes in tau-fixedness.
class CompactAlgebra {
 public:
  explicit CompactAlgebra(std::shared_ptr<const ChevalleyAlgebra> chev);

  const ChevalleyAlgebra& chev() const { return *chev_; }
  const RootSystem& roots() const { return chev_->roots(); }
  int rank() const { return roots().rank(); }
  int num_positive() const { return roots().num_positive(); }
  int dim() const { return rank() + 2 * num_positive(); }
  std::uint32_t id() const { return id_; }

  // Basis order: i h_1..i h_l, then all A_alpha, then all B_alpha
  // (positive-root enumeration order).
  int torus_index(int j) const { return j; }
  int a_index(int pos_idx) const { return rank() + pos_idx; }
  int b_index(int pos_idx) const { return rank() + num_positive() + pos_idx; }
  LieElement basis_element(int idx) const;
  std::string basis_name(int idx) const;

  LieElement zero() const;
  LieElement torus_element(QVec coords) const;
  LieElement coroot_torus_element(const Root& alpha) const;  // i h_alpha^vee
  LieElement a_element(const Root& alpha, const Rat& c = 1) const;
  LieElement b_element(const Root& alpha, const Rat& c = 1) const;

  QVec coords(const LieElement& x) const;
  LieElement from_coords(const QVec& v) const;
  LieElement random_element(Rng& rng) const;

  // Bracket via the real structure table.
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  // Reference path: complexify, bracket in the Chevalley basis, realify.
  // Used to cross-check `bracket`; the two must agree exactly.
  LieElement bracket_via_complexification(const LieElement& x, const LieElement& y) const;

  // B = -kappa; positive definite, block-diagonal in this basis.
  Rat form_b(const LieElement& x, const LieElement& y) const;
  const QMat& torus_gram() const { return gram_; }        // kappa(h_i, h_j)
  const Rat& root_weight(int pos_idx) const;              // B(A_a,A_a) = B(B_a,B_a)

  // Exact B-orthogonal projection onto the span of the given basis indices.
  LieElement project(const LieElement& x, const std::vector<int>& indices) const;

  // x = re + i*im over the Chevalley basis.
  std::pair<ChevalleyElement, ChevalleyElement> complexify(const LieElement& x) const;
  // Inverse of complexify; throws when (re, im) is not conjugation-stable.
  LieElement realify(const ChevalleyElement& re, const ChevalleyElement& im) const;

  void check_same_algebra(const LieElement& x) const;

 private:
  std::shared_ptr<const ChevalleyAlgebra> chev_;
  QMat gram_;         // kappa(h_i, h_j), positive definite
  QVec root_weight_;  // 2 kappa(e_a, e_{-a}) per positive root
  std::uint32_t id_ = 0;
};

}  // namespace liego
