#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "liego/rational.hpp"
#include "liego/rootsys.hpp"

namespace liego {

// Element of the complex simple Lie algebra in the Chevalley basis
// {h_1..h_l (coroots), e_alpha (alpha in R)}, with rational coefficients.
struct ChevalleyElement {
  std::uint32_t algebra_id = 0;
  QVec h;                 // over the simple coroot basis
  std::map<Root, Rat> e;  // signed roots -> coefficient, zero entries erased

  bool is_zero() const { return e.empty() && std::all_of(h.begin(), h.end(), [](const Rat& r) { return r == 0; }); }
  bool operator==(const ChevalleyElement&) const = default;
};

ChevalleyElement operator+(const ChevalleyElement& x, const ChevalleyElement& y);
ChevalleyElement operator-(const ChevalleyElement& x, const ChevalleyElement& y);
ChevalleyElement operator*(const Rat& c, const ChevalleyElement& x);

// The algebra itself: structure constants N_{alpha,beta} over all root pairs
// with alpha+beta in R, exact brackets, and the Killing form by explicit
// trace. Integer constants throughout; [e_alpha, e_{-alpha}] = coroot.
//
// Sign convention: for each non-simple positive root gamma the first pair
// (eps, gamma-eps) in enumeration order gets N = +(p+1); everything else
// follows from the antisymmetry, negation and Jacobi identities. The whole
// table is re-verified against |N| = p+1 after construction.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int dim() const { return rs_.rank() + 2 * rs_.num_positive(); }
  std::uint32_t id() const { return id_; }

  bool has_pair(const Root& a, const Root& b) const;
  int n(const Root& a, const Root& b) const;  // throws unless a+b in R
  const std::map<std::pair<Root, Root>, int>& n_table() const { return n_; }

  ChevalleyElement zero() const;
  ChevalleyElement h_element(QVec coords) const;
  ChevalleyElement coroot_element(const Root& alpha) const;
  ChevalleyElement e_element(const Root& alpha, const Rat& coeff = 1) const;

  // Basis order: h_1..h_l, e_{+alpha} in positive-root order, then e_{-alpha}.
  ChevalleyElement basis_element(int idx) const;
  std::string basis_name(int idx) const;
  Rat coeff(const ChevalleyElement& x, int idx) const;
  QVec coords(const ChevalleyElement& x) const;

  ChevalleyElement bracket(const ChevalleyElement& x, const ChevalleyElement& y) const;

  // kappa(x, y) = trace(ad x . ad y), computed by explicit trace over the
  // basis. Slow path on purpose: it doubles as the oracle for the
  // closed-form Cartan-block formula used in tests.
  Rat killing(const ChevalleyElement& x, const ChevalleyElement& y) const;

  void check_same_algebra(const ChevalleyElement& x) const;

 private:
  void build_constants();

  RootSystem rs_;
  std::map<std::pair<Root, Root>, int> n_;
  std::uint32_t id_ = 0;
};

}  // namespace liego
