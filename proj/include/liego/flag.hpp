#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "liego/compact.hpp"
#include "liego/verify.hpp"

namespace liego {

// A Dynkin diagram with a painted node subset Pi_M (1-based indices).
struct PaintedDiagram {
  std::shared_ptr<const CompactAlgebra> alg;
  std::set<int> painted;

  static PaintedDiagram make(std::shared_ptr<const CompactAlgebra> alg, std::set<int> painted);
  std::string compact_str() const;  // "B4:ooox"
  bool is_painted(int node) const { return painted.count(node) > 0; }
};

// Restriction of a root to the painted coefficients, in increasing painted
// node order. Zero exactly for roots of R_K.
struct TRoot {
  std::vector<int> c;
  bool is_zero() const;
  std::string str() const;  // "(1)" / "(1 0)"
  auto operator<=>(const TRoot&) const = default;
};

TRoot t_root(const Root& alpha, const PaintedDiagram& pd);

// Positive-root index sets (R_K^+, R_M^+); both sets are negation-closed as
// root sets, positives are stored.
std::pair<std::vector<int>, std::vector<int>> split_roots(const PaintedDiagram& pd);

struct FlagIdeal {
  std::string name;        // "su(3)", "sp(2)", ...
  LieType type;
  int rank = 0;
  std::vector<int> nodes;      // 1-based diagram nodes, ascending
  std::vector<int> pos_roots;  // positive-root indices of its root part
  std::vector<int> basis_indices;
  int dim = 0;
};

struct FlagModule {
  TRoot troot;
  std::vector<int> pos_roots;
  std::vector<int> basis_indices;  // A and B indices of those roots
  int dim = 0;
};

// Full generalized-flag data for one painted diagram: the R_K/R_M split,
// the t-root-indexed isotropy modules, the ideal decomposition of k with the
// center split off, and the exact change of basis that separates the torus
// into center directions and ideal Cartan parts.
//
// Summand order (used everywhere a per-summand scalar list appears):
// center directions, then ideals (ascending node order), then modules
// (ascending t-root order).
struct FlagDecomposition {
  PaintedDiagram diagram;
  std::vector<int> rk_pos, rm_pos;
  int center_dim = 0;
  QMat center_basis;  // rows: primitive integer vectors over torus coords
  std::vector<FlagIdeal> ideals;
  std::vector<FlagModule> modules;
  int dim_k = 0, dim_m = 0;

  // torus_cols columns: center vectors then ideal coroots; torus_inv is its
  // exact inverse (summand coordinates of a torus vector).
  QMat torus_cols, torus_inv;
  std::vector<int> torus_col_summand;
  std::vector<int> root_summand;  // per positive root

  int summands() const { return center_dim + static_cast<int>(ideals.size() + modules.size()); }
  int ideal_summand(int i) const { return center_dim + i; }
  int module_summand(int i) const { return center_dim + static_cast<int>(ideals.size()) + i; }
  std::string summand_name(int s) const;

  const CompactAlgebra& alg() const { return *diagram.alg; }
  std::vector<int> k_basis_indices() const;  // torus + R_K root vectors
  std::vector<int> m_basis_indices() const;
  LieElement m_component(const LieElement& x) const;
  LieElement center_generator() const;            // requires center_dim == 1
  LieElement unpainted_coroot_sum() const;        // i * sum of coroots over Pi_K
};

FlagDecomposition decompose(const PaintedDiagram& pd);

struct StructureReport {
  bool ok = true;
  long pairs_checked = 0;
  std::string counterexample;
};

// Exhaustive basis-bracket check of [k,k] in k, [k,m_i] in m_i, and
// [m_xi, m_eta] landing in the modules with t-roots +-xi+-eta (plus k when
// xi = eta). Failures are report content, not exceptions.
StructureReport verify_module_structure(const FlagDecomposition& fd, ExecMode mode = default_exec_mode());

}  // namespace liego
