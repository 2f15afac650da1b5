#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liego/flag.hpp"
#include "liego/linsolve.hpp"

namespace liego {

// Diagonal metric endomorphism: one positive scalar per summand of the flag
// decomposition (center directions, simple ideals of k, isotropy modules).
struct MetricEndomorphism {
  QVec center_scalars;
  QVec ideal_scalars;
  QVec module_scalars;

  static MetricEndomorphism make(const FlagDecomposition& fd, const QVec& scalars);  // validates count/positivity
  static MetricEndomorphism identity(const FlagDecomposition& fd);
  QVec flat() const;
  bool bi_invariant() const;  // all scalars equal
};

LieElement apply_metric(const MetricEndomorphism& a, const LieElement& x, const FlagDecomposition& fd);
// Metric restricted to m: module scalars only; x must lie in m.
LieElement apply_metric_m(const QVec& module_scalars, const LieElement& x, const FlagDecomposition& fd);

enum class GoStatus { GoCertifiedNr, GoConsistent, NotGo };
std::string go_status_str(GoStatus s);

struct GoWitness {
  LieElement probe;
  long probe_index = 0;
  std::string description;
  QVec farkas;  // inconsistency certificate for the probe's linear system
};

struct GoVerdict {
  GoStatus status = GoStatus::GoConsistent;
  std::optional<GoWitness> witness;
  long probes_checked = 0;
  std::optional<std::string> certificate;
};

// Probe sets: every basis element, every cross-summand pair sum, canonical
// center+cartan+module tuples, then `n_random` seeded random combinations
// (coefficients in [-5,5], denominators <= 4).
std::vector<LieElement> default_group_probes(const FlagDecomposition& fd, long n_random, std::uint64_t seed);
std::vector<LieElement> default_space_probes(const FlagDecomposition& fd, long n_random, std::uint64_t seed);

// Per-probe exact solvability of [A(X), X + W] = 0 in W from k.
LinearSolveResult solve_group_probe(const MetricEndomorphism& a, const LieElement& x, const FlagDecomposition& fd);
// Per-probe exact solvability of [a + X, A(X)] in k, unknown a from k.
LinearSolveResult solve_space_probe(const QVec& module_scalars, const LieElement& x, const FlagDecomposition& fd);

// Left-invariant metric on the group: refutation is conclusive (one bad
// probe, exact certificate); confirmation is certified only through the
// naturally-reductive form or the bi-invariant case, otherwise the verdict
// stays GoConsistent with the probe count reported.
GoVerdict go_group_check(const MetricEndomorphism& a, const FlagDecomposition& fd,
                         const std::vector<LieElement>& probes, ExecMode mode = default_exec_mode());

// Metric on G/K only (modules); certification means homothety to the
// standard metric.
GoVerdict go_space_check(const QVec& module_scalars, const FlagDecomposition& fd,
                         const std::vector<LieElement>& probes, ExecMode mode = default_exec_mode());

// Naturally-reductive form test: all module scalars equal (center and ideal
// scalars free).
bool nr_form_check(const MetricEndomorphism& a, const FlagDecomposition& fd);

struct NrReport {
  bool ok = true;
  long triples_checked = 0;
  std::string counterexample;
};

// Definitional check ([Z,X]_m, Y) + (X, [Z,Y]_m) = 0 over all basis triples
// of m, with ( , ) = B(A., .) for the m-restricted metric.
NrReport nr_definitional_check(const MetricEndomorphism& a, const FlagDecomposition& fd,
                               ExecMode mode = default_exec_mode());

// Joint system of the three bracket conditions in K from k with [H,K] = 0;
// either a solution or an exact inconsistency certificate.
struct ThreeCondResult {
  bool solvable = false;
  LieElement k_solution;
  QVec farkas;
};

ThreeCondResult three_condition_check(const Rat& u, const Rat& x, const Rat& y, const LieElement& t,
                                      const LieElement& h, const LieElement& x1, const LieElement& x2,
                                      const FlagDecomposition& fd);

// Mechanical replay of the two-summand obstruction argument for
// SO(2l+1) (painted alpha_l) and Sp(l) (painted alpha_1).
struct WitnessRefutation {
  bool vacuous = false;  // x == y: nothing to refute
  LieType type{};
  int rank = 0;
  Rat u, x, y;
  LieElement t, h, x1, x2;
  Root x1_root, x2_root;
  Root obstruction_root;
  char obstruction_basis = 'B';  // basis letter carrying the obstruction
  Rat obstruction_coeff;         // (y - x) * N
  int n_value = 0;               // the structure constant in the coefficient
  Root blocked_root;             // K-component root excluded by [H,K] = 0
  Rat pairing_coroot;            // blocked_root(H), coroot pairing
  Rat pairing_bilinear;          // sum of (blocked_root, alpha_i) over Pi_K
  bool unsolvable = false;
  QVec farkas;
};

WitnessRefutation witness_nongo(LieType type, int rank, const Rat& u, const Rat& x, const Rat& y);

// Builds the flag decomposition the witness argument runs on
// (B_l: painted {l}; C_l: painted {1}).
FlagDecomposition witness_decomposition(LieType type, int rank);

// Exhaustive two-summand ratio scan: module scalars (1, r) for r in the
// grid; returns the ratios whose space check never refutes. The surviving
// non-unit ratio is the derived value the golden files freeze.
struct ScanResult {
  std::vector<Rat> grid;
  std::vector<Rat> surviving;
  std::vector<Rat> refuted;
};

ScanResult scan_go_ratios(const FlagDecomposition& fd, const std::vector<Rat>& grid, long n_random = 64,
                          std::uint64_t seed = 0, ExecMode mode = default_exec_mode());

}  // namespace liego
