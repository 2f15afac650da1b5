#pragma once

#include <cstdint>
#include <string>

#include "liego/chevalley.hpp"
#include "liego/compact.hpp"

namespace liego {

// Every sweep below exists in a serial variant (the reference) and an
// OpenMP variant; both return the same result including the first
// counterexample in index order.
enum class ExecMode { Serial, Parallel };

ExecMode default_exec_mode();

struct SweepResult {
  bool ok = true;
  long checked = 0;
  std::string counterexample;  // empty when ok
};

// Jacobi identity over all Chevalley basis triples, exact zero.
SweepResult jacobi_sweep(const ChevalleyAlgebra& g, ExecMode mode = default_exec_mode());

// Jacobi identity over all compact basis triples.
SweepResult jacobi_sweep_compact(const CompactAlgebra& g, ExecMode mode = default_exec_mode());

// Seeded random basis triples (for ranks where the full cube is excessive).
SweepResult jacobi_sample_compact(const CompactAlgebra& g, long triples, std::uint64_t seed,
                                  ExecMode mode = default_exec_mode());

// kappa([z,x],y) + kappa(x,[z,y]) = 0 over all basis triples.
SweepResult killing_ad_invariance_sweep(const ChevalleyAlgebra& g, ExecMode mode = default_exec_mode());

// B([z,x],y) + B(x,[z,y]) = 0 over all compact basis triples.
SweepResult b_ad_invariance_sweep(const CompactAlgebra& g, ExecMode mode = default_exec_mode());

// Structure-table bracket against the complexified reference path, all pairs.
SweepResult dual_path_sweep(const CompactAlgebra& g, ExecMode mode = default_exec_mode());

// Full matrix of B = -kappa over the compact basis, recomputed by explicit
// traces through the complexification (independent of the block data
// form_b caches). Exercised by the benchmark and the cross-check tests.
QMat compact_basis_gram(const CompactAlgebra& g, ExecMode mode = default_exec_mode());

}  // namespace liego
