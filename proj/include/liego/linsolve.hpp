#pragma once

#include "liego/rational.hpp"

namespace liego {

// Outcome of an exact linear solve A x = b.
//
// When unsolvable, `farkas` is a row multiplier y with y^T A = 0 and
// y^T b != 0: a certificate of inconsistency that can be rechecked from
// scratch independently of the elimination that produced it.
struct LinearSolveResult {
  bool solvable = false;
  QVec solution;  // one solution, free variables set to 0
  QVec farkas;    // inconsistency certificate (empty when solvable)
};

// Fraction-pivot Gaussian elimination over the rationals, no tolerances.
// A is row-major, rows may exceed or fall short of columns.
LinearSolveResult solve_exact(const QMat& a, const QVec& b);

// Recomputes y^T A and y^T b and checks the certificate condition.
bool farkas_valid(const QMat& a, const QVec& b, const QVec& y);

// Rank of the row space, exact.
int rank_exact(QMat a);

// Basis of the right kernel {x : A x = 0}, each vector scaled to primitive
// integer form with positive leading entry (deterministic output).
QMat kernel_basis(const QMat& a);

}  // namespace liego
