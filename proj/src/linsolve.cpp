#include "liego/linsolve.hpp"

#include <cassert>
#include <stdexcept>

namespace liego {

namespace {

// Elimination state: work on [A | b] while accumulating the row transform T
// (so an inconsistent row directly yields its Farkas multiplier).
struct Tableau {
  QMat a;
  QVec b;
  QMat t;  // rows x rows, starts as identity
  std::vector<int> pivot_col;
  std::vector<int> pivot_row_of_col;

  Tableau(const QMat& a_in, const QVec& b_in) : a(a_in), b(b_in) {
    const auto m = a.size();
    t.assign(m, QVec(m, 0));
    for (std::size_t i = 0; i < m; ++i) t[i][i] = 1;
  }
};

void eliminate(Tableau& tb) {
  const int m = static_cast<int>(tb.a.size());
  const int n = m ? static_cast<int>(tb.a[0].size()) : 0;
  tb.pivot_col.clear();
  tb.pivot_row_of_col.assign(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int r = row; r < m; ++r)
      if (tb.a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(tb.a[piv], tb.a[row]);
    std::swap(tb.t[piv], tb.t[row]);
    std::swap(tb.b[piv], tb.b[row]);
    const Rat inv = 1 / tb.a[row][col];
    for (int c = col; c < n; ++c) tb.a[row][c] *= inv;
    for (int c = 0; c < m; ++c) tb.t[row][c] *= inv;
    tb.b[row] *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || tb.a[r][col] == 0) continue;
      const Rat f = tb.a[r][col];
      for (int c = col; c < n; ++c) tb.a[r][c] -= f * tb.a[row][c];
      for (int c = 0; c < m; ++c) tb.t[r][c] -= f * tb.t[row][c];
      tb.b[r] -= f * tb.b[row];
    }
    tb.pivot_row_of_col[col] = row;
    tb.pivot_col.push_back(col);
    ++row;
  }
}

}  // namespace

LinearSolveResult solve_exact(const QMat& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_exact: row count mismatch");
  for (const auto& row : a)
    if (row.size() != (a.empty() ? 0 : a[0].size()))
      throw std::invalid_argument("solve_exact: ragged matrix");

  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  LinearSolveResult res;
  if (m == 0) {
    res.solvable = true;
    res.solution.assign(n, 0);
    return res;
  }

  Tableau tb(a, b);
  eliminate(tb);

  const int rank = static_cast<int>(tb.pivot_col.size());
  for (int r = rank; r < m; ++r) {
    if (tb.b[r] != 0) {
      res.solvable = false;
      res.farkas = tb.t[r];
      return res;
    }
  }
  res.solvable = true;
  res.solution.assign(n, 0);
  for (int k = 0; k < rank; ++k) res.solution[tb.pivot_col[k]] = tb.b[k];
  return res;
}

bool farkas_valid(const QMat& a, const QVec& b, const QVec& y) {
  if (y.size() != a.size() || a.size() != b.size()) return false;
  const int n = a.empty() ? 0 : static_cast<int>(a[0].size());
  for (int c = 0; c < n; ++c) {
    Rat s = 0;
    for (std::size_t r = 0; r < a.size(); ++r) s += y[r] * a[r][c];
    if (s != 0) return false;
  }
  Rat rhs = 0;
  for (std::size_t r = 0; r < b.size(); ++r) rhs += y[r] * b[r];
  return rhs != 0;
}

int rank_exact(QMat a) {
  if (a.empty()) return 0;
  QVec b(a.size(), 0);
  Tableau tb(a, b);
  eliminate(tb);
  return static_cast<int>(tb.pivot_col.size());
}

QMat kernel_basis(const QMat& a) {
  if (a.empty()) return {};
  const int n = static_cast<int>(a[0].size());
  QVec b(a.size(), 0);
  Tableau tb(a, b);
  eliminate(tb);

  QMat basis;
  for (int col = 0; col < n; ++col) {
    if (tb.pivot_row_of_col[col] >= 0) continue;  // pivot column
    QVec v(n, 0);
    v[col] = 1;
    for (int k = 0; k < static_cast<int>(tb.pivot_col.size()); ++k) {
      const int pc = tb.pivot_col[k];
      v[pc] = -tb.a[k][col];
    }
    // scale to primitive integer, leading entry positive
    mpz_class lcm = 1;
    for (const auto& x : v) lcm = lcm / gcd(lcm, x.get_den()) * x.get_den();
    for (auto& x : v) x *= Rat(lcm);
    mpz_class g = 0;
    for (const auto& x : v) g = gcd(g, x.get_num());
    if (g > 1)
      for (auto& x : v) x /= Rat(g);
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace liego
