#include "liego/verify.hpp"

#include <array>
#include <climits>
#include <functional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liego {

ExecMode default_exec_mode() {
#ifdef _OPENMP
  return ExecMode::Parallel;
#else
  return ExecMode::Serial;
#endif
}

namespace {

// Runs `pred` over [0, total) and returns the smallest failing index, or -1.
// The parallel variant computes the same index via a min reduction; the
// serial variant stops at the first failure.
long first_failure(long total, ExecMode mode, const std::function<bool(long)>& pred) {
  if (mode == ExecMode::Serial) {
    for (long t = 0; t < total; ++t)
      if (!pred(t)) return t;
    return -1;
  }
  long bad = LONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(min : bad)
#endif
  for (long t = 0; t < total; ++t) {
    if (!pred(t) && t < bad) bad = t;
  }
  return bad == LONG_MAX ? -1 : bad;
}

struct TripleDecode {
  int i, j, k;
};

TripleDecode decode3(long t, int n) {
  const long n2 = static_cast<long>(n) * n;
  return {static_cast<int>(t / n2), static_cast<int>((t / n) % n), static_cast<int>(t % n)};
}

}  // namespace

SweepResult jacobi_sweep(const ChevalleyAlgebra& g, ExecMode mode) {
  const int n = g.dim();
  const long total = static_cast<long>(n) * n * n;
  auto pred = [&](long t) {
    const auto [i, j, k] = decode3(t, n);
    const ChevalleyElement x = g.basis_element(i), y = g.basis_element(j), z = g.basis_element(k);
    const ChevalleyElement s =
        g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) + g.bracket(g.bracket(z, x), y);
    return s.is_zero();
  };
  SweepResult res;
  res.checked = total;
  const long bad = first_failure(total, mode, pred);
  if (bad >= 0) {
    res.ok = false;
    const auto [i, j, k] = decode3(bad, n);
    std::ostringstream os;
    os << "jacobi fails at (" << g.basis_name(i) << ", " << g.basis_name(j) << ", " << g.basis_name(k) << ")";
    res.counterexample = os.str();
  }
  return res;
}

SweepResult jacobi_sweep_compact(const CompactAlgebra& g, ExecMode mode) {
  const int n = g.dim();
  const long total = static_cast<long>(n) * n * n;
  auto pred = [&](long t) {
    const auto [i, j, k] = decode3(t, n);
    const LieElement x = g.basis_element(i), y = g.basis_element(j), z = g.basis_element(k);
    const LieElement s =
        g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) + g.bracket(g.bracket(z, x), y);
    return s.is_zero();
  };
  SweepResult res;
  res.checked = total;
  const long bad = first_failure(total, mode, pred);
  if (bad >= 0) {
    res.ok = false;
    const auto [i, j, k] = decode3(bad, n);
    res.counterexample = "jacobi (compact) fails at (" + g.basis_name(i) + ", " + g.basis_name(j) + ", " +
                         g.basis_name(k) + ")";
  }
  return res;
}

SweepResult jacobi_sample_compact(const CompactAlgebra& g, long triples, std::uint64_t seed, ExecMode mode) {
  const int n = g.dim();
  std::vector<std::array<int, 3>> idx(triples);
  Rng rng(seed);
  for (auto& t : idx)
    t = {static_cast<int>(rng.next_in(0, n - 1)), static_cast<int>(rng.next_in(0, n - 1)),
         static_cast<int>(rng.next_in(0, n - 1))};
  auto pred = [&](long t) {
    const auto [i, j, k] = idx[t];
    const LieElement x = g.basis_element(i), y = g.basis_element(j), z = g.basis_element(k);
    return (g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) + g.bracket(g.bracket(z, x), y))
        .is_zero();
  };
  SweepResult res;
  res.checked = triples;
  const long bad = first_failure(triples, mode, pred);
  if (bad >= 0) {
    res.ok = false;
    const auto [i, j, k] = idx[bad];
    res.counterexample = "jacobi sample fails at (" + g.basis_name(i) + ", " + g.basis_name(j) + ", " +
                         g.basis_name(k) + ")";
  }
  return res;
}

SweepResult killing_ad_invariance_sweep(const ChevalleyAlgebra& g, ExecMode mode) {
  const int n = g.dim();
  const long total = static_cast<long>(n) * n * n;
  auto pred = [&](long t) {
    const auto [zi, xi, yi] = decode3(t, n);
    const ChevalleyElement z = g.basis_element(zi), x = g.basis_element(xi), y = g.basis_element(yi);
    return g.killing(g.bracket(z, x), y) + g.killing(x, g.bracket(z, y)) == 0;
  };
  SweepResult res;
  res.checked = total;
  const long bad = first_failure(total, mode, pred);
  if (bad >= 0) {
    res.ok = false;
    const auto [zi, xi, yi] = decode3(bad, n);
    res.counterexample = "kappa ad-invariance fails at (" + g.basis_name(zi) + ", " + g.basis_name(xi) + ", " +
                         g.basis_name(yi) + ")";
  }
  return res;
}

SweepResult b_ad_invariance_sweep(const CompactAlgebra& g, ExecMode mode) {
  const int n = g.dim();
  const long total = static_cast<long>(n) * n * n;
  auto pred = [&](long t) {
    const auto [zi, xi, yi] = decode3(t, n);
    const LieElement z = g.basis_element(zi), x = g.basis_element(xi), y = g.basis_element(yi);
    return g.form_b(g.bracket(z, x), y) + g.form_b(x, g.bracket(z, y)) == 0;
  };
  SweepResult res;
  res.checked = total;
  const long bad = first_failure(total, mode, pred);
  if (bad >= 0) {
    res.ok = false;
    const auto [zi, xi, yi] = decode3(bad, n);
    res.counterexample = "B ad-invariance fails at (" + g.basis_name(zi) + ", " + g.basis_name(xi) + ", " +
                         g.basis_name(yi) + ")";
  }
  return res;
}

SweepResult dual_path_sweep(const CompactAlgebra& g, ExecMode mode) {
  const int n = g.dim();
  const long total = static_cast<long>(n) * n;
  auto pred = [&](long t) {
    const int i = static_cast<int>(t / n), j = static_cast<int>(t % n);
    const LieElement x = g.basis_element(i), y = g.basis_element(j);
    return g.bracket(x, y) == g.bracket_via_complexification(x, y);
  };
  SweepResult res;
  res.checked = total;
  const long bad = first_failure(total, mode, pred);
  if (bad >= 0) {
    res.ok = false;
    const int i = static_cast<int>(bad / n), j = static_cast<int>(bad % n);
    res.counterexample = "bracket paths disagree at (" + g.basis_name(i) + ", " + g.basis_name(j) + ")";
  }
  return res;
}

QMat compact_basis_gram(const CompactAlgebra& g, ExecMode mode) {
  const int n = g.dim();
  QMat out(n, QVec(n, 0));
  const ChevalleyAlgebra& c = g.chev();
  auto entry = [&](int i, int j) -> Rat {
    const auto [xr, xi_] = g.complexify(g.basis_element(i));
    const auto [yr, yi_] = g.complexify(g.basis_element(j));
    // B = -kappa, with kappa extended complex-bilinearly (the imaginary part
    // vanishes on conjugation-stable elements). Independent of form_b's
    // cached block data, so the two can be compared.
    return -(c.killing(xr, yr) - c.killing(xi_, yi_));
  };
  const long total = static_cast<long>(n) * (n + 1) / 2;
  auto work = [&](long t) {
    // unrank the upper triangle
    long i = 0, rem = t;
    while (rem >= n - i) {
      rem -= n - i;
      ++i;
    }
    const long j = i + rem;
    out[i][j] = out[j][i] = entry(static_cast<int>(i), static_cast<int>(j));
  };
  if (mode == ExecMode::Serial) {
    for (long t = 0; t < total; ++t) work(t);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long t = 0; t < total; ++t) work(t);
  }
  return out;
}

}  // namespace liego
