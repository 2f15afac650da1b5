#include "liego/gocheck.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liego {

std::string go_status_str(GoStatus s) {
  switch (s) {
    case GoStatus::GoCertifiedNr: return "GO_CERTIFIED_NR";
    case GoStatus::GoConsistent: return "GO_CONSISTENT";
    case GoStatus::NotGo: return "NOT_GO";
  }
  return "?";
}

MetricEndomorphism MetricEndomorphism::make(const FlagDecomposition& fd, const QVec& scalars) {
  const int c = fd.center_dim;
  const int p = static_cast<int>(fd.ideals.size());
  const int q = static_cast<int>(fd.modules.size());
  if (static_cast<int>(scalars.size()) != c + p + q)
    throw std::invalid_argument("metric needs " + std::to_string(c + p + q) + " scalars (center " +
                                std::to_string(c) + ", ideals " + std::to_string(p) + ", modules " +
                                std::to_string(q) + "), got " + std::to_string(scalars.size()));
  for (const Rat& s : scalars)
    if (s <= 0) throw std::invalid_argument("scalar must be positive");
  MetricEndomorphism a;
  a.center_scalars.assign(scalars.begin(), scalars.begin() + c);
  a.ideal_scalars.assign(scalars.begin() + c, scalars.begin() + c + p);
  a.module_scalars.assign(scalars.begin() + c + p, scalars.end());
  return a;
}

MetricEndomorphism MetricEndomorphism::identity(const FlagDecomposition& fd) {
  return make(fd, QVec(fd.summands(), 1));
}

QVec MetricEndomorphism::flat() const {
  QVec v = center_scalars;
  v.insert(v.end(), ideal_scalars.begin(), ideal_scalars.end());
  v.insert(v.end(), module_scalars.begin(), module_scalars.end());
  return v;
}

bool MetricEndomorphism::bi_invariant() const {
  const QVec v = flat();
  for (const Rat& s : v)
    if (s != v.front()) return false;
  return true;
}

namespace {

Rat summand_scalar(const MetricEndomorphism& a, const FlagDecomposition& fd, int summand) {
  if (summand < fd.center_dim) return a.center_scalars[summand];
  summand -= fd.center_dim;
  if (summand < static_cast<int>(fd.ideals.size())) return a.ideal_scalars[summand];
  return a.module_scalars[summand - fd.ideals.size()];
}

void validate_metric(const MetricEndomorphism& a, const FlagDecomposition& fd) {
  if (static_cast<int>(a.center_scalars.size()) != fd.center_dim ||
      a.ideal_scalars.size() != fd.ideals.size() || a.module_scalars.size() != fd.modules.size())
    throw std::invalid_argument("metric scalar counts do not match the decomposition");
}

}  // namespace

LieElement apply_metric(const MetricEndomorphism& a, const LieElement& x, const FlagDecomposition& fd) {
  validate_metric(a, fd);
  const CompactAlgebra& alg = fd.alg();
  alg.check_same_algebra(x);
  const int l = alg.rank();
  LieElement r = alg.zero();

  bool torus_nonzero = false;
  for (const Rat& t : x.torus)
    if (t != 0) torus_nonzero = true;
  if (torus_nonzero) {
    QVec coords(l, 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (x.torus[j] != 0) coords[i] += fd.torus_inv[i][j] * x.torus[j];
    for (int c = 0; c < l; ++c) coords[c] *= summand_scalar(a, fd, fd.torus_col_summand[c]);
    for (int i = 0; i < l; ++i)
      for (int c = 0; c < l; ++c)
        if (coords[c] != 0) r.torus[i] += fd.torus_cols[i][c] * coords[c];
  }

  const auto& pos = alg.roots().positive_roots();
  for (const auto& [root, cf] : x.a)
    r.a[root] = cf * summand_scalar(a, fd, fd.root_summand[alg.roots().pos_index(root)]);
  for (const auto& [root, cf] : x.b)
    r.b[root] = cf * summand_scalar(a, fd, fd.root_summand[alg.roots().pos_index(root)]);
  (void)pos;
  return r;
}

LieElement apply_metric_m(const QVec& module_scalars, const LieElement& x, const FlagDecomposition& fd) {
  if (module_scalars.size() != fd.modules.size())
    throw std::invalid_argument("module scalar count mismatch");
  for (const Rat& s : module_scalars)
    if (s <= 0) throw std::invalid_argument("scalar must be positive");
  const CompactAlgebra& alg = fd.alg();
  alg.check_same_algebra(x);
  for (const Rat& t : x.torus)
    if (t != 0) throw std::invalid_argument("apply_metric_m: element has a torus component");
  LieElement r = alg.zero();
  const int base = fd.center_dim + static_cast<int>(fd.ideals.size());
  auto scal = [&](const Root& root) -> const Rat& {
    const int s = fd.root_summand[alg.roots().pos_index(root)];
    if (s < base) throw std::invalid_argument("apply_metric_m: element has a k component");
    return module_scalars[s - base];
  };
  for (const auto& [root, cf] : x.a) r.a[root] = cf * scal(root);
  for (const auto& [root, cf] : x.b) r.b[root] = cf * scal(root);
  return r;
}

namespace {

// Basis elements per summand, in summand order.
std::vector<std::vector<LieElement>> summand_bases(const FlagDecomposition& fd) {
  const CompactAlgebra& alg = fd.alg();
  std::vector<std::vector<LieElement>> out;
  for (int ci = 0; ci < fd.center_dim; ++ci) {
    QVec v = fd.center_basis[ci];
    out.push_back({alg.torus_element(std::move(v))});
  }
  for (const auto& ideal : fd.ideals) {
    std::vector<LieElement> bas;
    for (int idx : ideal.basis_indices) bas.push_back(alg.basis_element(idx));
    out.push_back(std::move(bas));
  }
  for (const auto& mod : fd.modules) {
    std::vector<LieElement> bas;
    for (int idx : mod.basis_indices) bas.push_back(alg.basis_element(idx));
    out.push_back(std::move(bas));
  }
  return out;
}

}  // namespace

std::vector<LieElement> default_group_probes(const FlagDecomposition& fd, long n_random, std::uint64_t seed) {
  const CompactAlgebra& alg = fd.alg();
  std::vector<LieElement> probes;
  for (int i = 0; i < alg.dim(); ++i) probes.push_back(alg.basis_element(i));

  const auto bases = summand_bases(fd);
  for (std::size_t s = 0; s < bases.size(); ++s)
    for (std::size_t t = s + 1; t < bases.size(); ++t)
      for (const auto& u : bases[s])
        for (const auto& v : bases[t]) probes.push_back(u + v);

  // Canonical center + semisimple-Cartan + module-pair tuples; these contain
  // the hand-picked refutation tuples for the two-summand cases.
  if (fd.modules.size() >= 2) {
    LieElement head = alg.zero();
    for (int ci = 0; ci < fd.center_dim; ++ci) {
      QVec v = fd.center_basis[ci];
      head = head + alg.torus_element(std::move(v));
    }
    head = head + fd.unpainted_coroot_sum();
    if (!head.is_zero()) {
      const int base = fd.center_dim + static_cast<int>(fd.ideals.size());
      for (std::size_t s = 0; s < fd.modules.size(); ++s)
        for (std::size_t t = s + 1; t < fd.modules.size(); ++t)
          for (const auto& u : bases[base + s])
            for (const auto& v : bases[base + t]) probes.push_back(head + u + v);
    }
  }

  Rng rng(seed);
  for (long i = 0; i < n_random; ++i) probes.push_back(alg.random_element(rng));
  return probes;
}

std::vector<LieElement> default_space_probes(const FlagDecomposition& fd, long n_random, std::uint64_t seed) {
  const CompactAlgebra& alg = fd.alg();
  std::vector<LieElement> probes;
  const auto m_idx = fd.m_basis_indices();
  for (int idx : m_idx) probes.push_back(alg.basis_element(idx));

  const auto bases = summand_bases(fd);
  const int base = fd.center_dim + static_cast<int>(fd.ideals.size());
  for (std::size_t s = 0; s < fd.modules.size(); ++s)
    for (std::size_t t = s + 1; t < fd.modules.size(); ++t)
      for (const auto& u : bases[base + s])
        for (const auto& v : bases[base + t]) probes.push_back(u + v);

  Rng rng(seed);
  for (long i = 0; i < n_random; ++i) {
    LieElement x = alg.zero();
    for (int idx : m_idx) {
      const Rat c = rng.next_rat(5, 4);
      if (c != 0) x = x + c * alg.basis_element(idx);
    }
    probes.push_back(x);
  }
  return probes;
}

LinearSolveResult solve_group_probe(const MetricEndomorphism& a, const LieElement& x,
                                    const FlagDecomposition& fd) {
  const CompactAlgebra& alg = fd.alg();
  const LieElement ax = apply_metric(a, x, fd);
  const auto k_idx = fd.k_basis_indices();
  const int rows = alg.dim(), cols = static_cast<int>(k_idx.size());

  QMat mat(rows, QVec(cols, 0));
  for (int j = 0; j < cols; ++j) {
    const QVec col = alg.coords(alg.bracket(ax, alg.basis_element(k_idx[j])));
    for (int i = 0; i < rows; ++i) mat[i][j] = col[i];
  }
  const QVec rhs_full = alg.coords(Rat(-1) * alg.bracket(ax, x));
  return solve_exact(mat, rhs_full);
}

LinearSolveResult solve_space_probe(const QVec& module_scalars, const LieElement& x,
                                    const FlagDecomposition& fd) {
  const CompactAlgebra& alg = fd.alg();
  const LieElement ax = apply_metric_m(module_scalars, x, fd);
  const auto k_idx = fd.k_basis_indices();
  const auto m_idx = fd.m_basis_indices();
  const int rows = static_cast<int>(m_idx.size()), cols = static_cast<int>(k_idx.size());

  QMat mat(rows, QVec(cols, 0));
  for (int j = 0; j < cols; ++j) {
    const QVec col = alg.coords(alg.bracket(alg.basis_element(k_idx[j]), ax));
    for (int i = 0; i < rows; ++i) mat[i][j] = col[m_idx[i]];
  }
  const QVec full = alg.coords(Rat(-1) * alg.bracket(x, ax));
  QVec rhs(rows);
  for (int i = 0; i < rows; ++i) rhs[i] = full[m_idx[i]];
  return solve_exact(mat, rhs);
}

namespace {

// Shared probe-loop driver. Returns the first failing probe index or -1.
long first_unsolvable(const std::vector<LieElement>& probes, ExecMode mode,
                      const std::function<bool(const LieElement&)>& solvable) {
  const long total = static_cast<long>(probes.size());
  if (mode == ExecMode::Serial) {
    for (long i = 0; i < total; ++i)
      if (!solvable(probes[i])) return i;
    return -1;
  }
  long bad = LONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(min : bad)
#endif
  for (long i = 0; i < total; ++i) {
    if (!solvable(probes[i]) && i < bad) bad = i;
  }
  return bad == LONG_MAX ? -1 : bad;
}

}  // namespace

GoVerdict go_group_check(const MetricEndomorphism& a, const FlagDecomposition& fd,
                         const std::vector<LieElement>& probes, ExecMode mode) {
  validate_metric(a, fd);
  if (probes.empty()) throw std::invalid_argument("empty probe set");
  GoVerdict v;
  if (a.bi_invariant()) {
    v.status = GoStatus::GoCertifiedNr;
    v.certificate = "bi-invariant metric: [A(X), X+W] = 0 with W = 0 for every X";
    v.probes_checked = 0;
    return v;
  }
  const long bad = first_unsolvable(probes, mode, [&](const LieElement& x) {
    return solve_group_probe(a, x, fd).solvable;
  });
  if (bad >= 0) {
    const auto res = solve_group_probe(a, probes[bad], fd);
    v.status = GoStatus::NotGo;
    v.probes_checked = bad + 1;
    GoWitness w;
    w.probe = probes[bad];
    w.probe_index = bad;
    w.description = "no W in k solves [A(X), X+W] = 0 for probe #" + std::to_string(bad);
    w.farkas = res.farkas;
    v.witness = std::move(w);
    return v;
  }
  v.probes_checked = static_cast<long>(probes.size());
  if (nr_form_check(a, fd)) {
    v.status = GoStatus::GoCertifiedNr;
    v.certificate = "naturally reductive form: equal scalar on every isotropy module";
  } else {
    v.status = GoStatus::GoConsistent;
  }
  return v;
}

GoVerdict go_space_check(const QVec& module_scalars, const FlagDecomposition& fd,
                         const std::vector<LieElement>& probes, ExecMode mode) {
  if (module_scalars.size() != fd.modules.size())
    throw std::invalid_argument("module scalar count mismatch");
  for (const Rat& s : module_scalars)
    if (s <= 0) throw std::invalid_argument("scalar must be positive");
  if (probes.empty()) throw std::invalid_argument("empty probe set");

  GoVerdict v;
  bool homothetic = true;
  for (const Rat& s : module_scalars)
    if (s != module_scalars.front()) homothetic = false;
  if (homothetic) {
    v.status = GoStatus::GoCertifiedNr;
    v.certificate = "homothetic to the standard metric: a(X) = 0 works for every X";
    v.probes_checked = 0;
    return v;
  }
  const long bad = first_unsolvable(probes, mode, [&](const LieElement& x) {
    return solve_space_probe(module_scalars, x, fd).solvable;
  });
  if (bad >= 0) {
    const auto res = solve_space_probe(module_scalars, probes[bad], fd);
    v.status = GoStatus::NotGo;
    v.probes_checked = bad + 1;
    GoWitness w;
    w.probe = probes[bad];
    w.probe_index = bad;
    w.description = "no a in k puts [a + X, A(X)] into k for probe #" + std::to_string(bad);
    w.farkas = res.farkas;
    v.witness = std::move(w);
    return v;
  }
  v.probes_checked = static_cast<long>(probes.size());
  v.status = GoStatus::GoConsistent;
  return v;
}

bool nr_form_check(const MetricEndomorphism& a, const FlagDecomposition& fd) {
  validate_metric(a, fd);
  for (const Rat& s : a.module_scalars)
    if (s != a.module_scalars.front()) return false;
  return true;
}

NrReport nr_definitional_check(const MetricEndomorphism& a, const FlagDecomposition& fd, ExecMode mode) {
  validate_metric(a, fd);
  const CompactAlgebra& alg = fd.alg();
  const auto m_idx = fd.m_basis_indices();
  const int n = static_cast<int>(m_idx.size());
  NrReport rep;
  if (n == 0) return rep;  // vacuous

  std::vector<LieElement> mb;
  mb.reserve(n);
  for (int idx : m_idx) mb.push_back(alg.basis_element(idx));
  const QVec& ms = a.module_scalars;

  auto inner = [&](const LieElement& u, const LieElement& w) -> Rat {
    return alg.form_b(apply_metric_m(ms, u, fd), w);
  };
  auto pred = [&](long t) -> bool {
    const int zi = static_cast<int>(t / (static_cast<long>(n) * n));
    const int xi = static_cast<int>((t / n) % n);
    const int yi = static_cast<int>(t % n);
    const LieElement zx = fd.m_component(alg.bracket(mb[zi], mb[xi]));
    const LieElement zy = fd.m_component(alg.bracket(mb[zi], mb[yi]));
    return inner(zx, mb[yi]) + inner(mb[xi], zy) == 0;
  };

  const long total = static_cast<long>(n) * n * n;
  rep.triples_checked = total;
  long bad = -1;
  if (mode == ExecMode::Serial) {
    for (long t = 0; t < total && bad < 0; ++t)
      if (!pred(t)) bad = t;
  } else {
    long best = LONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
#endif
    for (long t = 0; t < total; ++t)
      if (!pred(t) && t < best) best = t;
    if (best != LONG_MAX) bad = best;
  }
  if (bad >= 0) {
    rep.ok = false;
    const int zi = static_cast<int>(bad / (static_cast<long>(n) * n));
    const int xi = static_cast<int>((bad / n) % n);
    const int yi = static_cast<int>(bad % n);
    rep.counterexample = "([Z,X]_m,Y) + (X,[Z,Y]_m) != 0 at Z=" + alg.basis_name(m_idx[zi]) +
                         ", X=" + alg.basis_name(m_idx[xi]) + ", Y=" + alg.basis_name(m_idx[yi]);
  }
  return rep;
}

namespace {

bool in_span(const LieElement& x, const std::vector<int>& allowed, const CompactAlgebra& alg) {
  const QVec v = alg.coords(x);
  std::vector<char> ok(v.size(), 0);
  for (int idx : allowed) ok[idx] = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0 && !ok[i]) return false;
  return true;
}

}  // namespace

ThreeCondResult three_condition_check(const Rat& u, const Rat& x, const Rat& y, const LieElement& t,
                                      const LieElement& h, const LieElement& x1, const LieElement& x2,
                                      const FlagDecomposition& fd) {
  if (u <= 0 || x <= 0 || y <= 0) throw std::invalid_argument("scalar must be positive");
  if (fd.modules.size() < 2) throw std::invalid_argument("three-condition check needs two isotropy modules");
  const CompactAlgebra& alg = fd.alg();

  // Membership validation: T central in k, H in the semisimple part,
  // X1 in m_1, X2 in m_2.
  {
    if (!t.a.empty() || !t.b.empty()) throw std::invalid_argument("T must lie in the center of k");
    QVec coords(alg.rank(), 0);
    for (int i = 0; i < alg.rank(); ++i)
      for (int j = 0; j < alg.rank(); ++j)
        if (t.torus[j] != 0) coords[i] += fd.torus_inv[i][j] * t.torus[j];
    for (int c = 0; c < alg.rank(); ++c)
      if (coords[c] != 0 && fd.torus_col_summand[c] >= fd.center_dim)
        throw std::invalid_argument("T must lie in the center of k");
    QVec hc(alg.rank(), 0);
    for (int i = 0; i < alg.rank(); ++i)
      for (int j = 0; j < alg.rank(); ++j)
        if (h.torus[j] != 0) hc[i] += fd.torus_inv[i][j] * h.torus[j];
    for (int c = 0; c < alg.rank(); ++c)
      if (hc[c] != 0 && fd.torus_col_summand[c] < fd.center_dim)
        throw std::invalid_argument("H must lie in the semisimple part of k");
    std::vector<int> k_root_idx;
    for (int idx : fd.rk_pos) {
      k_root_idx.push_back(alg.a_index(idx));
      k_root_idx.push_back(alg.b_index(idx));
    }
    for (int j = 0; j < alg.rank(); ++j) k_root_idx.push_back(j);
    if (!in_span(h, k_root_idx, alg)) throw std::invalid_argument("H must lie in k");
    if (!in_span(x1, fd.modules[0].basis_indices, alg)) throw std::invalid_argument("X1 must lie in m_1");
    if (!in_span(x2, fd.modules[1].basis_indices, alg)) throw std::invalid_argument("X2 must lie in m_2");
  }

  const auto k_idx = fd.k_basis_indices();
  const int cols = static_cast<int>(k_idx.size());
  const int dim = alg.dim();

  QMat mat(3 * dim, QVec(cols, 0));
  QVec rhs(3 * dim, 0);
  for (int j = 0; j < cols; ++j) {
    const LieElement kb = alg.basis_element(k_idx[j]);
    const QVec c1 = alg.coords(alg.bracket(h, kb));
    const QVec c2 = alg.coords(alg.bracket(kb, x1));
    const QVec c3 = alg.coords(alg.bracket(kb, x2));
    for (int i = 0; i < dim; ++i) {
      mat[i][j] = c1[i];
      mat[dim + i][j] = x * c2[i];
      mat[2 * dim + i][j] = y * c3[i];
    }
  }
  const LieElement c2_fixed = (x - 1) * t + (x - u) * h + (x - y) * x2;
  const LieElement c3_fixed = (y - 1) * t + (y - u) * h;
  const QVec r2 = alg.coords(Rat(-1) * alg.bracket(c2_fixed, x1));
  const QVec r3 = alg.coords(Rat(-1) * alg.bracket(c3_fixed, x2));
  for (int i = 0; i < dim; ++i) {
    rhs[dim + i] = r2[i];
    rhs[2 * dim + i] = r3[i];
  }

  const auto sol = solve_exact(mat, rhs);
  ThreeCondResult res;
  res.solvable = sol.solvable;
  if (sol.solvable) {
    LieElement k = alg.zero();
    for (int j = 0; j < cols; ++j)
      if (sol.solution[j] != 0) k = k + sol.solution[j] * alg.basis_element(k_idx[j]);
    res.k_solution = k;
  } else {
    res.farkas = sol.farkas;
  }
  return res;
}

FlagDecomposition witness_decomposition(LieType type, int rank) {
  if (type == LieType::B && rank < 2) throw std::invalid_argument("witness for B needs rank >= 2");
  if (type == LieType::C && rank < 3) throw std::invalid_argument("witness for C needs rank >= 3");
  if (type != LieType::B && type != LieType::C)
    throw std::invalid_argument("witness argument exists for types B and C only");
  auto chev = std::make_shared<ChevalleyAlgebra>(build_root_system(type, rank));
  auto alg = std::make_shared<CompactAlgebra>(std::move(chev));
  const std::set<int> painted = type == LieType::B ? std::set<int>{rank} : std::set<int>{1};
  return decompose(PaintedDiagram::make(std::move(alg), painted));
}

WitnessRefutation witness_nongo(LieType type, int rank, const Rat& u, const Rat& x, const Rat& y) {
  if (u <= 0 || x <= 0 || y <= 0) throw std::invalid_argument("scalar must be positive");
  WitnessRefutation ref;
  ref.type = type;
  ref.rank = rank;
  ref.u = u;
  ref.x = x;
  ref.y = y;
  if (x == y) {
    witness_decomposition(type, rank);  // still validates the inputs
    ref.vacuous = true;
    return ref;
  }

  const FlagDecomposition fd = witness_decomposition(type, rank);
  const CompactAlgebra& alg = fd.alg();
  const int l = rank;

  std::vector<int> x1c(l, 0), x2c(l, 0);
  if (type == LieType::B) {
    x1c[l - 1] = 1;                              // alpha_l
    for (int i = 0; i < l - 1; ++i) x2c[i] = 1;  // alpha_1 + ... + alpha_{l-1} + 2 alpha_l
    x2c[l - 1] = 2;
  } else {
    x1c[0] = 1;                                  // alpha_1
    for (int i = 0; i < l - 1; ++i) x2c[i] = 2;  // 2 alpha_1 + ... + 2 alpha_{l-1} + alpha_l
    x2c[l - 1] = 1;
  }
  ref.x1_root = Root(x1c);
  ref.x2_root = Root(x2c);
  ref.obstruction_root = ref.x2_root - ref.x1_root;
  ref.blocked_root = ref.obstruction_root - ref.x1_root;

  ref.t = fd.center_generator();
  ref.h = fd.unpainted_coroot_sum();
  ref.x1 = alg.b_element(ref.x1_root);
  ref.x2 = alg.a_element(ref.x2_root);

  const RootSystem& rs = alg.roots();
  if (!rs.contains(ref.obstruction_root) || !rs.contains(ref.blocked_root))
    throw std::logic_error("witness roots missing from the root system");
  if (!t_root(ref.blocked_root, fd.diagram).is_zero())
    throw std::logic_error("blocked root is not in R_K");

  // The obstruction coefficient: [X2, X1] = N_{x2,-x1} B_{x2-x1} (the other
  // string term leaves R), entering condition (2) with weight (x - y).
  ref.n_value = alg.chev().n(ref.x2_root, -ref.x1_root);
  const LieElement br = alg.bracket(ref.x2, ref.x1);
  auto it = br.b.find(ref.obstruction_root);
  if (it == br.b.end() || it->second != ref.n_value)
    throw std::logic_error("obstruction bracket does not match the structure constant");
  ref.obstruction_basis = 'B';
  ref.obstruction_coeff = (y - x) * Rat(ref.n_value);

  // Cartan-matrix sub-argument: the pairing of the blocked root against the
  // unpainted simples is nonzero, so [H, K] = 0 leaves no room for a
  // compensating K-component on that root's A/B plane.
  ref.pairing_coroot = 0;
  ref.pairing_bilinear = 0;
  for (int j = 1; j <= l; ++j) {
    if (fd.diagram.is_painted(j)) continue;
    ref.pairing_coroot += Rat(rs.cartan_int_simple(ref.blocked_root, j - 1));
    ref.pairing_bilinear += rs.pairing(ref.blocked_root, rs.simple_root(j - 1));
  }

  const auto res = three_condition_check(u, x, y, ref.t, ref.h, ref.x1, ref.x2, fd);
  ref.unsolvable = !res.solvable;
  ref.farkas = res.farkas;
  return ref;
}

ScanResult scan_go_ratios(const FlagDecomposition& fd, const std::vector<Rat>& grid, long n_random,
                          std::uint64_t seed, ExecMode mode) {
  if (fd.modules.size() != 2)
    throw std::invalid_argument("ratio scan supports exactly two isotropy modules");
  const auto probes = default_space_probes(fd, n_random, seed);
  ScanResult out;
  out.grid = grid;
  for (const Rat& r : grid) {
    if (r <= 0) throw std::invalid_argument("scalar must be positive");
    const QVec ms{Rat(1), r};
    const GoVerdict v = go_space_check(ms, fd, probes, mode);
    if (v.status == GoStatus::NotGo)
      out.refuted.push_back(r);
    else
      out.surviving.push_back(r);
  }
  return out;
}

}  // namespace liego
