#include "liego/flag.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "liego/linsolve.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liego {

PaintedDiagram PaintedDiagram::make(std::shared_ptr<const CompactAlgebra> alg, std::set<int> painted) {
  if (!alg) throw std::invalid_argument("painted diagram without an algebra");
  for (int p : painted)
    if (p < 1 || p > alg->rank())
      throw std::invalid_argument("painted node " + std::to_string(p) + " outside 1.." +
                                  std::to_string(alg->rank()));
  return PaintedDiagram{std::move(alg), std::move(painted)};
}

std::string PaintedDiagram::compact_str() const {
  std::string s = type_rank_str(alg->roots().type(), alg->rank()) + ":";
  for (int i = 1; i <= alg->rank(); ++i) s += is_painted(i) ? 'x' : 'o';
  return s;
}

bool TRoot::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

std::string TRoot::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

TRoot t_root(const Root& alpha, const PaintedDiagram& pd) {
  if (static_cast<int>(alpha.c.size()) != pd.alg->rank()) throw std::invalid_argument("t_root: dimension mismatch");
  TRoot t;
  for (int p : pd.painted) t.c.push_back(alpha.c[p - 1]);
  return t;
}

std::pair<std::vector<int>, std::vector<int>> split_roots(const PaintedDiagram& pd) {
  std::vector<int> rk, rm;
  const auto& pos = pd.alg->roots().positive_roots();
  for (int i = 0; i < static_cast<int>(pos.size()); ++i) {
    if (t_root(pos[i], pd).is_zero())
      rk.push_back(i);
    else
      rm.push_back(i);
  }
  return {rk, rm};
}

namespace {

struct Component {
  std::vector<int> nodes;  // 0-based, ascending
};

std::vector<Component> unpainted_components(const PaintedDiagram& pd) {
  const auto& a = pd.alg->roots().cartan().a;
  const int l = pd.alg->rank();
  std::vector<int> comp(l, -1);
  int nc = 0;
  for (int s = 0; s < l; ++s) {
    if (pd.is_painted(s + 1) || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < l; ++v) {
        if (v == u || pd.is_painted(v + 1) || comp[v] >= 0 || a[u][v] == 0) continue;
        comp[v] = nc;
        stack.push_back(v);
      }
    }
    ++nc;
  }
  std::vector<Component> out(nc);
  for (int v = 0; v < l; ++v)
    if (comp[v] >= 0) out[comp[v]].nodes.push_back(v);
  for (auto& c : out) std::sort(c.nodes.begin(), c.nodes.end());
  std::sort(out.begin(), out.end(), [](const Component& x, const Component& y) { return x.nodes[0] < y.nodes[0]; });
  return out;
}

// Re-identify the component type from its Cartan submatrix up to relabeling.
// Components of classical diagrams are paths, possibly with one double edge
// at an end, or a D-type fork.
std::pair<LieType, int> classify_component(const std::vector<int>& nodes,
                                           const std::vector<std::vector<int>>& a, LieType ambient) {
  const int r = static_cast<int>(nodes.size());
  if (r == 1) return {LieType::A, 1};

  auto adjacent = [&](int u, int v) { return u != v && a[u][v] != 0; };
  std::map<int, std::vector<int>> adj;
  for (int u : nodes)
    for (int v : nodes)
      if (adjacent(u, v)) adj[u].push_back(v);

  for (int u : nodes)
    if (adj[u].size() >= 3) return {LieType::D, r};

  std::vector<int> ends;
  for (int u : nodes)
    if (adj[u].size() <= 1) ends.push_back(u);
  if (ends.size() != 2) throw std::logic_error("unpainted component is neither a path nor a fork");

  auto walk = [&](int start) {
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while (static_cast<int>(path.size()) < r) {
      int nxt = -1;
      for (int v : adj[cur])
        if (v != prev) nxt = v;
      if (nxt < 0) throw std::logic_error("broken path walk");
      path.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return path;
  };

  bool has_double = false;
  for (int u : nodes)
    for (int v : adj[u])
      if (a[u][v] == -2) has_double = true;
  if (!has_double) return {LieType::A, r};

  if (r == 2) {
    // so(5) and sp(2) coincide; keep the ambient family's name.
    return {ambient == LieType::C ? LieType::C : LieType::B, 2};
  }
  for (int start : ends) {
    const auto path = walk(start);
    const int s = path[r - 2], t = path[r - 1];
    if (a[s][t] == -2) return {LieType::B, r};  // short end node
    if (a[t][s] == -2) return {LieType::C, r};  // long end node
  }
  throw std::logic_error("double edge not at a path end");
}

std::string ideal_name(LieType t, int r) {
  switch (t) {
    case LieType::A: return "su(" + std::to_string(r + 1) + ")";
    case LieType::B: return "so(" + std::to_string(2 * r + 1) + ")";
    case LieType::C: return "sp(" + std::to_string(r) + ")";
    case LieType::D: return "so(" + std::to_string(2 * r) + ")";
  }
  return "?";
}

QMat invert_exact(const QMat& m) {
  const int n = static_cast<int>(m.size());
  QMat inv(n, QVec(n, 0));
  for (int col = 0; col < n; ++col) {
    QVec e(n, 0);
    e[col] = 1;
    const auto sol = solve_exact(m, e);
    if (!sol.solvable) throw std::logic_error("singular torus change-of-basis matrix");
    for (int rix = 0; rix < n; ++rix) inv[rix][col] = sol.solution[rix];
  }
  return inv;
}

}  // namespace

FlagDecomposition decompose(const PaintedDiagram& pd) {
  FlagDecomposition fd;
  fd.diagram = pd;
  const CompactAlgebra& alg = *pd.alg;
  const RootSystem& rs = alg.roots();
  const int l = rs.rank();

  std::tie(fd.rk_pos, fd.rm_pos) = split_roots(pd);

  // Center of k: torus vectors annihilated by every unpainted simple root.
  QMat rows;
  for (int p = 0; p < l; ++p) {
    if (pd.is_painted(p + 1)) continue;
    QVec row(l);
    for (int j = 0; j < l; ++j) row[j] = rs.cartan().a[p][j];
    rows.push_back(std::move(row));
  }
  fd.center_basis = rows.empty() ? QMat{} : kernel_basis(rows);
  if (rows.empty()) {
    // full flag: the whole torus is central in k
    fd.center_basis.assign(l, QVec(l, 0));
    for (int i = 0; i < l; ++i) fd.center_basis[i][i] = 1;
  }
  fd.center_dim = static_cast<int>(fd.center_basis.size());
  if (fd.center_dim != static_cast<int>(pd.painted.size()))
    throw std::logic_error("center dimension != number of painted nodes");

  // Direct cross-check: the centralizer condition over all of R_K (not just
  // the unpainted simples) must cut out the same kernel.
  {
    QMat all_rows;
    for (int idx : fd.rk_pos) {
      const Root& g = rs.positive_roots()[idx];
      QVec row(l);
      for (int j = 0; j < l; ++j) row[j] = rs.cartan_int_simple(g, j);
      all_rows.push_back(std::move(row));
    }
    const int zdim = all_rows.empty() ? l : static_cast<int>(kernel_basis(all_rows).size());
    if (zdim != fd.center_dim) throw std::logic_error("z(k) cross-check failed");
  }

  // Ideals of k from the connected components of the unpainted sub-diagram.
  for (const Component& comp : unpainted_components(pd)) {
    FlagIdeal ideal;
    const auto [t, r] = classify_component(comp.nodes, rs.cartan().a, rs.type());
    ideal.type = t;
    ideal.rank = r;
    ideal.name = ideal_name(t, r);
    for (int n0 : comp.nodes) ideal.nodes.push_back(n0 + 1);
    fd.ideals.push_back(std::move(ideal));
  }
  // R_K root vectors belong to the component carrying their support.
  for (int idx : fd.rk_pos) {
    const Root& g = rs.positive_roots()[idx];
    int owner = -1;
    for (std::size_t i = 0; i < fd.ideals.size(); ++i) {
      for (int node : fd.ideals[i].nodes)
        if (g.c[node - 1] != 0) owner = static_cast<int>(i);
    }
    if (owner < 0) throw std::logic_error("R_K root with no owning ideal");
    fd.ideals[owner].pos_roots.push_back(idx);
  }
  for (auto& ideal : fd.ideals) {
    for (int node : ideal.nodes) ideal.basis_indices.push_back(alg.torus_index(node - 1));
    for (int idx : ideal.pos_roots) {
      ideal.basis_indices.push_back(alg.a_index(idx));
      ideal.basis_indices.push_back(alg.b_index(idx));
    }
    ideal.dim = static_cast<int>(ideal.basis_indices.size());
  }

  // Isotropy modules grouped by positive t-root, ascending.
  std::map<TRoot, std::vector<int>> by_troot;
  for (int idx : fd.rm_pos) by_troot[t_root(rs.positive_roots()[idx], pd)].push_back(idx);
  for (auto& [tr, idxs] : by_troot) {
    FlagModule m;
    m.troot = tr;
    m.pos_roots = idxs;
    for (int idx : idxs) {
      m.basis_indices.push_back(alg.a_index(idx));
      m.basis_indices.push_back(alg.b_index(idx));
    }
    m.dim = static_cast<int>(m.basis_indices.size());
    fd.modules.push_back(std::move(m));
  }

  fd.dim_k = l + 2 * static_cast<int>(fd.rk_pos.size());
  fd.dim_m = 2 * static_cast<int>(fd.rm_pos.size());
  if (fd.dim_k + fd.dim_m != alg.dim()) throw std::logic_error("dimension accounting failed");

  // Exact torus split: columns are the center vectors, then the coroots of
  // the unpainted simples per ideal (those coroots are unit vectors in the
  // simple-coroot basis).
  fd.torus_cols.assign(l, QVec(l, 0));
  fd.torus_col_summand.assign(l, -1);
  int col = 0;
  for (int ci = 0; ci < fd.center_dim; ++ci, ++col) {
    for (int rix = 0; rix < l; ++rix) fd.torus_cols[rix][col] = fd.center_basis[ci][rix];
    fd.torus_col_summand[col] = ci;
  }
  for (std::size_t ii = 0; ii < fd.ideals.size(); ++ii) {
    for (int node : fd.ideals[ii].nodes) {
      fd.torus_cols[node - 1][col] = 1;
      fd.torus_col_summand[col] = fd.ideal_summand(static_cast<int>(ii));
      ++col;
    }
  }
  if (col != l) throw std::logic_error("torus split column count");
  fd.torus_inv = invert_exact(fd.torus_cols);

  fd.root_summand.assign(rs.num_positive(), -1);
  for (std::size_t ii = 0; ii < fd.ideals.size(); ++ii)
    for (int idx : fd.ideals[ii].pos_roots) fd.root_summand[idx] = fd.ideal_summand(static_cast<int>(ii));
  for (std::size_t mi = 0; mi < fd.modules.size(); ++mi)
    for (int idx : fd.modules[mi].pos_roots) fd.root_summand[idx] = fd.module_summand(static_cast<int>(mi));

  return fd;
}

std::string FlagDecomposition::summand_name(int s) const {
  if (s < center_dim) return center_dim == 1 ? "u(1)" : "z" + std::to_string(s + 1);
  s -= center_dim;
  if (s < static_cast<int>(ideals.size())) return ideals[s].name;
  s -= static_cast<int>(ideals.size());
  return "m" + std::to_string(s + 1);
}

std::vector<int> FlagDecomposition::k_basis_indices() const {
  std::vector<int> idxs;
  for (int j = 0; j < alg().rank(); ++j) idxs.push_back(alg().torus_index(j));
  for (int idx : rk_pos) {
    idxs.push_back(alg().a_index(idx));
    idxs.push_back(alg().b_index(idx));
  }
  return idxs;
}

std::vector<int> FlagDecomposition::m_basis_indices() const {
  std::vector<int> idxs;
  for (int idx : rm_pos) {
    idxs.push_back(alg().a_index(idx));
    idxs.push_back(alg().b_index(idx));
  }
  return idxs;
}

LieElement FlagDecomposition::m_component(const LieElement& x) const {
  // k and m are B-orthogonal and basis-aligned, so this is plain selection.
  LieElement r = alg().zero();
  const auto& pos = alg().roots().positive_roots();
  for (int idx : rm_pos) {
    auto ita = x.a.find(pos[idx]);
    if (ita != x.a.end()) r.a[pos[idx]] = ita->second;
    auto itb = x.b.find(pos[idx]);
    if (itb != x.b.end()) r.b[pos[idx]] = itb->second;
  }
  return r;
}

LieElement FlagDecomposition::center_generator() const {
  if (center_dim != 1) throw std::logic_error("center_generator requires a 1-dimensional center");
  QVec v(center_basis[0]);
  return alg().torus_element(std::move(v));
}

LieElement FlagDecomposition::unpainted_coroot_sum() const {
  QVec v(alg().rank(), 0);
  for (int j = 1; j <= alg().rank(); ++j)
    if (!diagram.is_painted(j)) v[j - 1] = 1;
  return alg().torus_element(std::move(v));
}

StructureReport verify_module_structure(const FlagDecomposition& fd, ExecMode mode) {
  const CompactAlgebra& alg = fd.alg();
  const int dim = alg.dim();

  // Group ownership per basis index: -1 = k, i >= 0 = module i.
  std::vector<int> group(dim, -1);
  for (std::size_t mi = 0; mi < fd.modules.size(); ++mi)
    for (int idx : fd.modules[mi].basis_indices) group[idx] = static_cast<int>(mi);

  // Allowed-support masks per (group(u), group(v)).
  const int q = static_cast<int>(fd.modules.size());
  auto mask_for = [&](int gu, int gv) {
    std::vector<char> mask(dim, 0);
    auto allow_k = [&] {
      for (int j = 0; j < alg.rank(); ++j) mask[j] = 1;
      for (int idx : fd.rk_pos) mask[alg.a_index(idx)] = mask[alg.b_index(idx)] = 1;
    };
    auto allow_module = [&](int mi) {
      for (int idx : fd.modules[mi].basis_indices) mask[idx] = 1;
    };
    if (gu < 0 && gv < 0) {
      allow_k();
      return mask;
    }
    if (gu < 0 || gv < 0) {
      allow_module(gu < 0 ? gv : gu);
      return mask;
    }
    // [m_xi, m_eta]: modules with t-roots xi+eta, xi-eta, eta-xi (plus k when xi = eta)
    const TRoot& xi = fd.modules[gu].troot;
    const TRoot& eta = fd.modules[gv].troot;
    auto add_if_module = [&](const TRoot& t) {
      for (int mi = 0; mi < q; ++mi)
        if (fd.modules[mi].troot == t) allow_module(mi);
    };
    TRoot sum, diff1, diff2;
    for (std::size_t i = 0; i < xi.c.size(); ++i) {
      sum.c.push_back(xi.c[i] + eta.c[i]);
      diff1.c.push_back(xi.c[i] - eta.c[i]);
      diff2.c.push_back(eta.c[i] - xi.c[i]);
    }
    add_if_module(sum);
    add_if_module(diff1);
    add_if_module(diff2);
    if (xi == eta) allow_k();
    return mask;
  };

  std::map<std::pair<int, int>, std::vector<char>> masks;
  for (int gu = -1; gu < q; ++gu)
    for (int gv = -1; gv < q; ++gv) masks[{gu, gv}] = mask_for(gu, gv);

  const long total = static_cast<long>(dim) * dim;
  auto check_pair = [&](long t) -> bool {
    const int i = static_cast<int>(t / dim), j = static_cast<int>(t % dim);
    const LieElement br = alg.bracket(alg.basis_element(i), alg.basis_element(j));
    const QVec v = alg.coords(br);
    const auto& mask = masks.at({group[i], group[j]});
    for (int k = 0; k < dim; ++k)
      if (v[k] != 0 && !mask[k]) return false;
    return true;
  };

  long bad = -1;
  if (mode == ExecMode::Serial) {
    for (long t = 0; t < total && bad < 0; ++t)
      if (!check_pair(t)) bad = t;
  } else {
    long best = LONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
#endif
    for (long t = 0; t < total; ++t)
      if (!check_pair(t) && t < best) best = t;
    if (best != LONG_MAX) bad = best;
  }

  StructureReport rep;
  rep.pairs_checked = total;
  if (bad >= 0) {
    rep.ok = false;
    const int i = static_cast<int>(bad / dim), j = static_cast<int>(bad % dim);
    std::ostringstream os;
    os << "bracket [" << alg.basis_name(i) << ", " << alg.basis_name(j)
       << "] leaves its allowed summands";
    rep.counterexample = os.str();
  }
  return rep;
}

}  // namespace liego
