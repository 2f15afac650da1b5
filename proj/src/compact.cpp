#include "liego/compact.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "liego/linsolve.hpp"

namespace liego {

namespace {

std::atomic<std::uint32_t> g_next_id{5000};

void trim(std::map<Root, Rat>& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second == 0)
      it = m.erase(it);
    else
      ++it;
  }
}

void check_ids(const LieElement& x, const LieElement& y) {
  if (x.algebra_id != y.algebra_id) throw std::invalid_argument("elements from different algebras");
}

}  // namespace

bool LieElement::is_zero() const {
  return a.empty() && b.empty() && std::all_of(torus.begin(), torus.end(), [](const Rat& r) { return r == 0; });
}

LieElement operator+(const LieElement& x, const LieElement& y) {
  check_ids(x, y);
  LieElement r = x;
  for (std::size_t i = 0; i < r.torus.size(); ++i) r.torus[i] += y.torus[i];
  for (const auto& [root, c] : y.a) r.a[root] += c;
  for (const auto& [root, c] : y.b) r.b[root] += c;
  trim(r.a);
  trim(r.b);
  return r;
}

LieElement operator-(const LieElement& x, const LieElement& y) { return x + Rat(-1) * y; }

LieElement operator*(const Rat& c, const LieElement& x) {
  LieElement r = x;
  for (auto& v : r.torus) v *= c;
  for (auto& [root, v] : r.a) v *= c;
  for (auto& [root, v] : r.b) v *= c;
  trim(r.a);
  trim(r.b);
  return r;
}

CompactAlgebra::CompactAlgebra(std::shared_ptr<const ChevalleyAlgebra> chev)
    : chev_(std::move(chev)), id_(g_next_id.fetch_add(1)) {
  const int l = rank();
  gram_.assign(l, QVec(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j <= i; ++j)
      gram_[i][j] = gram_[j][i] = chev_->killing(chev_->basis_element(i), chev_->basis_element(j));

  root_weight_.resize(num_positive());
  for (int k = 0; k < num_positive(); ++k) {
    const Root& alpha = roots().positive_roots()[k];
    // B(A_a, A_a) = B(B_a, B_a) = 2 kappa(e_a, e_{-a})
    root_weight_[k] = 2 * chev_->killing(chev_->e_element(alpha), chev_->e_element(-alpha));
    if (root_weight_[k] <= 0) throw std::logic_error("non-positive root weight in B");
  }
}

LieElement CompactAlgebra::zero() const {
  LieElement x;
  x.algebra_id = id_;
  x.torus.assign(rank(), 0);
  return x;
}

LieElement CompactAlgebra::torus_element(QVec coords) const {
  if (static_cast<int>(coords.size()) != rank()) throw std::invalid_argument("torus_element: wrong length");
  LieElement x = zero();
  x.torus = std::move(coords);
  return x;
}

LieElement CompactAlgebra::coroot_torus_element(const Root& alpha) const {
  const auto cv = roots().coroot(alpha);
  LieElement x = zero();
  for (int i = 0; i < rank(); ++i) x.torus[i] = cv[i];
  return x;
}

LieElement CompactAlgebra::a_element(const Root& alpha, const Rat& c) const {
  LieElement x = zero();
  if (!alpha.is_positive()) {
    if (c != 0) x.a[-alpha] = -c;  // A_{-g} = -A_g
    return x;
  }
  if (roots().pos_index(alpha) < 0) throw std::invalid_argument("a_element: not a root");
  if (c != 0) x.a[alpha] = c;
  return x;
}

LieElement CompactAlgebra::b_element(const Root& alpha, const Rat& c) const {
  LieElement x = zero();
  const Root p = alpha.is_positive() ? alpha : -alpha;  // B_{-g} = B_g
  if (roots().pos_index(p) < 0) throw std::invalid_argument("b_element: not a root");
  if (c != 0) x.b[p] = c;
  return x;
}

LieElement CompactAlgebra::basis_element(int idx) const {
  const int l = rank(), npos = num_positive();
  if (idx < 0 || idx >= dim()) throw std::out_of_range("basis index");
  if (idx < l) {
    QVec v(l, 0);
    v[idx] = 1;
    return torus_element(std::move(v));
  }
  if (idx < l + npos) return a_element(roots().positive_roots()[idx - l]);
  return b_element(roots().positive_roots()[idx - l - npos]);
}

std::string CompactAlgebra::basis_name(int idx) const {
  const int l = rank(), npos = num_positive();
  if (idx < l) return "ih" + std::to_string(idx + 1);
  if (idx < l + npos) return "A" + roots().positive_roots()[idx - l].str();
  return "B" + roots().positive_roots()[idx - l - npos].str();
}

QVec CompactAlgebra::coords(const LieElement& x) const {
  check_same_algebra(x);
  QVec v(dim(), 0);
  for (int i = 0; i < rank(); ++i) v[i] = x.torus[i];
  for (const auto& [root, c] : x.a) v[a_index(roots().pos_index(root))] = c;
  for (const auto& [root, c] : x.b) v[b_index(roots().pos_index(root))] = c;
  return v;
}

LieElement CompactAlgebra::from_coords(const QVec& v) const {
  if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("from_coords: wrong length");
  LieElement x = zero();
  for (int i = 0; i < rank(); ++i) x.torus[i] = v[i];
  for (int k = 0; k < num_positive(); ++k) {
    if (v[a_index(k)] != 0) x.a[roots().positive_roots()[k]] = v[a_index(k)];
    if (v[b_index(k)] != 0) x.b[roots().positive_roots()[k]] = v[b_index(k)];
  }
  return x;
}

LieElement CompactAlgebra::random_element(Rng& rng) const {
  QVec v(dim());
  for (auto& c : v) c = rng.next_rat(5, 4);
  return from_coords(v);
}

void CompactAlgebra::check_same_algebra(const LieElement& x) const {
  if (x.algebra_id != id_) throw std::invalid_argument("element does not belong to this algebra");
}

namespace {

// Accumulate c * A_{gamma} (resp. c * B_{gamma}) with the negative-root
// reduction applied.
void add_a(std::map<Root, Rat>& acc, const Root& gamma, const Rat& c) {
  if (gamma.is_positive())
    acc[gamma] += c;
  else
    acc[-gamma] -= c;
}

void add_b(std::map<Root, Rat>& acc, const Root& gamma, const Rat& c) {
  if (gamma.is_positive())
    acc[gamma] += c;
  else
    acc[-gamma] += c;
}

}  // namespace

LieElement CompactAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  check_same_algebra(x);
  check_same_algebra(y);
  const ChevalleyAlgebra& g = *chev_;
  const RootSystem& rs = roots();
  LieElement r = zero();

  auto weight = [&](const Root& beta, const QVec& torus) {
    Rat w = 0;
    for (int i = 0; i < rank(); ++i)
      if (torus[i] != 0) w += torus[i] * Rat(rs.cartan_int_simple(beta, i));
    return w;
  };

  // [i h, A_b] = b(h) B_b ; [i h, B_b] = -b(h) A_b
  for (const auto& [beta, c] : y.a) {
    const Rat w = weight(beta, x.torus);
    if (w != 0) r.b[beta] += w * c;
  }
  for (const auto& [beta, c] : y.b) {
    const Rat w = weight(beta, x.torus);
    if (w != 0) r.a[beta] -= w * c;
  }
  for (const auto& [alpha, c] : x.a) {
    const Rat w = weight(alpha, y.torus);
    if (w != 0) r.b[alpha] -= w * c;
  }
  for (const auto& [alpha, c] : x.b) {
    const Rat w = weight(alpha, y.torus);
    if (w != 0) r.a[alpha] += w * c;
  }

  auto add_coroot = [&](const Root& alpha, const Rat& f) {
    const auto cv = rs.coroot(alpha);
    for (int i = 0; i < rank(); ++i) r.torus[i] += f * Rat(cv[i]);
  };

  for (const auto& [alpha, ca] : x.a) {
    for (const auto& [beta, cb] : y.a) {
      if (alpha == beta) continue;  // [A_a, A_a] = 0
      const Rat f = ca * cb;
      if (rs.contains(alpha + beta)) add_a(r.a, alpha + beta, f * Rat(g.n(alpha, beta)));
      if (rs.contains(alpha - beta)) add_a(r.a, alpha - beta, -f * Rat(g.n(alpha, -beta)));
    }
    for (const auto& [beta, cb] : y.b) {
      const Rat f = ca * cb;
      if (alpha == beta) {
        add_coroot(alpha, 2 * f);  // [A_a, B_a] = 2 i h_a^vee
        continue;
      }
      if (rs.contains(alpha + beta)) add_b(r.b, alpha + beta, f * Rat(g.n(alpha, beta)));
      if (rs.contains(alpha - beta)) add_b(r.b, alpha - beta, f * Rat(g.n(alpha, -beta)));
    }
  }
  for (const auto& [alpha, ca] : x.b) {
    for (const auto& [beta, cb] : y.a) {
      const Rat f = ca * cb;
      if (alpha == beta) {
        add_coroot(alpha, -2 * f);
        continue;
      }
      // [B_a, A_b] = -[A_b, B_a]
      if (rs.contains(beta + alpha)) add_b(r.b, beta + alpha, -f * Rat(g.n(beta, alpha)));
      if (rs.contains(beta - alpha)) add_b(r.b, beta - alpha, -f * Rat(g.n(beta, -alpha)));
    }
    for (const auto& [beta, cb] : y.b) {
      if (alpha == beta) continue;
      const Rat f = ca * cb;
      if (rs.contains(alpha + beta)) add_a(r.a, alpha + beta, -f * Rat(g.n(alpha, beta)));
      if (rs.contains(alpha - beta)) add_a(r.a, alpha - beta, -f * Rat(g.n(alpha, -beta)));
    }
  }

  trim(r.a);
  trim(r.b);
  return r;
}

std::pair<ChevalleyElement, ChevalleyElement> CompactAlgebra::complexify(const LieElement& x) const {
  check_same_algebra(x);
  // x = sum t_j (i h_j) + sum a_g A_g + sum b_g B_g
  //   = [sum a_g (e_g - e_{-g})] + i [sum t_j h_j + sum b_g (e_g + e_{-g})]
  ChevalleyElement re = chev_->zero(), im = chev_->zero();
  for (int i = 0; i < rank(); ++i) im.h[i] = x.torus[i];
  for (const auto& [root, c] : x.a) {
    re.e[root] += c;
    re.e[-root] -= c;
  }
  for (const auto& [root, c] : x.b) {
    im.e[root] += c;
    im.e[-root] += c;
  }
  return {re, im};
}

LieElement CompactAlgebra::realify(const ChevalleyElement& re, const ChevalleyElement& im) const {
  chev_->check_same_algebra(re);
  chev_->check_same_algebra(im);
  LieElement x = zero();
  for (int i = 0; i < rank(); ++i) {
    if (re.h[i] != 0) throw std::invalid_argument("realify: element is not conjugation-stable (real torus part)");
    x.torus[i] = im.h[i];
  }
  for (const Root& p : roots().positive_roots()) {
    auto at = [](const ChevalleyElement& z, const Root& r) {
      auto it = z.e.find(r);
      return it == z.e.end() ? Rat(0) : it->second;
    };
    const Rat rp = at(re, p), rm = at(re, -p);
    const Rat ip = at(im, p), im_ = at(im, -p);
    if (rp != -rm || ip != im_)
      throw std::invalid_argument("realify: element is not conjugation-stable at root " + p.str());
    if (rp != 0) x.a[p] = rp;
    if (ip != 0) x.b[p] = ip;
  }
  return x;
}

LieElement CompactAlgebra::bracket_via_complexification(const LieElement& x, const LieElement& y) const {
  const auto [xr, xi] = complexify(x);
  const auto [yr, yi] = complexify(y);
  // [xr + i xi, yr + i yi] = ([xr,yr] - [xi,yi]) + i ([xr,yi] + [xi,yr])
  const ChevalleyElement re = chev_->bracket(xr, yr) - chev_->bracket(xi, yi);
  const ChevalleyElement im = chev_->bracket(xr, yi) + chev_->bracket(xi, yr);
  return realify(re, im);
}

Rat CompactAlgebra::form_b(const LieElement& x, const LieElement& y) const {
  check_same_algebra(x);
  check_same_algebra(y);
  Rat s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x.torus[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (y.torus[j] != 0) s += x.torus[i] * y.torus[j] * gram_[i][j];
  }
  for (const auto& [root, c] : x.a) {
    auto it = y.a.find(root);
    if (it != y.a.end()) s += c * it->second * root_weight_[roots().pos_index(root)];
  }
  for (const auto& [root, c] : x.b) {
    auto it = y.b.find(root);
    if (it != y.b.end()) s += c * it->second * root_weight_[roots().pos_index(root)];
  }
  return s;
}

const Rat& CompactAlgebra::root_weight(int pos_idx) const {
  if (pos_idx < 0 || pos_idx >= num_positive()) throw std::out_of_range("root weight index");
  return root_weight_[pos_idx];
}

LieElement CompactAlgebra::project(const LieElement& x, const std::vector<int>& indices) const {
  check_same_algebra(x);
  const int l = rank();
  LieElement r = zero();
  std::vector<int> torus_sel;
  for (int idx : indices) {
    if (idx < 0 || idx >= dim()) throw std::out_of_range("projection index out of range");
    if (idx < l) {
      torus_sel.push_back(idx);
      continue;
    }
    // Root-vector directions are mutually B-orthogonal and orthogonal to the
    // torus, so projection there is coefficient selection.
    const int npos = num_positive();
    const int k = idx < l + npos ? idx - l : idx - l - npos;
    const Root& root = roots().positive_roots()[k];
    if (idx < l + npos) {
      auto it = x.a.find(root);
      if (it != x.a.end()) r.a[root] = it->second;
    } else {
      auto it = x.b.find(root);
      if (it != x.b.end()) r.b[root] = it->second;
    }
  }
  if (!torus_sel.empty()) {
    if (static_cast<int>(torus_sel.size()) == l) {
      r.torus = x.torus;
    } else {
      // The torus Gram block is not diagonal: solve the normal equations on
      // the selected sub-block (exact, PD => unique).
      const int k = static_cast<int>(torus_sel.size());
      QMat g(k, QVec(k));
      QVec rhs(k, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) g[i][j] = gram_[torus_sel[i]][torus_sel[j]];
        for (int j2 = 0; j2 < l; ++j2)
          if (x.torus[j2] != 0) rhs[i] += gram_[torus_sel[i]][j2] * x.torus[j2];
      }
      const auto sol = solve_exact(g, rhs);
      if (!sol.solvable) throw std::logic_error("degenerate torus Gram block");
      for (int i = 0; i < k; ++i) r.torus[torus_sel[i]] = sol.solution[i];
    }
  }
  return r;
}

}  // namespace liego
