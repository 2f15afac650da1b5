#include "liego/chevalley.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace liego {

namespace {

std::atomic<std::uint32_t> g_next_id{1000};

void trim(std::map<Root, Rat>& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second == 0)
      it = m.erase(it);
    else
      ++it;
  }
}

void check_ids(const ChevalleyElement& x, const ChevalleyElement& y) {
  if (x.algebra_id != y.algebra_id) throw std::invalid_argument("elements from different algebras");
}

int to_int(const Rat& v, const char* what) {
  if (v.get_den() != 1) throw std::logic_error(std::string("expected integer value in ") + what);
  return static_cast<int>(v.get_num().get_si());
}

}  // namespace

ChevalleyElement operator+(const ChevalleyElement& x, const ChevalleyElement& y) {
  check_ids(x, y);
  ChevalleyElement r = x;
  for (std::size_t i = 0; i < r.h.size(); ++i) r.h[i] += y.h[i];
  for (const auto& [root, c] : y.e) r.e[root] += c;
  trim(r.e);
  return r;
}

ChevalleyElement operator-(const ChevalleyElement& x, const ChevalleyElement& y) { return x + (Rat(-1)) * y; }

ChevalleyElement operator*(const Rat& c, const ChevalleyElement& x) {
  ChevalleyElement r = x;
  for (auto& v : r.h) v *= c;
  for (auto& [root, v] : r.e) v *= c;
  trim(r.e);
  return r;
}

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)), id_(g_next_id.fetch_add(1)) {
  build_constants();
}

bool ChevalleyAlgebra::has_pair(const Root& a, const Root& b) const { return n_.count({a, b}) > 0; }

int ChevalleyAlgebra::n(const Root& a, const Root& b) const {
  auto it = n_.find({a, b});
  if (it == n_.end()) throw std::invalid_argument("structure constant requested for a pair with sum outside R");
  return it->second;
}

void ChevalleyAlgebra::build_constants() {
  const auto& pos = rs_.positive_roots();
  const int npos = rs_.num_positive();

  // Both-positive constants, filled in increasing height of the sum.
  std::map<std::pair<Root, Root>, int> npp;

  // Signed lookup on top of npp; every case reduces to a both-positive pair
  // whose sum has smaller height, so the height recursion below is sound.
  auto n_of = [&](auto&& self, const Root& a, const Root& b) -> int {
    const bool ap = a.is_positive(), bp = b.is_positive();
    if (ap && bp) return npp.at({a, b});
    if (!ap && !bp) return -self(self, -a, -b);
    if (!ap && bp) return -self(self, b, a);
    // a positive, b negative
    const Root sigma = a + b;
    const Root bneg = -b;
    if (sigma.is_positive()) {
      const Rat v = -(rs_.pairing(sigma, sigma) / rs_.pairing(a, a)) * Rat(self(self, bneg, sigma));
      return to_int(v, "structure constant reduction");
    }
    const Root sp = -sigma;
    const Rat v = -(rs_.pairing(sigma, sigma) / rs_.pairing(bneg, bneg)) * Rat(self(self, a, sp));
    return to_int(v, "structure constant reduction");
  };

  auto string_p = [&](const Root& alpha, const Root& beta) {
    return rs_.root_string(alpha, beta).first;
  };

  std::vector<int> by_height(npos);
  for (int i = 0; i < npos; ++i) by_height[i] = i;
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](int i, int j) { return pos[i].height() < pos[j].height(); });

  for (int gi : by_height) {
    const Root& gamma = pos[gi];
    if (gamma.height() < 2) continue;

    // special pairs summing to gamma, in enumeration order of the first leg
    std::vector<std::pair<Root, Root>> pairs;
    for (const Root& eps : pos) {
      const Root eta = gamma - eps;
      if (eta.is_positive() && rs_.contains(eta)) pairs.push_back({eps, eta});
    }
    if (pairs.empty()) throw std::logic_error("non-simple positive root with no special pair");

    const Root& eps = pairs.front().first;  // designated (extraspecial) pair
    const Root& eta = pairs.front().second;
    const int n_des = string_p(eps, eta) + 1;
    npp[{eps, eta}] = n_des;
    npp[{eta, eps}] = -n_des;

    const Rat len_gamma = rs_.pairing(gamma, gamma);
    for (const auto& [alpha, beta] : pairs) {
      if (alpha == eps) continue;  // covers the designated pair and its swap
      if (npp.count({alpha, beta})) continue;
      Rat t2 = 0, t3 = 0;
      if (rs_.contains(eta - beta)) t2 = Rat(n_of(n_of, eta, -beta)) * Rat(n_of(n_of, eta - beta, eps));
      if (rs_.contains(eps - beta)) t3 = Rat(n_of(n_of, -beta, eps)) * Rat(n_of(n_of, eps - beta, eta));
      const Rat v = -(len_gamma / rs_.pairing(alpha, alpha)) * (t2 + t3) / Rat(n_des);
      const int nval = to_int(v, "special-pair constant");
      if (std::abs(nval) != string_p(alpha, beta) + 1)
        throw std::logic_error("structure constant magnitude violates p+1 for " + alpha.str() + "," + beta.str());
      npp[{alpha, beta}] = nval;
      npp[{beta, alpha}] = -nval;
    }
  }

  // Close the table over all signed pairs.
  std::vector<Root> all;
  for (const Root& r : pos) {
    all.push_back(r);
    all.push_back(-r);
  }
  for (const Root& a : all)
    for (const Root& b : all) {
      if ((a + b).is_zero()) continue;
      if (!rs_.contains(a + b)) continue;
      n_[{a, b}] = n_of(n_of, a, b);
    }

  // Table-wide invariants.
  for (const auto& [key, val] : n_) {
    const auto& [a, b] = key;
    if (val == 0) throw std::logic_error("zero structure constant stored");
    if (n_.at({b, a}) != -val) throw std::logic_error("antisymmetry violated in N-table");
    if (n_.at({-a, -b}) != -val) throw std::logic_error("negation identity violated in N-table");
    if (std::abs(val) != string_p(a, b) + 1) throw std::logic_error("|N| != p+1 in N-table");
  }
}

ChevalleyElement ChevalleyAlgebra::zero() const {
  ChevalleyElement x;
  x.algebra_id = id_;
  x.h.assign(rank(), 0);
  return x;
}

ChevalleyElement ChevalleyAlgebra::h_element(QVec coords) const {
  if (static_cast<int>(coords.size()) != rank()) throw std::invalid_argument("h_element: wrong length");
  ChevalleyElement x = zero();
  x.h = std::move(coords);
  return x;
}

ChevalleyElement ChevalleyAlgebra::coroot_element(const Root& alpha) const {
  const bool neg = !alpha.is_positive();
  const auto cv = rs_.coroot(neg ? -alpha : alpha);
  ChevalleyElement x = zero();
  for (int i = 0; i < rank(); ++i) x.h[i] = neg ? -cv[i] : cv[i];
  return x;
}

ChevalleyElement ChevalleyAlgebra::e_element(const Root& alpha, const Rat& coeff) const {
  if (!rs_.contains(alpha)) throw std::invalid_argument("e_element: not a root");
  ChevalleyElement x = zero();
  if (coeff != 0) x.e[alpha] = coeff;
  return x;
}

ChevalleyElement ChevalleyAlgebra::basis_element(int idx) const {
  const int l = rank(), npos = rs_.num_positive();
  if (idx < 0 || idx >= dim()) throw std::out_of_range("basis index");
  if (idx < l) {
    QVec v(l, 0);
    v[idx] = 1;
    return h_element(std::move(v));
  }
  if (idx < l + npos) return e_element(rs_.positive_roots()[idx - l]);
  return e_element(-rs_.positive_roots()[idx - l - npos]);
}

std::string ChevalleyAlgebra::basis_name(int idx) const {
  const int l = rank(), npos = rs_.num_positive();
  if (idx < l) return "h" + std::to_string(idx + 1);
  if (idx < l + npos) return "e" + rs_.positive_roots()[idx - l].str();
  return "e" + (-rs_.positive_roots()[idx - l - npos]).str();
}

Rat ChevalleyAlgebra::coeff(const ChevalleyElement& x, int idx) const {
  const int l = rank(), npos = rs_.num_positive();
  if (idx < l) return x.h[idx];
  const Root r = idx < l + npos ? rs_.positive_roots()[idx - l] : -rs_.positive_roots()[idx - l - npos];
  auto it = x.e.find(r);
  return it == x.e.end() ? Rat(0) : it->second;
}

QVec ChevalleyAlgebra::coords(const ChevalleyElement& x) const {
  check_same_algebra(x);
  QVec v(dim());
  for (int i = 0; i < dim(); ++i) v[i] = coeff(x, i);
  return v;
}

void ChevalleyAlgebra::check_same_algebra(const ChevalleyElement& x) const {
  if (x.algebra_id != id_) throw std::invalid_argument("element does not belong to this algebra");
}

ChevalleyElement ChevalleyAlgebra::bracket(const ChevalleyElement& x, const ChevalleyElement& y) const {
  check_same_algebra(x);
  check_same_algebra(y);
  ChevalleyElement r = zero();

  // [h, e_b] = <b, h> e_b
  for (const auto& [beta, c] : y.e) {
    Rat w = 0;
    for (int i = 0; i < rank(); ++i)
      if (x.h[i] != 0) w += x.h[i] * Rat(rs_.cartan_int_simple(beta, i));
    if (w != 0) r.e[beta] += w * c;
  }
  for (const auto& [alpha, c] : x.e) {
    Rat w = 0;
    for (int i = 0; i < rank(); ++i)
      if (y.h[i] != 0) w += y.h[i] * Rat(rs_.cartan_int_simple(alpha, i));
    if (w != 0) r.e[alpha] -= w * c;
  }

  for (const auto& [alpha, ca] : x.e) {
    for (const auto& [beta, cb] : y.e) {
      const Root sum = alpha + beta;
      const Rat f = ca * cb;
      if (sum.is_zero()) {
        // [e_a, e_{-a}] = coroot of a (sign included)
        const bool neg = !alpha.is_positive();
        const auto cv = rs_.coroot(neg ? -alpha : alpha);
        for (int i = 0; i < rank(); ++i) r.h[i] += f * Rat(neg ? -cv[i] : cv[i]);
      } else if (rs_.contains(sum)) {
        r.e[sum] += f * Rat(n(alpha, beta));
      }
    }
  }

  trim(r.e);
  return r;
}

Rat ChevalleyAlgebra::killing(const ChevalleyElement& x, const ChevalleyElement& y) const {
  check_same_algebra(x);
  check_same_algebra(y);
  Rat tr = 0;
  for (int idx = 0; idx < dim(); ++idx) {
    const ChevalleyElement b = basis_element(idx);
    tr += coeff(bracket(x, bracket(y, b)), idx);
  }
  return tr;
}

}  // namespace liego
