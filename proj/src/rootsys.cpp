#include "liego/rootsys.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

namespace liego {

namespace {
std::atomic<std::uint32_t> g_next_id{1};
}

LieType lie_type_from(char c) {
  switch (c) {
    case 'A': return LieType::A;
    case 'B': return LieType::B;
    case 'C': return LieType::C;
    case 'D': return LieType::D;
    default: throw std::invalid_argument(std::string("unsupported Lie type '") + c + "' (expected A, B, C or D)");
  }
}

std::string type_rank_str(LieType t, int rank) {
  return std::string(1, static_cast<char>(t)) + std::to_string(rank);
}

bool Root::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Root::is_positive() const {
  bool nonzero = false;
  for (int x : c) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

int Root::height() const {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

std::string Root::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << " ";
    os << c[i];
  }
  os << "]";
  return os.str();
}

Root Root::operator-() const {
  Root r = *this;
  for (int& x : r.c) x = -x;
  return r;
}

Root operator+(const Root& x, const Root& y) {
  if (x.c.size() != y.c.size()) throw std::invalid_argument("root dimension mismatch");
  Root r = x;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
  return r;
}

Root operator-(const Root& x, const Root& y) { return x + (-y); }

long RootSystem::expected_positive_count(LieType type, int rank) {
  const long l = rank;
  switch (type) {
    case LieType::A: return l * (l + 1) / 2;
    case LieType::B:
    case LieType::C: return l * l;
    case LieType::D: return l * (l - 1);
  }
  return 0;
}

namespace {

CartanMatrix make_cartan(LieType type, int l) {
  CartanMatrix cm;
  cm.type = type;
  cm.rank = l;
  cm.a.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) cm.a[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {
    cm.a[i][j] = aij;
    cm.a[j][i] = aji;
  };
  switch (type) {
    case LieType::A:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -1, -1);
      break;
    case LieType::B:
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1, -1);
      // alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2
      if (l >= 2) link(l - 2, l - 1, -2, -1);
      break;
    case LieType::C:
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1, -1);
      // alpha_l long: <alpha_l, alpha_{l-1}^vee> = -2
      if (l >= 2) link(l - 2, l - 1, -1, -2);
      break;
    case LieType::D:
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1, -1);
      if (l >= 3) link(l - 3, l - 1, -1, -1);
      break;
  }
  return cm;
}

// (alpha_i, alpha_i)/2 per simple root, long roots normalized to length 2.
QVec make_half_lengths(LieType type, int l) {
  QVec d(l, 1);
  switch (type) {
    case LieType::A:
    case LieType::D: break;
    case LieType::B:
      if (l >= 2) d[l - 1] = make_rat(1, 2);
      break;
    case LieType::C:
      if (l >= 2)
        for (int i = 0; i + 1 < l; ++i) d[i] = make_rat(1, 2);
      break;
  }
  return d;
}

std::string coincidence(LieType type, int l) {
  if (type == LieType::B && l == 1) return "B1 coincides with A1";
  if (type == LieType::C && l == 1) return "C1 coincides with A1";
  if (type == LieType::C && l == 2) return "C2 coincides with B2";
  if (type == LieType::D && l == 3) return "D3 coincides with A3";
  return "";
}

}  // namespace

RootSystem RootSystem::build(LieType type, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (type == LieType::D && rank < 3)
    throw std::invalid_argument(rank == 2 ? "D2 is not simple (A1 x A1); rejected"
                                          : "D1 is not a simple root system");
  RootSystem rs;
  rs.cartan_ = make_cartan(type, rank);
  rs.half_lengths_ = make_half_lengths(type, rank);
  rs.note_ = coincidence(type, rank);
  rs.id_ = g_next_id.fetch_add(1);
  rs.enumerate();
  rs.check_closure();
  return rs;
}

void RootSystem::enumerate() {
  const int l = rank();
  std::set<Root> pos;
  std::vector<Root> frontier;
  for (int i = 0; i < l; ++i) {
    Root r;
    r.c.assign(l, 0);
    r.c[i] = 1;
    pos.insert(r);
    frontier.push_back(r);
  }
  // Height-by-height closure: alpha + alpha_i is a root iff q > 0 in the
  // alpha_i-string, and p is known because lower heights are complete.
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier) {
      for (int i = 0; i < l; ++i) {
        Root step;
        step.c.assign(l, 0);
        step.c[i] = 1;
        Root cand = r + step;
        if (pos.count(cand)) continue;
        int p = 0;
        Root down = r - step;
        while (down.is_positive() && pos.count(down)) {
          ++p;
          down = down - step;
        }
        const int q = p - cartan_int_simple(r, i);
        if (q > 0) {
          pos.insert(cand);
          next.push_back(cand);
        }
      }
    }
    frontier = std::move(next);
  }

  positive_.clear();
  for (int i = 0; i < l; ++i) {
    Root r;
    r.c.assign(l, 0);
    r.c[i] = 1;
    positive_.push_back(r);
    pos.erase(r);
  }
  positive_.insert(positive_.end(), pos.begin(), pos.end());  // set order = lex

  for (int i = 0; i < static_cast<int>(positive_.size()); ++i) pos_index_[positive_[i]] = i;
  for (const Root& r : positive_) {
    members_.insert(r);
    members_.insert(-r);
  }
  if (static_cast<long>(positive_.size()) != expected_positive_count(type(), l))
    throw std::logic_error("positive root count does not match the closed form for " +
                           type_rank_str(type(), l));
}

void RootSystem::check_closure() const {
  for (const Root& r : members_) {
    for (int i = 0; i < rank(); ++i) {
      Root refl = r;
      const int k = cartan_int_simple(r, i);
      refl.c[i] -= k;  // s_i(r) = r - <r, alpha_i^vee> alpha_i
      if (!members_.count(refl)) throw std::logic_error("root set not closed under simple reflections");
    }
  }
  int count_highest = 0;
  for (const Root& r : positive_) {
    bool highest = true;
    for (int i = 0; i < rank() && highest; ++i) {
      Root step;
      step.c.assign(rank(), 0);
      step.c[i] = 1;
      if (members_.count(r + step)) highest = false;
    }
    if (highest) ++count_highest;
  }
  if (count_highest != 1) throw std::logic_error("expected exactly one highest root");
}

Root RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("simple root index");
  return positive_[i];
}

Root RootSystem::highest_root() const {
  for (const Root& r : positive_) {
    bool highest = true;
    for (int i = 0; i < rank() && highest; ++i) {
      Root step;
      step.c.assign(rank(), 0);
      step.c[i] = 1;
      if (members_.count(r + step)) highest = false;
    }
    if (highest) return r;
  }
  throw std::logic_error("no highest root");
}

bool RootSystem::contains(const Root& r) const {
  if (static_cast<int>(r.c.size()) != rank()) return false;
  return members_.count(r) > 0;
}

int RootSystem::pos_index(const Root& r) const {
  auto it = pos_index_.find(r.is_positive() ? r : -r);
  if (it == pos_index_.end()) return -1;
  return it->second;
}

Rat RootSystem::pairing(const Root& x, const Root& y) const {
  if (static_cast<int>(x.c.size()) != rank() || static_cast<int>(y.c.size()) != rank())
    throw std::invalid_argument("pairing: dimension mismatch");
  // (alpha_i, alpha_j) = a[i][j] * d_j, with d_j = (alpha_j,alpha_j)/2.
  Rat s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (y.c[j] == 0) continue;
      s += Rat(x.c[i]) * Rat(y.c[j]) * Rat(cartan_.a[i][j]) * half_lengths_[j];
    }
  }
  return s;
}

int RootSystem::cartan_int_simple(const Root& beta, int i) const {
  if (static_cast<int>(beta.c.size()) != rank()) throw std::invalid_argument("dimension mismatch");
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += beta.c[j] * cartan_.a[j][i];
  return s;
}

int RootSystem::cartan_int(const Root& beta, const Root& alpha) const {
  const Rat v = 2 * pairing(beta, alpha) / pairing(alpha, alpha);
  if (v.get_den() != 1) throw std::logic_error("non-integral Cartan pairing");
  return static_cast<int>(v.get_num().get_si());
}

std::vector<int> RootSystem::coroot(const Root& alpha) const {
  if (!contains(alpha)) throw std::invalid_argument("coroot of a non-root");
  const Rat len = pairing(alpha, alpha);
  std::vector<int> cv(rank());
  for (int i = 0; i < rank(); ++i) {
    const Rat v = Rat(alpha.c[i]) * 2 * half_lengths_[i] / len;
    if (v.get_den() != 1) throw std::logic_error("non-integral coroot coordinate");
    cv[i] = static_cast<int>(v.get_num().get_si());
  }
  return cv;
}

std::pair<int, int> RootSystem::root_string(const Root& alpha, const Root& beta) const {
  if (!contains(alpha) || !contains(beta)) throw std::invalid_argument("root_string: arguments must be roots");
  if (beta == alpha || beta == -alpha) throw std::invalid_argument("root_string: beta = +-alpha");
  int p = 0;
  Root r = beta - alpha;
  while (contains(r)) {
    ++p;
    r = r - alpha;
  }
  int q = 0;
  r = beta + alpha;
  while (contains(r)) {
    ++q;
    r = r + alpha;
  }
  return {p, q};
}

RootSystem build_root_system(LieType type, int rank) { return RootSystem::build(type, rank); }

}  // namespace liego
