#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace liego {

// Exact rational scalar. Every computation in this project is exact; there are
// no tolerances anywhere.
using Rat = mpq_class;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// Renders p/q in lowest terms, plain p when q == 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input or q == 0.
Rat rat_parse(const std::string& s);

Rat make_rat(long num, long den);

std::string qvec_str(const QVec& v);

// Deterministic random source. std::uniform_int_distribution is not pinned by
// the standard, so sampling is done by hand on top of mt19937_64 (which is).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant here.
  long next_in(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::next_in: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  // Rational with |value| <= max_abs and denominator <= max_den.
  Rat next_rat(long max_abs, long max_den) {
    const long den = next_in(1, max_den);
    const long num = next_in(-max_abs * den, max_abs * den);
    return make_rat(num, den);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace liego
