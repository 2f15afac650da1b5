#include "liego/rational.hpp"

#include <cctype>
#include <sstream>

namespace liego {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational: '" + s + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("malformed rational: '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("malformed rational: '" + s + "'");
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(mpz_class(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  Rat r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string qvec_str(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace liego
