#ifndef CLUSTERFOLD_RATIONAL_HPP
#define CLUSTERFOLD_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace clusterfold {

using Rational = mpq_class;
using Integer = mpz_class;

// Exact fraction string: "3", "-3", "3/2". Never decimal.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace clusterfold

#endif
