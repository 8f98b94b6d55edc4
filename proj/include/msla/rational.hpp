#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace msla {

// Exact rational scalar. mpq_class keeps lowest terms with positive
// denominator once canonicalized; every producer in this library
// canonicalizes, so equality is plain value equality.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p" or "p/q" in base 10, optional leading '-'. Rejects
// everything else, including a zero denominator.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  for (char c : s) {
    if (c != '-' && c != '/' && (c < '0' || c > '9'))
      throw std::invalid_argument("rational: bad character in '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rational: malformed '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace msla
