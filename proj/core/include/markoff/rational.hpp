#ifndef MARKOFF_RATIONAL_HPP
#define MARKOFF_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace markoff {

// Exact rational, always canonical: lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p", optional leading '-'. Throws std::invalid_argument
// on malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Decimal approximation with 6 significant digits, for comparison with
// e-notation values. Large magnitudes render as mantissa e exponent.
std::string approx_string(const Rational& q);

}  // namespace markoff

#endif
