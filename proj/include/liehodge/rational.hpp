#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace liehodge {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense vector of exact rationals.
using RatVector = std::vector<Rational>;

/// Integer vector, used for root-lattice coordinates.
using IntVector = std::vector<int>;

/// "num/den" (or "num" when the denominator is 1).
std::string to_string(const Rational& q);

/// Always "num/den", as used in JSON output.
std::string to_fraction_string(const Rational& q);

/// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline RatVector to_rational(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace liehodge
