#ifndef MOFLOW_RATIONAL_HPP
#define MOFLOW_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace moflow {

// Exact arithmetic throughout: all cost/weight/geometry computations use
// GMP rationals, kept in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

//! Parses "p" or "p/q" (q > 0). Throws std::invalid_argument on bad input.
Rational rational_from_string(const std::string& text);

//! Lowest-terms text form: "p/q", or "p" when the value is integral.
std::string rational_to_string(const Rational& value);

//! Comma-joined rational components.
std::string rationals_to_string(const std::vector<Rational>& values,
                                char separator = ',');

//! Scales a rational vector to the unique coprime integer vector with the
//! same direction. The zero vector is returned unchanged.
std::vector<Rational> scale_to_coprime_integers(
    const std::vector<Rational>& values);

}  // namespace moflow

#endif
