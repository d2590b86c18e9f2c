#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace rcv {

/// Exact vote arithmetic. Every tally, transfer value and quota is kept as a
/// GMP rational so that no rounding ever decides an elimination.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

/// Largest integer <= r.
std::int64_t floor_to_int(const Rational& r);

/// Renders r with exactly `places` digits after the point, truncating toward
/// zero ("-0.12345" for tiny negatives keeps its sign).
std::string to_decimal(const Rational& r, int places = 5);

/// Rounds r half away from zero at `places` decimals and returns it as double.
double round_to(const Rational& r, int places);

/// Smallest multiple of 1/den that is >= r.
Rational ceil_to_grid(const Rational& r, const mpz_class& den);

/// Parses "12", "-3/4" or "0.125" into an exact rational. Throws
/// std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

}  // namespace rcv
