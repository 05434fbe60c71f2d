#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace g2hom {

using Integer = boost::multiprecision::cpp_int;

// Exact arbitrary-precision fraction, always reduced, denominator > 0.
// The only scalar type in the core; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline int sign(const Rational& q) { return q.sign(); }

// Largest integer r with r^n <= x, for x >= 0.
inline Integer floor_nth_root(const Integer& x, unsigned n) {
  if (x < 0) throw std::domain_error("floor_nth_root of negative value");
  if (x <= 1 || n == 1) return x;
  Integer lo = 0, hi = x + 1;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, n) <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// Exact n-th root if it exists in Q, otherwise nullopt.
// Negative inputs allowed for odd n.
inline std::optional<Rational> exact_nth_root(const Rational& q, unsigned n) {
  if (n == 0) throw std::domain_error("0th root");
  bool neg = q < 0;
  if (neg && n % 2 == 0) return std::nullopt;
  Integer num = boost::multiprecision::abs(numerator(q));
  Integer den = denominator(q);
  Integer rn = floor_nth_root(num, n), rd = floor_nth_root(den, n);
  if (boost::multiprecision::pow(rn, n) != num) return std::nullopt;
  if (boost::multiprecision::pow(rd, n) != den) return std::nullopt;
  Rational r(rn, rd);
  return neg ? Rational(-r) : r;
}

inline std::optional<Rational> exact_sqrt(const Rational& q) {
  return exact_nth_root(q, 2);
}

}  // namespace g2hom
