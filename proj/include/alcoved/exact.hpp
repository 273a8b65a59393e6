#pragma once

// Exact arithmetic helpers shared by the geometric oracle and the
// double-description routine. Everything here is integer or rational;
// nothing in the oracle path touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcoved {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

namespace exact {

/// Narrows a 128-bit intermediate back to 64 bits, throwing on overflow.
inline std::int64_t narrow(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN)) {
    throw std::overflow_error("exact: 64-bit overflow in integer kernel");
  }
  return static_cast<std::int64_t>(v);
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Divides out the gcd of all entries. The zero vector is left unchanged.
inline void make_primitive(IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

inline __int128 dot128(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

inline std::int64_t dot(const IntVector& a, const IntVector& b) { return narrow(dot128(a, b)); }

inline bool is_zero(const IntVector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

/// Clears denominators and divides by the content: the primitive integer
/// vector positively parallel to `v`.
IntVector primitive_integer(const RationalVector& v);

/// Rank of a rational matrix given as a list of rows.
std::size_t rank(std::vector<RationalVector> rows);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& rows);

/// Basis of the null space {x : rows * x = 0}, one primitive integer vector per
/// free column.
std::vector<IntVector> null_space(std::vector<RationalVector> rows, std::size_t cols);

RationalVector to_rational(const IntVector& v);

/// "p/q" with q always printed, e.g. "3/4", "-1/1", "0/1".
std::string format_rational(const Rational& q);

/// Accepts "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace exact
}  // namespace alcoved
