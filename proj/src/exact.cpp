#include "alcoved/exact.hpp"

#include <algorithm>
#include <cctype>

namespace alcoved::exact {

IntVector primitive_integer(const RationalVector& v) {
  BigInt lcm = 1;
  for (const auto& q : v) {
    BigInt d = boost::multiprecision::denominator(q);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> scaled;
  scaled.reserve(v.size());
  BigInt g = 0;
  for (const auto& q : v) {
    BigInt s = boost::multiprecision::numerator(q) * (lcm / boost::multiprecision::denominator(q));
    g = boost::multiprecision::gcd(g, s);
    scaled.push_back(s);
  }
  IntVector out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigInt s = g == 0 ? BigInt(0) : scaled[i] / g;
    if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("primitive_integer: entry exceeds 64 bits");
    out[i] = static_cast<std::int64_t>(s);
  }
  return out;
}

std::vector<std::size_t> rref(std::vector<RationalVector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(std::vector<RationalVector> rows) { return rref(rows).size(); }

std::vector<IntVector> null_space(std::vector<RationalVector> rows, std::size_t cols) {
  const auto pivots = rref(rows);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

std::string format_rational(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  const auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("malformed rational: " + text);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rational(BigInt(num), d);
}

}  // namespace alcoved::exact
