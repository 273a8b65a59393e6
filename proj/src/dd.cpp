#include "alcoved/dd.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace alcoved::dd {

namespace {

using Bits = std::vector<std::uint64_t>;

struct Ray {
  IntVector v;
  Bits zero;  // processed rows on which v is tight
};

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// s*x - t*y reduced to a primitive vector.
IntVector combine(__int128 s, const IntVector& x, __int128 t, const IntVector& y) {
  const __int128 s64 = exact::narrow(s);
  const __int128 t64 = exact::narrow(t);
  std::vector<__int128> w(x.size());
  __int128 g = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    w[i] = s64 * x[i] - t64 * y[i];
    g = gcd128(g, w[i]);
  }
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = exact::narrow(g > 1 ? w[i] / g : w[i]);
  return out;
}

}  // namespace

ConeGenerators generators(const std::vector<IntVector>& rows, std::size_t dim) {
  const std::size_t words = (rows.size() + 63) / 64 + 1;
  std::vector<IntVector> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, 0);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t t = 0; t < rows.size(); ++t) {
    const IntVector& a = rows[t];
    if (a.size() != dim) throw std::invalid_argument("dd: row dimension mismatch");

    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (exact::dot128(a, lin[i]) != 0) {
        pivot = i;
        break;
      }
    }

    if (pivot < lin.size()) {
      IntVector l = lin[pivot];
      __int128 s = exact::dot128(a, l);
      if (s < 0) {
        for (auto& x : l) x = -x;
        s = -s;
      }
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (auto& q : lin) {
        const __int128 x = exact::dot128(a, q);
        if (x != 0) q = combine(s, q, x, l);
      }
      for (auto& r : rays) {
        const __int128 x = exact::dot128(a, r.v);
        if (x != 0) r.v = combine(s, r.v, x, l);
        set_bit(r.zero, t);
      }
      Ray nr{l, Bits(words, 0)};
      for (std::size_t u = 0; u < t; ++u) set_bit(nr.zero, u);
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<__int128> val(rays.size());
    bool any_negative = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = exact::dot128(a, rays[i].v);
      any_negative = any_negative || val[i] < 0;
    }
    if (!any_negative) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) set_bit(rays[i].zero, t);
      continue;
    }

    const std::size_t pointed_dim = dim - lin.size();
    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zero[w] & rays[q].zero[w];
        if (pointed_dim >= 2 && popcount(common) + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (subset_of(common, rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr{combine(val[p], rays[q].v, val[q], rays[p].v), std::move(common)};
        set_bit(nr.zero, t);
        next.push_back(std::move(nr));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      if (val[i] == 0) set_bit(rays[i].zero, t);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lin);
  out.rays.reserve(rays.size());
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace alcoved::dd
