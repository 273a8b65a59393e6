#pragma once

// Slow reference implementations for the tests. None of this calls the
// library's algorithms; it only shares the rational number type.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace ref {

using Q = boost::multiprecision::cpp_rational;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;
using IVec = std::vector<long long>;

/// Row echelon form in place (fully reduced); returns pivot columns.
inline std::vector<std::size_t> reduce(QMat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Q lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c];
      for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline std::size_t rank_of(QMat m, std::size_t cols) { return reduce(m, cols).size(); }

/// Basis of {x : m x = 0}.
inline QMat kernel(QMat m, std::size_t cols) {
  const auto pivots = reduce(m, cols);
  QMat out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    QVec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

inline Q dotq(const QVec& a, const QVec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

/// Positive multiple with coprime integer entries.
inline IVec integral(const QVec& v) {
  using boost::multiprecision::cpp_int;
  cpp_int l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, cpp_int(denominator(x)));
  std::vector<cpp_int> w;
  cpp_int g = 0;
  for (const auto& x : v) {
    w.push_back(cpp_int(numerator(x)) * (l / cpp_int(denominator(x))));
    g = boost::multiprecision::gcd(g, w.back());
  }
  IVec out;
  for (auto& x : w) out.push_back(g == 0 ? 0 : static_cast<long long>(x / g));
  return out;
}

inline QVec to_q(const IVec& v) { return QVec(v.begin(), v.end()); }

inline void for_each_combination(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Unique solution of [a | b] or nothing.
inline bool solve_unique(QMat aug, std::size_t cols, QVec& x) {
  const auto pivots = reduce(aug, cols + 1);
  if (pivots.size() != cols) return false;  // underdetermined or inconsistent
  x.assign(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) x[pivots[i]] = aug[i][cols];
  return true;
}

/// Vertices of the alcoved simplex of an ordered set partition, from its
/// (in)equality description: block equalities, x_i >= x_j between
/// consecutive blocks, x_i >= x_j - 1 from the last block to the first, and
/// x in H_n. Vertices are found by trying every set of tight inequalities.
inline QMat simplex_from_inequalities(const std::vector<std::vector<int>>& blocks, int n) {
  const std::size_t N = static_cast<std::size_t>(n);
  QMat eq;  // rows of [a | b] with a.x = b
  QVec all(N + 1, 1);
  all[N] = 0;
  eq.push_back(all);
  auto row = [&](int i, int j, Q rhs) {
    QVec r(N + 1, 0);
    r[static_cast<std::size_t>(i - 1)] += 1;
    r[static_cast<std::size_t>(j - 1)] -= 1;
    r[N] = rhs;
    return r;
  };
  for (const auto& b : blocks)
    for (std::size_t k = 1; k < b.size(); ++k) eq.push_back(row(b[0], b[k], 0));
  QMat ineq;  // a.x >= b
  const std::size_t l = blocks.size();
  for (std::size_t k = 0; k + 1 < l; ++k)
    for (int i : blocks[k])
      for (int j : blocks[k + 1]) ineq.push_back(row(i, j, 0));
  if (l >= 2)
    for (int i : blocks[l - 1])
      for (int j : blocks[0]) ineq.push_back(row(i, j, -1));

  QMat lhs;
  for (const auto& r : eq) lhs.push_back(QVec(r.begin(), r.begin() + static_cast<long>(N)));
  const std::size_t need = N - rank_of(lhs, N);
  std::set<QVec> found;
  for_each_combination(ineq.size(), need, [&](const std::vector<std::size_t>& idx) {
    QMat sys = eq;
    for (auto i : idx) sys.push_back(ineq[i]);
    QVec x;
    if (!solve_unique(sys, N, x)) return;
    for (const auto& r : ineq) {
      Q lhs_val = 0;
      for (std::size_t c = 0; c < N; ++c) lhs_val += r[c] * x[c];
      if (lhs_val < r[N]) return;
    }
    found.insert(x);
  });
  return QMat(found.begin(), found.end());
}

inline QMat minkowski(const std::vector<QMat>& ps) {
  std::set<QVec> acc{QVec(ps.front().front().size(), 0)};
  for (const auto& p : ps) {
    std::set<QVec> next;
    for (const auto& a : acc)
      for (const auto& b : p) {
        QVec s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
        next.insert(std::move(s));
      }
    acc = std::move(next);
  }
  return QMat(acc.begin(), acc.end());
}

/// Basis of the span of the differences p - points[0].
inline QMat direction_basis(const QMat& points) {
  const std::size_t n = points.front().size();
  QMat diffs;
  for (const auto& p : points) diffs.push_back(sub(p, points.front()));
  reduce(diffs, n);
  return diffs;
}

struct Facet {
  IVec normal;  // inner normal inside the direction space, primitive
  Q offset;     // normal . x >= offset

  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Facets of conv(points) inside its affine hull: every d-subset of points is
/// tried as a candidate hyperplane within the hull.
inline std::set<Facet> brute_facets(const QMat& points) {
  std::set<Facet> out;
  const QMat basis = direction_basis(points);
  const std::size_t d = basis.size();
  const std::size_t n = points.front().size();
  if (d == 0) return out;
  for_each_combination(points.size(), d, [&](const std::vector<std::size_t>& idx) {
    // y = basis^T c with y . (p_i - p_0) = 0 for the chosen points.
    QMat sys;
    for (std::size_t k = 1; k < idx.size(); ++k) {
      const QVec diff = sub(points[idx[k]], points[idx[0]]);
      QVec r(d);
      for (std::size_t b = 0; b < d; ++b) r[b] = dotq(basis[b], diff);
      sys.push_back(std::move(r));
    }
    const QMat ker = kernel(sys, d);
    if (ker.size() != 1) return;
    QVec y(n, 0);
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t i = 0; i < n; ++i) y[i] += ker[0][b] * basis[b][i];
    const Q base = dotq(y, points[idx[0]]);
    bool below = false, above = false;
    for (const auto& p : points) {
      const Q v = dotq(y, p);
      if (v < base) below = true;
      if (v > base) above = true;
    }
    if (below && above) return;
    if (below) {
      for (auto& x : y) x = -x;
    }
    Facet f;
    f.normal = integral(y);
    f.offset = dotq(to_q(f.normal), points[idx[0]]);
    out.insert(std::move(f));
  });
  return out;
}

inline bool is_root_vector(const IVec& v) {
  int plus = 0, minus = 0, other = 0;
  for (auto x : v) {
    if (x == 1) ++plus;
    else if (x == -1) ++minus;
    else if (x != 0) ++other;
  }
  return plus == 1 && minus == 1 && other == 0;
}

/// Orthogonal projection of v onto span(basis) (basis rows independent).
inline QVec project(const QMat& basis, const QVec& v) {
  const std::size_t d = basis.size();
  QMat aug(d, QVec(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = dotq(basis[i], basis[j]);
    aug[i][d] = dotq(basis[i], v);
  }
  QVec c;
  solve_unique(aug, d, c);
  QVec out(v.size(), 0);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += c[b] * basis[b][i];
  return out;
}

/// Alcoved test from first principles for points in H_n: the roots orthogonal
/// to the direction space span its whole complement in H_n, and every facet
/// normal is the projection of a root onto the direction space.
inline bool brute_alcoved(const QMat& points) {
  const std::size_t n = points.front().size();
  const QMat basis = direction_basis(points);
  QMat perp_roots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      QVec r(n, 0);
      r[i] = 1;
      r[j] = -1;
      if (std::all_of(basis.begin(), basis.end(), [&](const QVec& b) { return dotq(b, r) == 0; }))
        perp_roots.push_back(r);
    }
  }
  if (rank_of(perp_roots, n) + basis.size() != n - 1) return false;
  std::set<IVec> projections;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      QVec r(n, 0);
      r[i] = 1;
      r[j] = -1;
      const QVec p = project(basis, r);
      if (std::any_of(p.begin(), p.end(), [](const Q& x) { return x != 0; })) projections.insert(integral(p));
    }
  }
  for (const auto& f : brute_facets(points))
    if (!projections.count(f.normal)) return false;
  return true;
}

/// Extreme rays of the pointed cone {x : ineq x >= 0, eq x = 0}.
inline std::set<IVec> extreme_rays(const QMat& ineq, const QMat& eq, std::size_t n) {
  std::set<IVec> out;
  const std::size_t dim = n - rank_of(eq, n);
  if (dim == 0) return out;
  for_each_combination(ineq.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    QMat sys = eq;
    for (auto i : idx) sys.push_back(ineq[i]);
    const QMat ker = kernel(sys, n);
    if (ker.size() != 1) return;
    QVec v = ker[0];
    bool neg = false, pos = false;
    for (const auto& r : ineq) {
      const Q s = dotq(r, v);
      if (s < 0) neg = true;
      if (s > 0) pos = true;
    }
    if (neg && pos) return;
    if (neg) {
      for (auto& x : v) x = -x;
    }
    out.insert(integral(v));
  });
  return out;
}

/// Inequalities and equations of the pointed cone generated by `gens`.
inline void cone_hrep(const QMat& gens, std::size_t n, QMat& ineq, QMat& eq) {
  eq = kernel(gens, n);  // annihilator of the span
  if (gens.empty()) {
    eq.clear();
    for (std::size_t i = 0; i < n; ++i) {
      QVec e(n, 0);
      e[i] = 1;
      eq.push_back(e);
    }
  }
  ineq.clear();
  QMat span_eq;  // y in span(gens): y orthogonal to the annihilator
  for (const auto& z : eq) span_eq.push_back(z);
  if (gens.empty()) return;
  for (const auto& y : extreme_rays(gens, span_eq, n)) ineq.push_back(to_q(y));
}

/// Extreme rays of cone(g1) ∩ cone(g2) for pointed cones.
inline std::set<IVec> intersection_rays(const QMat& g1, const QMat& g2, std::size_t n) {
  QMat i1, e1, i2, e2;
  cone_hrep(g1, n, i1, e1);
  cone_hrep(g2, n, i2, e2);
  QMat ineq = i1;
  ineq.insert(ineq.end(), i2.begin(), i2.end());
  QMat eq = e1;
  eq.insert(eq.end(), e2.begin(), e2.end());
  return extreme_rays(ineq, eq, n);
}

/// True when the cyclic sequence `perm` of [n] contains the cyclic pattern:
/// some k-subset, with both its values and its positions read cyclically,
/// is order-isomorphic to `pattern` (values 1..k).
inline bool contains_cyclic_pattern(const std::vector<int>& perm, const std::vector<int>& pattern) {
  const std::size_t n = perm.size();
  const std::size_t k = pattern.size();
  bool hit = false;
  for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
    if (hit) return;
    std::vector<int> values;  // chosen labels, ascending
    for (auto i : idx) values.push_back(static_cast<int>(i) + 1);
    std::vector<int> sub_seq;
    for (int x : perm)
      if (std::binary_search(values.begin(), values.end(), x)) sub_seq.push_back(x);
    for (std::size_t vr = 0; vr < k && !hit; ++vr) {
      std::vector<int> ranked;
      for (int x : sub_seq) {
        const auto pos = static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), x) - values.begin());
        ranked.push_back(static_cast<int>((pos + k - vr) % k) + 1);
      }
      for (std::size_t pr = 0; pr < k && !hit; ++pr) {
        bool eq = true;
        for (std::size_t i = 0; i < k && eq; ++i) eq = ranked[(pr + i) % k] == pattern[i];
        hit = eq;
      }
    }
  });
  return hit;
}

/// t read in s's coordinates: label s[i] becomes i+1.
inline std::vector<int> relabel_by(const std::vector<int>& s, const std::vector<int>& t) {
  std::vector<int> rank(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) rank[static_cast<std::size_t>(s[i])] = static_cast<int>(i) + 1;
  std::vector<int> out;
  for (int x : t) out.push_back(rank[static_cast<std::size_t>(x)]);
  return out;
}

inline bool interlaced_by_patterns(const std::vector<int>& s, const std::vector<int>& t) {
  const auto p = relabel_by(s, t);
  return contains_cyclic_pattern(p, {1, 4, 3, 2}) || contains_cyclic_pattern(p, {1, 2, 5, 6, 3, 4}) ||
         contains_cyclic_pattern(p, {1, 4, 5, 2, 3, 6});
}

inline long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long callan(int n) { return (1LL << n) + 1 - 2LL * n - binom(n, 3); }

}  // namespace ref
