#include "alcoved/geom.hpp"

#include "alcoved/dd.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alcoved {

namespace {

using exact::narrow;

// Convex hull data in the coordinates of the affine hull.
struct Hull {
  std::int64_t scale = 1;             // common denominator of the input
  std::vector<IntVector> scaled;      // scale * points
  std::vector<IntVector> basis;       // integer basis of the direction space
  std::vector<std::size_t> pivots;    // coordinates that parametrize the hull
  std::vector<IntVector> projected;   // (scaled[i] - scaled[0]) restricted to pivots
  std::vector<IntVector> inequalities;  // (b, c): b + c . projected[i] >= 0, one per facet
};

Hull compute_hull(const VPolytope& p) {
  if (p.points.empty()) throw std::invalid_argument("polytope: empty point list");
  const std::size_t n = static_cast<std::size_t>(p.n);
  for (const auto& x : p.points)
    if (x.size() != n) throw std::invalid_argument("polytope: point dimension mismatch");

  Hull h;
  BigInt lcm = 1;
  for (const auto& x : p.points)
    for (const auto& q : x) {
      const BigInt d = boost::multiprecision::denominator(q);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
  if (lcm > INT64_MAX) throw std::overflow_error("polytope: common denominator exceeds 64 bits");
  h.scale = static_cast<std::int64_t>(lcm);
  h.scaled.reserve(p.points.size());
  for (const auto& x : p.points) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt s = boost::multiprecision::numerator(x[i]) * (lcm / boost::multiprecision::denominator(x[i]));
      if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("polytope: coordinate exceeds 64 bits");
      v[i] = static_cast<std::int64_t>(s);
    }
    h.scaled.push_back(std::move(v));
  }

  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < h.scaled.size(); ++i) {
    RationalVector d(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      d[j] = h.scaled[i][j] - h.scaled[0][j];
      nonzero = nonzero || d[j] != 0;
    }
    if (nonzero) diffs.push_back(std::move(d));
  }
  h.pivots = exact::rref(diffs);
  for (const auto& row : diffs) h.basis.push_back(exact::primitive_integer(row));
  const std::size_t k = h.pivots.size();

  h.projected.reserve(h.scaled.size());
  for (const auto& v : h.scaled) {
    IntVector y(k);
    for (std::size_t j = 0; j < k; ++j) y[j] = v[h.pivots[j]] - h.scaled[0][h.pivots[j]];
    h.projected.push_back(std::move(y));
  }
  if (k == 0) return h;

  // Homogenized constraints b + c.y >= 0; far points first.
  const std::size_t m = h.projected.size();
  std::vector<__int128> sum(k, 0);
  for (const auto& y : h.projected)
    for (std::size_t j = 0; j < k; ++j) sum[j] += y[j];
  std::vector<__int128> spread(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const __int128 d = static_cast<__int128>(m) * h.projected[i][j] - sum[j];
      spread[i] += d * d;
    }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return spread[a] > spread[b]; });
  std::vector<IntVector> rows;
  rows.reserve(m);
  for (auto i : order) {
    IntVector r(k + 1);
    r[0] = 1;
    std::copy(h.projected[i].begin(), h.projected[i].end(), r.begin() + 1);
    rows.push_back(std::move(r));
  }
  auto cone = dd::generators(rows, k + 1);
  if (!cone.lineality.empty()) throw std::logic_error("polytope: inequality cone is not pointed");
  h.inequalities = std::move(cone.rays);
  return h;
}

std::int64_t eval(const IntVector& ineq, const IntVector& y) {
  __int128 s = ineq[0];
  for (std::size_t j = 0; j < y.size(); ++j) s += static_cast<__int128>(ineq[j + 1]) * y[j];
  return narrow(s);
}

// The vector w in span(basis) with w.b = target(b) for every basis vector b,
// given the values target(b_j) = rhs[j].
RationalVector solve_in_span(const std::vector<IntVector>& basis, const RationalVector& rhs, std::size_t n) {
  const std::size_t k = basis.size();
  std::vector<RationalVector> aug(k, RationalVector(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = exact::dot(basis[i], basis[j]);
    aug[i][k] = rhs[i];
  }
  const auto piv = exact::rref(aug);
  if (piv.size() != k || piv.back() != k - 1) throw std::logic_error("solve_in_span: singular Gram matrix");
  RationalVector w(n, Rational(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < n; ++c)
      if (basis[j][c] != 0) w[c] += aug[j][k] * basis[j][c];
  return w;
}

// Facet normal inside the direction space for the functional c on pivots.
IntVector lift_normal(const Hull& h, const IntVector& c, std::size_t n) {
  const std::size_t k = h.pivots.size();
  IntVector hat(n, 0);
  for (std::size_t j = 0; j < k; ++j) hat[h.pivots[j]] = c[j];
  if (k + 1 == n) {
    // Direction space is all of H_n whenever the points lie in H_n and are
    // full-dimensional there; check and use the orthogonal projection.
    bool in_h = true;
    for (const auto& b : h.basis) in_h = in_h && std::accumulate(b.begin(), b.end(), std::int64_t{0}) == 0;
    if (in_h) {
      const std::int64_t total = std::accumulate(hat.begin(), hat.end(), std::int64_t{0});
      IntVector w(n);
      for (std::size_t i = 0; i < n; ++i)
        w[i] = narrow(static_cast<__int128>(hat[i]) * static_cast<__int128>(n) - total);
      exact::make_primitive(w);
      return w;
    }
  }
  RationalVector rhs(k);
  for (std::size_t j = 0; j < k; ++j) rhs[j] = exact::dot(hat, h.basis[j]);
  return exact::primitive_integer(solve_in_span(h.basis, rhs, n));
}

std::vector<FacetWitness> facets_of(const Hull& h, std::size_t n) {
  std::vector<FacetWitness> out;
  for (const auto& ineq : h.inequalities) {
    const IntVector c(ineq.begin() + 1, ineq.end());
    FacetWitness f;
    f.normal = lift_normal(h, c, n);
    __int128 best = 0;
    bool first = true;
    for (std::size_t i = 0; i < h.scaled.size(); ++i) {
      const __int128 v = exact::dot128(f.normal, h.scaled[i]);
      if (first || v < best) {
        best = v;
        first = false;
      }
    }
    for (std::size_t i = 0; i < h.scaled.size(); ++i)
      if (exact::dot128(f.normal, h.scaled[i]) == best) f.incident_points.push_back(i);
    f.offset = Rational(BigInt(narrow(best)), BigInt(h.scale));
    // Incidence must match the inequality the hull was computed from.
    for (std::size_t i = 0; i < h.projected.size(); ++i) {
      const bool tight = eval(ineq, h.projected[i]) == 0;
      if (tight != std::binary_search(f.incident_points.begin(), f.incident_points.end(), i))
        throw std::logic_error("facets: incidence mismatch after lifting the normal");
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const FacetWitness& a, const FacetWitness& b) { return a.normal < b.normal; });
  return out;
}

RationalPoint zero_point(std::size_t n) { return RationalPoint(n, Rational(0)); }

}  // namespace

VPolytope normalized(VPolytope p) {
  std::sort(p.points.begin(), p.points.end());
  p.points.erase(std::unique(p.points.begin(), p.points.end()), p.points.end());
  return p;
}

bool in_hn(const RationalPoint& x) {
  Rational s = 0;
  for (const auto& q : x) s += q;
  return s == 0;
}

AlcovedHRep::AlcovedHRep(int n) : n_(n), bounds_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

const std::optional<Rational>& AlcovedHRep::a(int i, int j) const {
  return bounds_.at(static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1));
}

void AlcovedHRep::set(int i, int j, Rational value) {
  if (i == j) throw std::invalid_argument("AlcovedHRep: diagonal entry");
  bounds_.at(static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)) =
      std::move(value);
}

bool AlcovedHRep::satisfies(const RationalPoint& x) const {
  if (x.size() != static_cast<std::size_t>(n_)) return false;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      if (i == j) continue;
      const auto& b = a(i, j);
      if (b && x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)] > *b) return false;
    }
  return true;
}

bool AlcovedHRep::triangle_inequalities_hold() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k) {
        if (i == j || j == k || i == k) continue;
        const auto& ij = a(i, j);
        const auto& jk = a(j, k);
        const auto& ik = a(i, k);
        if (ij && jk && ik && *ij + *jk < *ik) return false;
      }
  return true;
}

bool satisfies_simplex_system(const OrderedSetPartition& p, const RationalPoint& x) {
  const auto n = static_cast<std::size_t>(p.max_element());
  if (x.size() != n || !in_hn(x)) return false;
  auto at = [&](int label) -> const Rational& { return x[static_cast<std::size_t>(label - 1)]; };
  const auto& b = p.blocks();
  for (const auto& block : b)
    for (int i : block)
      if (at(i) != at(block.front())) return false;
  for (std::size_t k = 0; k + 1 < b.size(); ++k)
    for (int i : b[k])
      for (int j : b[k + 1])
        if (at(i) < at(j)) return false;
  for (int i : b.back())
    for (int j : b.front())
      if (at(i) < at(j) - 1) return false;
  return true;
}

VPolytope simplex_vertices(const OrderedSetPartition& p) {
  const int n = p.max_element();
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument("simplex_vertices: ground set is not [n]");
  VPolytope out{n, {}};
  std::vector<int> prefix(static_cast<std::size_t>(n), 0);
  int count = 0;
  out.points.push_back(zero_point(static_cast<std::size_t>(n)));
  const auto& b = p.blocks();
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    for (int x : b[k]) prefix[static_cast<std::size_t>(x - 1)] = 1;
    count += static_cast<int>(b[k].size());
    RationalPoint v(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(prefix[i]) - Rational(count, n);
    out.points.push_back(std::move(v));
  }
  for (const auto& v : out.points)
    if (!satisfies_simplex_system(p, v)) throw std::logic_error("simplex_vertices: vertex violates the simplex system");
  return out;
}

VPolytope newton_simplex(const OrderedSetPartition& p) {
  const int n = p.max_element();
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument("newton_simplex: ground set is not [n]");
  if (p.block_of(n) != static_cast<int>(p.num_blocks()) - 1)
    throw std::invalid_argument("newton_simplex: n must lie in the last block");
  VPolytope out{n - 1, {}};
  RationalPoint v = zero_point(static_cast<std::size_t>(n - 1));
  out.points.push_back(v);
  const auto& b = p.blocks();
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    for (int x : b[k]) v[static_cast<std::size_t>(x - 1)] = 1;
    out.points.push_back(v);
  }
  return out;
}

CoordinateSimplexImage coordinate_simplex_image(std::span<const int> subset, int n) {
  if (subset.empty()) throw std::invalid_argument("coordinate_simplex_image: empty subset");
  std::vector<int> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end() || idx.front() < 1 || idx.back() > n)
    throw std::invalid_argument("coordinate_simplex_image: subset must consist of distinct elements of [n]");
  const auto dim = static_cast<std::size_t>(n - 1);
  CoordinateSimplexImage out;
  out.vertices.n = n - 1;
  for (int i : idx) {
    RationalPoint v = zero_point(dim);
    for (int j = 1; j < i; ++j) v[static_cast<std::size_t>(j - 1)] = 1;
    out.vertices.points.push_back(std::move(v));
  }
  std::vector<Block> blocks;
  for (std::size_t t = 0; t + 1 < idx.size(); ++t) {
    Block b;
    for (int x = idx[t]; x < idx[t + 1]; ++x) b.push_back(x);
    blocks.push_back(std::move(b));
  }
  Block last;
  for (int x = idx.back(); x <= n; ++x) last.push_back(x);
  for (int x = 1; x < idx.front(); ++x) last.push_back(x);
  blocks.push_back(std::move(last));
  out.osp = OrderedSetPartition(std::move(blocks));
  out.shift.assign(dim, 0);
  for (int j = 1; j < idx.front(); ++j) out.shift[static_cast<std::size_t>(j - 1)] = 1;

  VPolytope expected = newton_simplex(out.osp);
  for (auto& v : expected.points)
    for (std::size_t c = 0; c < dim; ++c) v[c] += out.shift[c];
  if (normalized(expected).points != normalized(out.vertices).points)
    throw std::logic_error("coordinate_simplex_image: image differs from the shifted Newton simplex");
  return out;
}

VPolytope minkowski_sum(const std::vector<VPolytope>& ps) {
  if (ps.empty()) throw std::invalid_argument("minkowski_sum: empty list");
  VPolytope acc = normalized(ps.front());
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (ps[i].n != acc.n) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    VPolytope next{acc.n, {}};
    next.points.reserve(acc.points.size() * ps[i].points.size());
    for (const auto& a : acc.points)
      for (const auto& b : ps[i].points) {
        RationalPoint s(a.size());
        for (std::size_t c = 0; c < a.size(); ++c) s[c] = a[c] + b[c];
        next.points.push_back(std::move(s));
      }
    acc = normalized(std::move(next));
  }
  return acc;
}

VPolytope minkowski_sum_pruned(const std::vector<VPolytope>& ps) {
  if (ps.empty()) throw std::invalid_argument("minkowski_sum: empty list");
  VPolytope acc = vertices(ps.front());
  for (std::size_t i = 1; i < ps.size(); ++i) acc = vertices(minkowski_sum({acc, ps[i]}));
  return acc;
}

VPolytope simplex_sum(const std::vector<OrderedSetPartition>& ps, bool prune) {
  std::vector<VPolytope> simplices;
  simplices.reserve(ps.size());
  for (const auto& p : ps) simplices.push_back(simplex_vertices(p));
  return prune ? minkowski_sum_pruned(simplices) : minkowski_sum(simplices);
}

std::vector<FacetWitness> facets(const VPolytope& p) {
  const Hull h = compute_hull(p);
  return facets_of(h, static_cast<std::size_t>(p.n));
}

VPolytope vertices(const VPolytope& p) {
  VPolytope q = normalized(p);
  const Hull h = compute_hull(q);
  if (h.pivots.empty()) return q;
  const std::size_t m = q.points.size();
  const std::size_t f = h.inequalities.size();
  const std::size_t words = (f + 63) / 64;
  std::vector<std::vector<std::uint64_t>> tight(m, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < f; ++j)
      if (eval(h.inequalities[j], h.projected[i]) == 0) tight[i][j / 64] |= std::uint64_t{1} << (j % 64);
  // A point is a vertex iff no other point lies on every facet through it.
  VPolytope out{q.n, {}};
  for (std::size_t i = 0; i < m; ++i) {
    bool vertex = true;
    for (std::size_t j = 0; j < m && vertex; ++j) {
      if (i == j) continue;
      bool superset = true;
      for (std::size_t w = 0; w < words && superset; ++w) superset = (tight[i][w] & ~tight[j][w]) == 0;
      if (superset) vertex = false;
    }
    if (vertex) out.points.push_back(q.points[i]);
  }
  return out;
}

bool is_root_subspace(const std::vector<IntVector>& vs) {
  std::vector<RationalVector> rows;
  std::size_t n = 0;
  for (const auto& v : vs) {
    n = std::max(n, v.size());
    rows.push_back(exact::to_rational(v));
  }
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("is_root_subspace: dimension mismatch");
  const std::size_t r = exact::rank(rows);
  if (r == 0) return true;
  std::vector<RationalVector> roots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RationalVector e(n, Rational(0));
      e[i] = 1;
      e[j] = -1;
      auto extended = rows;
      extended.push_back(e);
      if (exact::rank(std::move(extended)) == r) roots.push_back(std::move(e));
    }
  return exact::rank(std::move(roots)) == r;
}

AlcovedResult is_alcoved(const VPolytope& p) {
  const auto n = static_cast<std::size_t>(p.n);
  for (const auto& x : p.points)
    if (x.size() != n || !in_hn(x)) throw std::invalid_argument("is_alcoved: point not in H_n");
  const Hull h = compute_hull(p);
  AlcovedResult result;
  result.dimension = h.pivots.size();
  result.facets = facets_of(h, n);

  // Normal-fan lineality: the complement of the direction space within H_n.
  std::vector<RationalVector> rows;
  for (const auto& b : h.basis) rows.push_back(exact::to_rational(b));
  rows.emplace_back(n, Rational(1));
  const auto complement = exact::null_space(rows, n);
  const bool lineality_ok = is_root_subspace(complement);

  std::set<IntVector> root_directions;
  const std::size_t k = h.pivots.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      IntVector e(n, 0);
      e[i] = 1;
      e[j] = -1;
      if (k + 1 == n) {
        root_directions.insert(e);
        continue;
      }
      if (k == 0) continue;
      RationalVector rhs(k);
      for (std::size_t b = 0; b < k; ++b) rhs[b] = exact::dot(e, h.basis[b]);
      const auto w = solve_in_span(h.basis, rhs, n);
      IntVector prim = exact::primitive_integer(w);
      if (!exact::is_zero(prim)) root_directions.insert(std::move(prim));
    }
  bool facets_ok = true;
  for (auto& f : result.facets) {
    f.is_root = root_directions.contains(f.normal);
    if (!f.is_root && facets_ok) {
      facets_ok = false;
      result.witness = f;
    }
  }
  if (!lineality_ok && facets_ok) {
    FacetWitness w;
    w.normal = complement.front();
    w.lineality = true;
    for (const auto& c : complement) {
      // Report a complement vector that is not itself a root multiple if possible.
      int nonzero = 0;
      for (auto x : c) nonzero += x != 0;
      if (nonzero > 2) {
        w.normal = c;
        break;
      }
    }
    result.witness = w;
  }
  result.alcoved = lineality_ok && facets_ok;
  if (result.alcoved) {
    AlcovedHRep rep(p.n);
    for (int i = 1; i <= p.n; ++i)
      for (int j = 1; j <= p.n; ++j) {
        if (i == j) continue;
        std::optional<Rational> best;
        for (const auto& x : p.points) {
          Rational d = x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)];
          if (!best || d > *best) best = d;
        }
        rep.set(i, j, *best);
      }
    result.hrep = std::move(rep);
  }
  return result;
}

std::string dump_polytope(const VPolytope& p) {
  std::string out = "n=" + std::to_string(p.n) + "\n";
  for (const auto& x : p.points) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i > 0) out += ' ';
      out += exact::format_rational(x[i]);
    }
    out += '\n';
  }
  return out;
}

VPolytope parse_polytope(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  VPolytope p;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      if (line.rfind("n=", 0) != 0) throw std::invalid_argument("polytope dump: missing header n=<ambient>");
      p.n = std::stoi(line.substr(2));
      if (p.n < 0) throw std::invalid_argument("polytope dump: negative ambient dimension");
      header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    RationalPoint x;
    while (ls >> tok) x.push_back(exact::parse_rational(tok));
    if (x.size() != static_cast<std::size_t>(p.n)) throw std::invalid_argument("polytope dump: wrong point length");
    p.points.push_back(std::move(x));
  }
  if (!header) throw std::invalid_argument("polytope dump: missing header n=<ambient>");
  return p;
}

}  // namespace alcoved
