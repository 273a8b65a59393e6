#pragma once

// Exact geometric oracle: simplices of ordered set partitions, Minkowski sums,
// facet enumeration and the alcoved test. Rational arithmetic throughout.

#include "alcoved/exact.hpp"
#include "alcoved/osp.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace alcoved {

using RationalPoint = RationalVector;

/// Finite point set; the polytope is its convex hull.
struct VPolytope {
  int n = 0;  // ambient dimension
  std::vector<RationalPoint> points;
};

/// Removes duplicate points and sorts.
VPolytope normalized(VPolytope p);

bool in_hn(const RationalPoint& x);

/// A facet of conv(points): normal . x >= offset, with equality on the
/// incident points. The normal is an inner normal taken inside the direction
/// space of the affine hull, primitive integer.
struct FacetWitness {
  IntVector normal;
  Rational offset;
  bool is_root = false;
  std::vector<std::size_t> incident_points;
  /// Set when the witness records a lineality failure (the orthogonal
  /// complement of the affine hull is not a root subspace) rather than a facet.
  bool lineality = false;
};

/// x_i - x_j <= a(i,j) for all i != j.
class AlcovedHRep {
 public:
  AlcovedHRep() = default;
  explicit AlcovedHRep(int n);

  int n() const noexcept { return n_; }
  const std::optional<Rational>& a(int i, int j) const;
  void set(int i, int j, Rational value);

  bool satisfies(const RationalPoint& x) const;
  /// a(i,j) + a(j,k) >= a(i,k) whenever all three are finite.
  bool triangle_inequalities_hold() const;

 private:
  int n_ = 0;
  std::vector<std::optional<Rational>> bounds_;  // row-major, 1-based labels
};

struct AlcovedResult {
  bool alcoved = false;
  std::optional<FacetWitness> witness;
  std::optional<AlcovedHRep> hrep;
  std::vector<FacetWitness> facets;
  std::size_t dimension = 0;  // affine dimension
};

/// Vertices of the simplex of `p` in H_n: 0 and, for k < l, the indicator of
/// B_1 .. B_k minus its mean. Every vertex is checked against the defining
/// (in)equalities; a failure throws std::logic_error.
VPolytope simplex_vertices(const OrderedSetPartition& p);

/// True when x satisfies the defining (in)equalities of the simplex of `p`.
bool satisfies_simplex_system(const OrderedSetPartition& p, const RationalPoint& x);

/// 0/1 vertices 0, e_{B_1}, e_{B_1 B_2}, ... in dimension n - 1. Requires n in
/// the last block.
VPolytope newton_simplex(const OrderedSetPartition& p);

struct CoordinateSimplexImage {
  VPolytope vertices;
  OrderedSetPartition osp;
  IntVector shift;
};

/// Image of the coordinate simplex on I under e_i -> e_1 + ... + e_{i-1}.
/// Checks that it equals the Newton simplex of the returned partition shifted.
CoordinateSimplexImage coordinate_simplex_image(std::span<const int> subset, int n);

/// All sums of one point per polytope, duplicates removed.
VPolytope minkowski_sum(const std::vector<VPolytope>& ps);

/// Minkowski sum built incrementally, keeping only vertices after each step.
VPolytope minkowski_sum_pruned(const std::vector<VPolytope>& ps);

VPolytope simplex_sum(const std::vector<OrderedSetPartition>& ps, bool prune = false);

/// Facets of conv(points) inside its affine hull, sorted by normal. A single
/// point has no facets. Points may be anywhere in Q^n.
std::vector<FacetWitness> facets(const VPolytope& p);

/// The vertices of conv(points), sorted.
VPolytope vertices(const VPolytope& p);

/// Alcoved test for a polytope in H_n: the complement of the direction space
/// inside H_n is a root subspace, and every facet normal is the projection of
/// a root onto the direction space.
AlcovedResult is_alcoved(const VPolytope& p);

/// True when span(vs) is spanned by the roots it contains.
bool is_root_subspace(const std::vector<IntVector>& vs);

/// Header `n=<ambient>`, then one point per line as `p/q` entries.
std::string dump_polytope(const VPolytope& p);
VPolytope parse_polytope(const std::string& text);

}  // namespace alcoved
