#pragma once

// Named Minkowski decompositions into alcoved simplices and their
// verification.

#include "alcoved/compat.hpp"
#include "alcoved/geom.hpp"
#include "alcoved/osp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alcoved {

enum class Family { Associahedron, Cyclohedron, Dhat, Pellytope };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  std::string name;
  int n = 0;  // family parameter; the pellytope lives on [n+1]
  std::vector<OrderedSetPartition> summands;
};

/// Cyclic coarsenings of (1,...,n) with at most one non-singleton block,
/// without the one-block point. 1 + n(n-2) summands, sorted.
std::vector<OrderedSetPartition> cyclohedron_summands(int n);

/// Cyclohedron summands whose non-singleton block, if any, contains n.
std::vector<OrderedSetPartition> associahedron_summands(int n);

/// ([s,t] with n, t+1, ..., s-1) for (s,t) in [n-1]^2, cyclic intervals of
/// [n-1]; (n-1)^2 entries unless `dedup`.
std::vector<OrderedSetPartition> dhat_summands(int n, bool dedup = false);

/// Summands on [n+1]: ({i}, rest) for i in [n] and ({j},{j+1}, rest) for j in
/// [n-1]; rest holds n+1.
std::vector<OrderedSetPartition> pellytope_summands(int n);

FamilySpec make_family(Family f, int n, bool dedup = false);

enum class VerifyMode { Pairwise, Oracle };

std::string_view to_string(VerifyMode m);

constexpr int kDefaultOracleBound = 6;

/// ALCOVED_ORACLE_BOUND if set to a positive integer, otherwise the default.
int oracle_bound_from_env();

struct FamilyReport {
  FamilySpec spec;
  VerifyMode mode = VerifyMode::Pairwise;
  Verdict verdict;
  std::size_t pairs_checked = 0;
  std::size_t vertices = 0;  // oracle mode: vertices of the sum
  std::optional<AlcovedHRep> hrep;
  double seconds = 0.0;
};

/// Pairwise mode checks all pairs of summands; oracle mode builds the sum and
/// runs the alcoved test. Oracle mode throws std::domain_error when the family
/// parameter exceeds `oracle_bound`.
FamilyReport verify_family(const FamilySpec& spec, VerifyMode mode, int oracle_bound = kDefaultOracleBound,
                           unsigned jobs = 1);

}  // namespace alcoved
