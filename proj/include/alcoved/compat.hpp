#pragma once

// Compatibility of alcoved simplices: pair checks, collection checks and the
// census of cyclic orders compatible with the standard order.

#include "alcoved/geom.hpp"
#include "alcoved/osp.hpp"
#include "alcoved/pdgraph.hpp"

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace alcoved {

enum class Method { Interlacing, Restriction, ViolatingCycle, Oracle };

std::string_view to_string(Method m);

using Witness = std::variant<std::monostate, InterlacingWitness, CycleWitness, FacetWitness>;

struct Verdict {
  bool compatible = true;
  Method method = Method::ViolatingCycle;
  Witness witness;
  /// Ground set of the restricted pair that carries a cycle witness; the
  /// cycle lives in the graph of the two restrictions to this set.
  std::vector<int> subset;
  /// For collections: indices of the first failing pair.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

/// Verdicts of small pairs keyed by the order-preserving relabelling of the
/// pair to [k]. Safe for concurrent use.
class SmallPairCache {
 public:
  std::optional<Verdict> find(const std::string& key) const;
  void insert(const std::string& key, const Verdict& v);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Verdict> map_;
};

/// Shared process-wide cache used by default.
SmallPairCache& default_small_pair_cache();

struct PairCheckOptions {
  /// Use the interlacing test when both partitions are nondegenerate.
  bool fast_path = true;
  std::size_t small_bound = 7;
  /// nullptr disables memoization.
  SmallPairCache* cache = &default_small_pair_cache();
};

/// Violating-cycle search on the full graph of the pair. Ground sets must
/// agree and have at most `small_bound` elements.
Verdict check_pair_small(const OrderedSetPartition& s, const OrderedSetPartition& t, std::size_t small_bound = 7);

/// Interlacing test for nondegenerate pairs, otherwise the restriction loop
/// over all subsets of size 4 to 6.
Verdict check_pair(const OrderedSetPartition& s, const OrderedSetPartition& t, const PairCheckOptions& options = {});

/// All unordered pairs; the failing pair with the smallest index is reported.
Verdict check_collection(const std::vector<OrderedSetPartition>& ps, unsigned jobs = 1,
                         const PairCheckOptions& options = {});

/// Geometric verdict: is the Minkowski sum of the simplices alcoved.
Verdict oracle_verdict(const std::vector<OrderedSetPartition>& ps, bool prune = false);

/// Re-checks a negative verdict of a pair without trusting the producer.
bool recheck_witness(const OrderedSetPartition& s, const OrderedSetPartition& t, const Verdict& v);

enum class CountMode { FourOnly, Full };

std::string_view to_string(CountMode m);

struct Census {
  std::uint64_t total = 0;
  std::uint64_t count = 0;
  /// Orders counted in four-only mode that fail in full mode (full mode only).
  std::vector<std::vector<int>> six_only;
};

constexpr int kDefaultCountBound = 10;

/// Cyclic orders t on [n] with n last that pass against (1,...,n).
Census census_with_standard(int n, CountMode mode, int bound = kDefaultCountBound, unsigned jobs = 1);

std::uint64_t count_compatible_with_standard(int n, CountMode mode, int bound = kDefaultCountBound,
                                             unsigned jobs = 1);

/// All cyclically normalized ordered set partitions of [n] (n in the last
/// block), in lexicographic order of their block lists.
std::vector<OrderedSetPartition> normalized_osps(int n);

/// All nondegenerate orders of [n] with n last, in lexicographic order.
std::vector<OrderedSetPartition> cyclic_orders(int n);

struct SampledCollection {
  int n = 0;
  std::vector<OrderedSetPartition> summands;
};

/// Seeded random collections of normalized partitions. n is drawn from
/// [min_n, max_n] and the size from [2, max_k]. With `compatible_only` each
/// new summand is redrawn until it passes check_pair against the ones already
/// chosen (at most 64 tries, so a collection may come out smaller).
std::vector<SampledCollection> sample_collections(std::size_t count, int min_n, int max_n, std::size_t max_k,
                                                  std::uint64_t seed, bool compatible_only);

}  // namespace alcoved
