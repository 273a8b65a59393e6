#pragma once

// Ordered set partitions of a finite label set and the combinatorics of pairs
// of cyclic orders (relative permutations, steps, interlacing patterns).

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alcoved {

using Block = std::vector<int>;  // sorted ascending

/// An ordered set partition (B_1, ..., B_l) of a ground set of positive
/// integers. Blocks are kept sorted internally; block order is significant.
///
/// The ground set is [n] for partitions built by parse_osp and the family
/// generators, and an arbitrary label set after `restrict_to`.
class OrderedSetPartition {
 public:
  OrderedSetPartition() = default;

  /// Validates that blocks are nonempty, pairwise disjoint and that their union
  /// equals `ground` (or [max element] when `ground` is empty).
  explicit OrderedSetPartition(std::vector<Block> blocks, std::vector<int> ground = {});

  static OrderedSetPartition from_sequence(std::span<const int> order);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const std::vector<int>& ground() const noexcept { return ground_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  std::size_t size() const noexcept { return ground_.size(); }
  int max_element() const noexcept { return ground_.empty() ? 0 : ground_.back(); }

  bool nondegenerate() const noexcept { return blocks_.size() == ground_.size(); }

  /// Index of the block holding `element`, or -1.
  int block_of(int element) const noexcept;

  /// Element sequence of a nondegenerate partition.
  std::vector<int> sequence() const;

  std::string to_string() const;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition& a, const OrderedSetPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<int> ground_;  // sorted
};

/// Parses `1|2 3|4` (also `1 | 2,3 | 4`). n is the largest element and the
/// union of the blocks must be exactly [n].
OrderedSetPartition parse_osp(std::string_view text);

/// Rotates blocks so the block holding the largest ground element is last.
OrderedSetPartition normalize_cyclic(const OrderedSetPartition& p);

/// Intersects every block with `subset`, drops empty blocks, keeps labels.
OrderedSetPartition restrict_to(const OrderedSetPartition& p, std::span<const int> subset);

/// Relabels so that `s` reads 1,2,...,n and returns `t` under that relabeling,
/// starting from t's first element.
std::vector<int> relative_cyclic_permutation(const OrderedSetPartition& s, const OrderedSetPartition& t);

/// s_i = j_{i+1} - j_i mod n with cyclic wrap; entries of `order` are a
/// permutation of [n].
std::vector<int> step_sequence(std::span<const int> order);

enum class StepClass { AllOnes, AllThrees, Alt13, Alt31, Not13 };

std::string_view to_string(StepClass c);

/// Classifies a cyclic order whose steps are all 1 or 3 into the four shapes
/// allowed for such orders. Throws std::logic_error if the steps are all in
/// {1,3} yet match none of the four shapes (impossible for valid input).
StepClass classify_13_steps(std::span<const int> order);

enum class InterlacingKind { Four, SixFirst, SixSecond };

std::string_view to_string(InterlacingKind k);

struct InterlacingWitness {
  InterlacingKind kind;
  std::vector<int> elements;  // (a,b,c,d[,e,f])

  friend bool operator==(const InterlacingWitness&, const InterlacingWitness&) = default;
};

/// Scans 4-subsets then 6-subsets in lexicographic order and returns the
/// lexicographically smallest matching tuple of the first matching subset.
std::optional<InterlacingWitness> find_interlacing(const OrderedSetPartition& s, const OrderedSetPartition& t);

/// Same answer as `find_interlacing(...).has_value()` restricted to the
/// 4-pattern, computed directly on position arrays. `pos_s[x]`, `pos_t[x]`
/// give the position of label x in each cyclic order (index 0 unused).
bool has_four_interlacing(std::span<const int> pos_s, std::span<const int> pos_t);

/// Position-array scan for the two 6-patterns.
bool has_six_interlacing(std::span<const int> pos_s, std::span<const int> pos_t);

/// True when `t` restricted to `w.elements` matches the pattern of `w.kind`
/// against `s`.
bool verify_interlacing(const OrderedSetPartition& s, const OrderedSetPartition& t, const InterlacingWitness& w);

}  // namespace alcoved
