#include "alcoved/osp.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alcoved {

OrderedSetPartition::OrderedSetPartition(std::vector<Block> blocks, std::vector<int> ground)
    : blocks_(std::move(blocks)) {
  std::set<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("ordered set partition: empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x <= 0) throw std::invalid_argument("ordered set partition: elements must be positive");
      if (!seen.insert(x).second)
        throw std::invalid_argument("ordered set partition: duplicate element " + std::to_string(x));
    }
  }
  if (ground.empty()) {
    const int n = seen.empty() ? 0 : *seen.rbegin();
    for (int i = 1; i <= n; ++i) {
      if (!seen.contains(i))
        throw std::invalid_argument("ordered set partition: missing element " + std::to_string(i));
    }
    ground_.assign(seen.begin(), seen.end());
  } else {
    std::sort(ground.begin(), ground.end());
    if (!std::equal(ground.begin(), ground.end(), seen.begin(), seen.end()))
      throw std::invalid_argument("ordered set partition: blocks do not cover the ground set");
    ground_ = std::move(ground);
  }
  if (blocks_.empty()) throw std::invalid_argument("ordered set partition: no blocks");
}

OrderedSetPartition OrderedSetPartition::from_sequence(std::span<const int> order) {
  std::vector<Block> blocks;
  blocks.reserve(order.size());
  for (int x : order) blocks.push_back({x});
  std::vector<int> ground(order.begin(), order.end());
  return OrderedSetPartition(std::move(blocks), std::move(ground));
}

int OrderedSetPartition::block_of(int element) const noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element)) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> OrderedSetPartition::sequence() const {
  if (!nondegenerate()) throw std::invalid_argument("sequence: partition is degenerate");
  std::vector<int> seq;
  seq.reserve(blocks_.size());
  for (const auto& b : blocks_) seq.push_back(b.front());
  return seq;
}

std::string OrderedSetPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(blocks_[i][j]);
    }
  }
  return out;
}

OrderedSetPartition parse_osp(std::string_view text) {
  std::vector<Block> blocks;
  Block current;
  std::string number;
  bool block_has_content = false;
  auto flush_number = [&] {
    if (number.empty()) return;
    if (number.size() > 9) throw std::invalid_argument("parse_osp: element too large: " + number);
    current.push_back(std::stoi(number));
    number.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      number.push_back(ch);
      block_has_content = true;
    } else if (ch == ' ' || ch == ',' || ch == '\t') {
      flush_number();
    } else if (ch == '|') {
      flush_number();
      if (!block_has_content) throw std::invalid_argument("parse_osp: empty block");
      blocks.push_back(std::move(current));
      current.clear();
      block_has_content = false;
    } else {
      throw std::invalid_argument(std::string("parse_osp: unexpected character '") + ch + "'");
    }
  }
  flush_number();
  if (!block_has_content) throw std::invalid_argument(blocks.empty() ? "parse_osp: empty input" : "parse_osp: empty block");
  blocks.push_back(std::move(current));
  for (const auto& b : blocks)
    for (int x : b)
      if (x == 0) throw std::invalid_argument("parse_osp: elements must be positive");
  return OrderedSetPartition(std::move(blocks));
}

OrderedSetPartition normalize_cyclic(const OrderedSetPartition& p) {
  const int top = p.max_element();
  const int k = p.block_of(top);
  std::vector<Block> rotated;
  rotated.reserve(p.num_blocks());
  const auto& b = p.blocks();
  for (std::size_t i = 1; i <= b.size(); ++i) rotated.push_back(b[(static_cast<std::size_t>(k) + i) % b.size()]);
  return OrderedSetPartition(std::move(rotated), p.ground());
}

OrderedSetPartition restrict_to(const OrderedSetPartition& p, std::span<const int> subset) {
  if (subset.empty()) throw std::invalid_argument("restrict: empty subset");
  std::vector<int> ground(subset.begin(), subset.end());
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
    throw std::invalid_argument("restrict: repeated element in subset");
  for (int x : ground) {
    if (!std::binary_search(p.ground().begin(), p.ground().end(), x))
      throw std::invalid_argument("restrict: " + std::to_string(x) + " is not in the ground set");
  }
  std::vector<Block> blocks;
  for (const auto& b : p.blocks()) {
    Block kept;
    std::set_intersection(b.begin(), b.end(), ground.begin(), ground.end(), std::back_inserter(kept));
    if (!kept.empty()) blocks.push_back(std::move(kept));
  }
  return OrderedSetPartition(std::move(blocks), std::move(ground));
}

std::vector<int> relative_cyclic_permutation(const OrderedSetPartition& s, const OrderedSetPartition& t) {
  if (!s.nondegenerate() || !t.nondegenerate())
    throw std::invalid_argument("relative_cyclic_permutation: degenerate input");
  if (s.ground() != t.ground()) throw std::invalid_argument("relative_cyclic_permutation: ground sets differ");
  const auto seq_s = s.sequence();
  std::vector<int> label(static_cast<std::size_t>(s.max_element()) + 1, 0);
  for (std::size_t i = 0; i < seq_s.size(); ++i) label[static_cast<std::size_t>(seq_s[i])] = static_cast<int>(i) + 1;
  std::vector<int> out;
  out.reserve(seq_s.size());
  for (int x : t.sequence()) out.push_back(label[static_cast<std::size_t>(x)]);
  return out;
}

std::vector<int> step_sequence(std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> steps(order.size());
  for (int i = 0; i < n; ++i) {
    const int next = order[static_cast<std::size_t>((i + 1) % n)];
    steps[static_cast<std::size_t>(i)] = ((next - order[static_cast<std::size_t>(i)]) % n + n) % n;
  }
  return steps;
}

std::string_view to_string(StepClass c) {
  switch (c) {
    case StepClass::AllOnes: return "all-ones";
    case StepClass::AllThrees: return "all-threes";
    case StepClass::Alt13: return "alt-1-3";
    case StepClass::Alt31: return "alt-3-1";
    case StepClass::Not13: return "not-13";
  }
  return "?";
}

StepClass classify_13_steps(std::span<const int> order) {
  const auto steps = step_sequence(order);
  if (std::any_of(steps.begin(), steps.end(), [](int s) { return s != 1 && s != 3; })) return StepClass::Not13;
  if (std::all_of(steps.begin(), steps.end(), [](int s) { return s == 1; })) return StepClass::AllOnes;
  if (std::all_of(steps.begin(), steps.end(), [](int s) { return s == 3; })) return StepClass::AllThrees;
  const std::size_t n = steps.size();
  if (n % 2 == 0) {
    bool alt13 = true;
    bool alt31 = true;
    for (std::size_t i = 0; i < n; ++i) {
      alt13 = alt13 && steps[i] == (i % 2 == 0 ? 1 : 3);
      alt31 = alt31 && steps[i] == (i % 2 == 0 ? 3 : 1);
    }
    if (alt13) return StepClass::Alt13;
    if (alt31) return StepClass::Alt31;
  }
  throw std::logic_error("classify_13_steps: steps in {1,3} outside the four admissible shapes");
}

std::string_view to_string(InterlacingKind k) {
  switch (k) {
    case InterlacingKind::Four: return "four";
    case InterlacingKind::SixFirst: return "six-first-kind";
    case InterlacingKind::SixSecond: return "six-second-kind";
  }
  return "?";
}

namespace {

bool cyclic_equal(const std::vector<int>& seq, const std::vector<int>& pattern) {
  if (seq.size() != pattern.size()) return false;
  const auto it = std::find(seq.begin(), seq.end(), pattern.front());
  if (it == seq.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - seq.begin());
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[(off + i) % seq.size()] != pattern[i]) return false;
  return true;
}

// Pattern of t's restriction as positions into the tuple (a,b,c,d,e,f).
std::vector<int> pattern_for(InterlacingKind kind, const std::vector<int>& x) {
  switch (kind) {
    case InterlacingKind::Four: return {x[2], x[1], x[0], x[3]};
    case InterlacingKind::SixFirst: return {x[2], x[3], x[0], x[1], x[4], x[5]};
    case InterlacingKind::SixSecond: return {x[0], x[3], x[4], x[1], x[2], x[5]};
  }
  return {};
}

std::optional<InterlacingWitness> match_subset(const OrderedSetPartition& s, const OrderedSetPartition& t,
                                               const std::vector<int>& subset,
                                               std::initializer_list<InterlacingKind> kinds) {
  const auto s_seq = restrict_to(s, subset).sequence();
  const auto t_seq = restrict_to(t, subset).sequence();
  std::optional<InterlacingWitness> best;
  for (std::size_t r = 0; r < s_seq.size(); ++r) {
    std::vector<int> tuple(s_seq.size());
    for (std::size_t i = 0; i < s_seq.size(); ++i) tuple[i] = s_seq[(r + i) % s_seq.size()];
    for (auto kind : kinds) {
      if (cyclic_equal(t_seq, pattern_for(kind, tuple)) && (!best || tuple < best->elements)) {
        best = InterlacingWitness{kind, tuple};
      }
    }
  }
  return best;
}

template <typename F>
bool for_each_subset(const std::vector<int>& ground, std::size_t k, F&& f) {
  if (k > ground.size()) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = ground[idx[i]];
    if (f(subset)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == ground.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<InterlacingWitness> find_interlacing(const OrderedSetPartition& s, const OrderedSetPartition& t) {
  if (!s.nondegenerate() || !t.nondegenerate()) throw std::invalid_argument("find_interlacing: degenerate input");
  if (s.ground() != t.ground()) throw std::invalid_argument("find_interlacing: ground sets differ");
  std::optional<InterlacingWitness> found;
  for_each_subset(s.ground(), 4, [&](const std::vector<int>& sub) {
    found = match_subset(s, t, sub, {InterlacingKind::Four});
    return found.has_value();
  });
  if (found) return found;
  for_each_subset(s.ground(), 6, [&](const std::vector<int>& sub) {
    found = match_subset(s, t, sub, {InterlacingKind::SixFirst, InterlacingKind::SixSecond});
    return found.has_value();
  });
  return found;
}

bool has_four_interlacing(std::span<const int> pos_s, std::span<const int> pos_t) {
  const std::size_t n = pos_s.size() - 1;
  std::vector<int> r(n);
  for (std::size_t x = 1; x <= n; ++x) r[static_cast<std::size_t>(pos_s[x])] = pos_t[x];
  // A 4-subsequence of r taken in s-order is cyclically decreasing iff it
  // has exactly one cyclic ascent.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int ij = r[j] > r[i];
      for (std::size_t k = j + 1; k < n; ++k) {
        const int ijk = ij + (r[k] > r[j]);
        if (ijk > 1) continue;
        for (std::size_t l = k + 1; l < n; ++l) {
          if (ijk + (r[l] > r[k]) + (r[i] > r[l]) == 1) return true;
        }
      }
    }
  }
  return false;
}

namespace {

// Cyclic orders of six s-indices that realize a 6-pattern, keyed by the
// base-6 code of the order rotated to start at 0.
const std::vector<char>& six_pattern_table() {
  static const std::vector<char> table = [] {
    std::vector<char> t(46656, 0);
    const int patterns[2][6] = {{2, 3, 0, 1, 4, 5}, {0, 3, 4, 1, 2, 5}};
    for (const auto& pat : patterns) {
      for (int rho = 0; rho < 6; ++rho) {
        int seq[6];
        for (int i = 0; i < 6; ++i) seq[i] = (pat[i] + rho) % 6;
        int start = 0;
        while (seq[start] != 0) ++start;
        int code = 0;
        for (int i = 0; i < 6; ++i) code = code * 6 + seq[(start + i) % 6];
        t[static_cast<std::size_t>(code)] = 1;
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

bool has_six_interlacing(std::span<const int> pos_s, std::span<const int> pos_t) {
  const std::size_t n = pos_s.size() - 1;
  if (n < 6) return false;
  std::vector<int> r(n);
  for (std::size_t x = 1; x <= n; ++x) r[static_cast<std::size_t>(pos_s[x])] = pos_t[x];
  const auto& table = six_pattern_table();
  std::size_t idx[6] = {0, 1, 2, 3, 4, 5};
  while (true) {
    int order[6] = {0, 1, 2, 3, 4, 5};
    std::sort(order, order + 6, [&](int a, int b) { return r[idx[a]] < r[idx[b]]; });
    int start = 0;
    while (order[start] != 0) ++start;
    int code = 0;
    for (int i = 0; i < 6; ++i) code = code * 6 + order[(start + i) % 6];
    if (table[static_cast<std::size_t>(code)]) return true;
    int i = 5;
    while (i >= 0 && idx[i] == n - 6 + static_cast<std::size_t>(i)) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < 6; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool verify_interlacing(const OrderedSetPartition& s, const OrderedSetPartition& t, const InterlacingWitness& w) {
  const std::size_t want = w.kind == InterlacingKind::Four ? 4 : 6;
  if (w.elements.size() != want) return false;
  const auto s_seq = restrict_to(s, w.elements);
  const auto t_seq = restrict_to(t, w.elements);
  if (!s_seq.nondegenerate() || !t_seq.nondegenerate()) return false;
  return cyclic_equal(s_seq.sequence(), w.elements) && cyclic_equal(t_seq.sequence(), pattern_for(w.kind, w.elements));
}

}  // namespace alcoved
