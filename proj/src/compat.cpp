#include "alcoved/compat.hpp"

#include "alcoved/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace alcoved {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Interlacing: return "interlacing";
    case Method::Restriction: return "restriction";
    case Method::ViolatingCycle: return "violating-cycle";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

std::string_view to_string(CountMode m) { return m == CountMode::FourOnly ? "four-only" : "full"; }

std::optional<Verdict> SmallPairCache::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  const auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void SmallPairCache::insert(const std::string& key, const Verdict& v) {
  std::lock_guard lock(mutex_);
  map_.emplace(key, v);
}

std::size_t SmallPairCache::size() const {
  std::lock_guard lock(mutex_);
  return map_.size();
}

SmallPairCache& default_small_pair_cache() {
  static SmallPairCache cache;
  return cache;
}

namespace {

OrderedSetPartition relabel(const OrderedSetPartition& p, const std::vector<int>& ground) {
  std::vector<Block> blocks;
  for (const auto& b : p.blocks()) {
    Block nb;
    for (int x : b)
      nb.push_back(static_cast<int>(std::lower_bound(ground.begin(), ground.end(), x) - ground.begin()) + 1);
    blocks.push_back(std::move(nb));
  }
  return OrderedSetPartition(std::move(blocks));
}

void map_labels(Verdict& v, const std::vector<int>& ground) {
  auto lift = [&](int x) { return ground[static_cast<std::size_t>(x - 1)]; };
  if (auto* c = std::get_if<CycleWitness>(&v.witness)) {
    for (auto& e : c->edges) {
      e.from = lift(e.from);
      e.to = lift(e.to);
    }
    for (auto& x : c->vertex_sequence) x = lift(x);
  }
  v.subset = ground;
}

Verdict small_cached(const OrderedSetPartition& s, const OrderedSetPartition& t, const PairCheckOptions& options) {
  const auto& ground = s.ground();
  const auto rs = relabel(s, ground);
  const auto rt = relabel(t, ground);
  const std::string key = rs.to_string() + "#" + rt.to_string();
  std::optional<Verdict> v;
  if (options.cache) v = options.cache->find(key);
  if (!v) {
    v = check_pair_small(rs, rt, options.small_bound);
    if (options.cache) options.cache->insert(key, *v);
  }
  map_labels(*v, ground);
  return *v;
}

template <typename F>
bool for_each_k_subset(const std::vector<int>& ground, std::size_t k, F&& f) {
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

bool cycle_in_graph(const PartiallyDirectedGraph& g, const CycleWitness& c) {
  if (!is_closed(c) || c.edges.empty()) return false;
  std::vector<int> seen = c.vertex_sequence;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (const auto& e : c.edges) {
    if (e.layer == Layer::Plain) return false;
    if (e.directed ? !g.has_edge(e.from, e.to, true, e.layer) : !g.has_edge(e.from, e.to, false, e.layer)) return false;
  }
  return true;
}

}  // namespace

Verdict check_pair_small(const OrderedSetPartition& s, const OrderedSetPartition& t, std::size_t small_bound) {
  if (s.ground() != t.ground()) throw std::invalid_argument("check_pair_small: ground sets differ");
  if (s.size() > small_bound)
    throw std::domain_error("check_pair_small: ground set of size " + std::to_string(s.size()) +
                            " exceeds the bound " + std::to_string(small_bound));
  const auto g = union_upper_lower(graph_of_osp(s), graph_of_osp(t));
  Verdict v;
  v.method = Method::ViolatingCycle;
  v.subset = s.ground();
  ViolatingSearchOptions opts;
  opts.max_vertices = small_bound;
  if (auto c = find_violating_cycle(g, opts)) {
    v.compatible = false;
    v.witness = std::move(*c);
  }
  return v;
}

Verdict check_pair(const OrderedSetPartition& s, const OrderedSetPartition& t, const PairCheckOptions& options) {
  if (s.ground() != t.ground()) throw std::invalid_argument("check_pair: ground sets differ");
  Verdict v;
  if (options.fast_path && s.nondegenerate() && t.nondegenerate()) {
    v.method = Method::Interlacing;
    if (auto w = find_interlacing(s, t)) {
      v.compatible = false;
      v.witness = std::move(*w);
    }
    return v;
  }
  v.method = Method::Restriction;
  const auto& ground = s.ground();
  for (std::size_t k = 4; k <= std::min<std::size_t>(6, ground.size()); ++k) {
    const bool failed = for_each_k_subset(ground, k, [&](const std::vector<int>& subset) {
      Verdict small = small_cached(restrict_to(s, subset), restrict_to(t, subset), options);
      if (small.compatible) return false;
      v.compatible = false;
      v.witness = std::move(small.witness);
      v.subset = subset;
      return true;
    });
    if (failed) break;
  }
  return v;
}

Verdict check_collection(const std::vector<OrderedSetPartition>& ps, unsigned jobs, const PairCheckOptions& options) {
  for (const auto& p : ps)
    if (p.ground() != ps.front().ground()) throw std::invalid_argument("check_collection: ground sets differ");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) pairs.emplace_back(i, j);
  std::vector<std::optional<Verdict>> results(pairs.size());
  std::atomic<std::size_t> first_fail{std::numeric_limits<std::size_t>::max()};
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    if (k > first_fail.load()) return;
    auto v = check_pair(ps[pairs[k].first], ps[pairs[k].second], options);
    if (!v.compatible) {
      std::size_t cur = first_fail.load();
      while (k < cur && !first_fail.compare_exchange_weak(cur, k)) {
      }
    }
    results[k] = std::move(v);
  });
  const std::size_t f = first_fail.load();
  if (f == std::numeric_limits<std::size_t>::max()) {
    Verdict v;
    v.method = ps.size() >= 2 ? results.front()->method : Method::Restriction;
    return v;
  }
  Verdict v = std::move(*results[f]);
  v.pair = pairs[f];
  return v;
}

Verdict oracle_verdict(const std::vector<OrderedSetPartition>& ps, bool prune) {
  Verdict v;
  v.method = Method::Oracle;
  if (ps.empty()) return v;
  const auto result = is_alcoved(simplex_sum(ps, prune));
  v.compatible = result.alcoved;
  if (result.witness) v.witness = *result.witness;
  return v;
}

bool recheck_witness(const OrderedSetPartition& s, const OrderedSetPartition& t, const Verdict& v) {
  if (v.compatible) return true;
  if (const auto* w = std::get_if<InterlacingWitness>(&v.witness)) return verify_interlacing(s, t, *w);
  if (const auto* c = std::get_if<CycleWitness>(&v.witness)) {
    const std::vector<int> subset = v.subset.empty() ? s.ground() : v.subset;
    const auto rs = restrict_to(s, subset);
    const auto rt = restrict_to(t, subset);
    const auto g = union_upper_lower(graph_of_osp(rs), graph_of_osp(rt));
    return cycle_in_graph(g, *c) && upper_segment_count(*c) >= 2 && certify_violating_cycle(g, *c);
  }
  if (const auto* f = std::get_if<FacetWitness>(&v.witness)) {
    const auto result = is_alcoved(simplex_sum({s, t}));
    if (result.alcoved) return false;
    if (f->lineality) return true;
    return std::any_of(result.facets.begin(), result.facets.end(),
                       [&](const FacetWitness& g) { return g.normal == f->normal && !g.is_root; });
  }
  return false;
}

std::vector<OrderedSetPartition> normalized_osps(int n) {
  if (n < 1) throw std::invalid_argument("normalized_osps: n must be positive");
  std::vector<OrderedSetPartition> out;
  // Restricted growth strings give the set partitions of [n].
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&](int blocks) {
    std::vector<Block> parts(static_cast<std::size_t>(blocks));
    for (int x = 1; x <= n; ++x) parts[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x - 1)])].push_back(x);
    const int last = rgs[static_cast<std::size_t>(n - 1)];
    std::vector<Block> others;
    for (int b = 0; b < blocks; ++b)
      if (b != last) others.push_back(parts[static_cast<std::size_t>(b)]);
    std::sort(others.begin(), others.end());
    do {
      auto bl = others;
      bl.push_back(parts[static_cast<std::size_t>(last)]);
      out.emplace_back(std::move(bl));
    } while (std::next_permutation(others.begin(), others.end()));
  };
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      emit(blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderedSetPartition> cyclic_orders(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_orders: n must be positive");
  std::vector<int> perm(static_cast<std::size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<OrderedSetPartition> out;
  do {
    auto seq = perm;
    seq.push_back(n);
    out.push_back(OrderedSetPartition::from_sequence(seq));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Census census_with_standard(int n, CountMode mode, int bound, unsigned jobs) {
  if (n < 3) throw std::invalid_argument("census: n must be at least 3");
  if (n > bound) throw std::domain_error("census: n=" + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
  std::vector<std::vector<int>> orders;
  std::vector<int> perm(static_cast<std::size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    auto seq = perm;
    seq.push_back(n);
    orders.push_back(std::move(seq));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> pos_s(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 1; x <= n; ++x) pos_s[static_cast<std::size_t>(x)] = x - 1;

  const std::size_t chunk = 4096;
  const std::size_t chunks = (orders.size() + chunk - 1) / chunk;
  std::vector<std::uint64_t> counts(chunks, 0);
  std::vector<std::vector<std::size_t>> six(chunks);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    std::vector<int> pos_t(static_cast<std::size_t>(n) + 1, 0);
    const std::size_t end = std::min(orders.size(), (c + 1) * chunk);
    for (std::size_t i = c * chunk; i < end; ++i) {
      for (int p = 0; p < n; ++p) pos_t[static_cast<std::size_t>(orders[i][static_cast<std::size_t>(p)])] = p;
      const bool four = has_four_interlacing(pos_s, pos_t);
      if (mode == CountMode::FourOnly) {
        counts[c] += four ? 0 : 1;
        continue;
      }
      if (four) continue;
      if (has_six_interlacing(pos_s, pos_t)) {
        six[c].push_back(i);
      } else {
        ++counts[c];
      }
    }
  });
  Census out;
  out.total = orders.size();
  for (std::size_t c = 0; c < chunks; ++c) {
    out.count += counts[c];
    for (auto i : six[c]) out.six_only.push_back(orders[i]);
  }
  return out;
}

std::uint64_t count_compatible_with_standard(int n, CountMode mode, int bound, unsigned jobs) {
  return census_with_standard(n, mode, bound, jobs).count;
}

std::vector<SampledCollection> sample_collections(std::size_t count, int min_n, int max_n, std::size_t max_k,
                                                  std::uint64_t seed, bool compatible_only) {
  if (min_n < 1 || max_n < min_n || max_k < 2) throw std::invalid_argument("sample_collections: bad ranges");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<OrderedSetPartition>> pools(static_cast<std::size_t>(max_n) + 1);
  std::vector<SampledCollection> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, max_k)(rng);
    auto& pool = pools[static_cast<std::size_t>(n)];
    if (pool.empty()) pool = normalized_osps(n);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    SampledCollection sc{n, {}};
    for (std::size_t i = 0; i < k; ++i) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        const auto& cand = pool[pick(rng)];
        const bool ok = !compatible_only || std::all_of(sc.summands.begin(), sc.summands.end(), [&](const auto& p) {
          return check_pair(p, cand).compatible;
        });
        if (ok) {
          sc.summands.push_back(cand);
          break;
        }
      }
    }
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace alcoved
