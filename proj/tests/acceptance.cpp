// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// (rational arithmetic, integer counts); runtimes are reported against their
// budgets but do not decide the verdict.
//
// Usage: acceptance [criterion ...]

#include "alcoved/compat.hpp"
#include "alcoved/families.hpp"
#include "alcoved/geom.hpp"
#include "alcoved/osp.hpp"
#include "alcoved/pdgraph.hpp"
#include "reference.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace alcoved;

namespace {

// Allowed number of mismatches in every exact comparison.
constexpr std::size_t kMismatchTolerance = 0;

constexpr std::uint64_t kSampleSeed = 20240501;
constexpr std::uint64_t kPairSeed = 7777;
constexpr std::size_t kSampleCount = 200;
constexpr std::size_t kPairCount = 20000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

bool oracle_alcoved(const std::vector<OrderedSetPartition>& ps) { return is_alcoved(simplex_sum(ps)).alcoved; }

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

IntVector root(int n, int i, int j) {
  IntVector v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i - 1)] += 1;
  v[static_cast<std::size_t>(j - 1)] -= 1;
  return v;
}

ref::QVec qvec(const IntVector& v) { return ref::QVec(v.begin(), v.end()); }

Outcome pairs_agree(const std::vector<OrderedSetPartition>& all, std::size_t& total) {
  std::size_t mismatches = 0, negative = 0;
  std::string first;
  for (const auto& s : all) {
    for (const auto& t : all) {
      ++total;
      const bool criterion = check_pair(s, t).compatible;
      const bool oracle = oracle_alcoved({s, t});
      negative += !oracle;
      if (criterion != oracle) {
        if (mismatches == 0) first = s.to_string() + " / " + t.to_string();
        ++mismatches;
      }
    }
  }
  std::ostringstream os;
  os << all.front().size() << ": " << mismatches << " mismatches, " << negative << " non-alcoved";
  if (!first.empty()) os << ", first " << first;
  return {mismatches <= kMismatchTolerance, os.str()};
}

Outcome criterion_nondegenerate() {
  Outcome out{true, ""};
  std::size_t total = 0;
  for (int n = 4; n <= 6; ++n) {
    const auto r = pairs_agree(cyclic_orders(n), total);
    out.pass = out.pass && r.pass;
    out.detail += "n=" + r.detail + "; ";
  }
  out.detail += std::to_string(total) + " ordered pairs";
  out.pass = out.pass && total == 36 + 576 + 14400;
  return out;
}

Outcome criterion_degenerate() {
  Outcome out{true, ""};
  std::size_t total = 0;
  for (int n = 4; n <= 5; ++n) {
    const auto r = pairs_agree(normalized_osps(n), total);
    out.pass = out.pass && r.pass;
    out.detail += "n=" + r.detail + "; ";
  }
  out.detail += std::to_string(total) + " ordered pairs";
  out.pass = out.pass && total == 26 * 26 + 150 * 150;
  return out;
}

Outcome criterion_callan() {
  Outcome out{true, "counts"};
  for (int n = 4; n <= 10; ++n) {
    const auto got = count_compatible_with_standard(n, CountMode::FourOnly);
    out.detail += " " + std::to_string(got);
    if (got != static_cast<std::uint64_t>(ref::callan(n))) out.pass = false;
    // Independent subset scan for the pattern, up to n=9.
    if (n <= 9) {
      std::uint64_t avoiders = 0;
      for (const auto& t : cyclic_orders(n)) avoiders += !ref::contains_cyclic_pattern(t.sequence(), {1, 4, 3, 2});
      if (avoiders != got) out.pass = false;
    }
  }
  out.detail += " for n=4..10, closed form 2^n+1-2n-C(n,3); subset scan agrees for n<=9";
  return out;
}

// Relabel i -> i+k mod n, then rotate so n is last.
std::vector<int> shift(const std::vector<int>& order, int k) {
  const int n = static_cast<int>(order.size());
  std::vector<int> v;
  for (int x : order) v.push_back((x - 1 + k) % n + 1);
  std::rotate(v.begin(), std::find(v.begin(), v.end(), n) + 1, v.end());
  return v;
}

Outcome criterion_census_six() {
  const auto census = census_with_standard(6, CountMode::Full);
  std::set<std::vector<int>> expected;
  for (const auto& base : {std::vector<int>{3, 4, 1, 2, 5, 6}, std::vector<int>{1, 4, 5, 2, 3, 6}})
    for (int k = 0; k < 6; ++k) expected.insert(shift(base, k));

  // Oracle route: count alcoved sums with the standard simplex, and collect
  // the orders that avoid 1432 cyclically yet fail the oracle.
  const auto standard = OrderedSetPartition::from_sequence(iota_vec(6));
  std::uint64_t oracle_count = 0;
  std::set<std::vector<int>> oracle_six_only;
  for (const auto& t : cyclic_orders(6)) {
    const bool ok = oracle_alcoved({standard, t});
    oracle_count += ok;
    if (!ok && !ref::contains_cyclic_pattern(t.sequence(), {1, 4, 3, 2})) oracle_six_only.insert(t.sequence());
  }
  const std::set<std::vector<int>> lib(census.six_only.begin(), census.six_only.end());
  std::ostringstream os;
  os << "full count " << census.count << ", oracle count " << oracle_count << ", 6-only orders " << lib.size()
     << " (shift classes " << expected.size() << ", oracle " << oracle_six_only.size() << ")";
  return {census.count == 31 && oracle_count == 31 && lib == expected && oracle_six_only == expected, os.str()};
}

Outcome criterion_theorem_a() {
  const auto samples = sample_collections(kSampleCount, 3, 6, 5, kSampleSeed, true);
  std::size_t violations = 0, not_pairwise = 0, larger = 0;
  for (const auto& c : samples) {
    if (!check_collection(c.summands).compatible) ++not_pairwise;
    if (!oracle_alcoved(c.summands)) ++violations;
    larger += c.summands.size() >= 3;
  }
  std::ostringstream os;
  os << samples.size() << " collections (" << larger << " with 3 to 5 summands), " << violations
     << " violations, seed " << kSampleSeed;
  return {samples.size() == kSampleCount && not_pairwise == 0 && violations <= kMismatchTolerance, os.str()};
}

Outcome criterion_families() {
  std::size_t pairwise_runs = 0, oracle_runs = 0, failures = 0;
  for (Family f : {Family::Associahedron, Family::Cyclohedron, Family::Dhat, Family::Pellytope}) {
    for (int n = 2; n <= 9; ++n) {
      const auto spec = make_family(f, n);
      ++pairwise_runs;
      if (!verify_family(spec, VerifyMode::Pairwise).verdict.compatible) ++failures;
      if (n <= 6) {
        ++oracle_runs;
        if (!verify_family(spec, VerifyMode::Oracle).verdict.compatible) ++failures;
      }
    }
  }
  FamilySpec control{"control", 4, {parse_osp("1|2|3|4"), parse_osp("3|2|1|4")}};
  const auto r = verify_family(control, VerifyMode::Oracle);
  const auto* w = std::get_if<FacetWitness>(&r.verdict.witness);
  const IntVector fig{1, -1, 1, -1}, neg{-1, 1, -1, 1};
  const bool control_ok = !r.verdict.compatible && w && !w->lineality && !w->is_root &&
                          (w->normal == fig || w->normal == neg) &&
                          !verify_family(control, VerifyMode::Pairwise).verdict.compatible;
  std::ostringstream os;
  os << pairwise_runs << " pairwise and " << oracle_runs << " oracle runs, " << failures << " failures; control normal ";
  if (w)
    for (auto x : w->normal) os << x << ' ';
  return {failures == 0 && control_ok, os.str()};
}

Outcome criterion_example_cones() {
  const auto s = parse_root_cone("1>2 2>3 3>4", 4);
  const auto t = parse_root_cone("1>4 2>1 3>2", 4);
  const auto r = intersect_root_cones(s, t);
  IntVector e12_34 = root(4, 1, 2);
  e12_34[2] += 1;
  e12_34[3] -= 1;
  const std::set<IntVector> expected{root(4, 1, 4), root(4, 2, 4), root(4, 3, 4), e12_34};
  const std::set<IntVector> got(r.rays.begin(), r.rays.end());

  // Double description on the two generator sets.
  ref::QMat gs, gt;
  for (auto [i, j] : s.generators) gs.push_back(qvec(root(4, i, j)));
  for (auto [i, j] : t.generators) gt.push_back(qvec(root(4, i, j)));
  std::set<IntVector> dd;
  for (const auto& v : ref::intersection_rays(gs, gt, 4)) dd.insert(IntVector(v.begin(), v.end()));

  std::ostringstream os;
  os << got.size() << " rays, is_root_cone=" << (r.is_root_cone ? "true" : "false") << ", DD rays " << dd.size();
  return {got == expected && dd == expected && !r.is_root_cone && r.witness && r.witness->length() == 4, os.str()};
}

// Intersection of two spans, computed from the kernel of [A | -B].
ref::QMat span_intersection(const ref::QMat& a, const ref::QMat& b, std::size_t n) {
  ref::QMat m(n, ref::QVec(a.size() + b.size(), 0));
  for (std::size_t c = 0; c < a.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) m[r][c] = a[c][r];
  for (std::size_t c = 0; c < b.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) m[r][a.size() + c] = -b[c][r];
  ref::QMat out;
  for (const auto& k : ref::kernel(m, a.size() + b.size())) {
    ref::QVec v(n, 0);
    for (std::size_t c = 0; c < a.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) v[r] += k[c] * a[c][r];
    out.push_back(v);
  }
  ref::reduce(out, n);
  return out;
}

Outcome criterion_non_reduction() {
  IntVector e12_34 = root(4, 1, 2);
  e12_34[2] += 1;
  e12_34[3] -= 1;
  bool ok = !is_root_subspace({e12_34});
  std::ostringstream os;
  os << "span{e12+e34} root=" << (ok ? "false" : "true") << ";";
  for (int m = 2; m <= 4; ++m) {
    const int n = 2 * m;
    RootCone l1{n, {}, {}}, l2{n, {}, {}};
    ref::QMat b1, b2;
    for (int i = 1; i <= m; ++i) {
      l1.lineality_pairs.emplace_back(2 * i - 1, 2 * i);
      b1.push_back(qvec(root(n, 2 * i - 1, 2 * i)));
      const int a = 2 * i, b = 2 * i == n ? 1 : 2 * i + 1;
      l2.lineality_pairs.emplace_back(a, b);
      b2.push_back(qvec(root(n, a, b)));
    }
    const auto g1 = cone_graph(l1);
    const auto g2 = cone_graph(l2);
    const auto cycle = find_chordless_cycle_ge4(g1, g2);
    const bool full_cycle = cycle && cycle->length() == static_cast<std::size_t>(n);

    // Linear algebra: the intersection is the line through sum e_{2i-1,2i}.
    const auto meet = span_intersection(b1, b2, static_cast<std::size_t>(n));
    IntVector line(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = i % 2 == 0 ? 1 : -1;
    const bool line_ok = meet.size() == 1 && ref::rank_of({meet[0], qvec(line)}, static_cast<std::size_t>(n)) == 1 &&
                         !is_root_subspace({line});

    // Every proper vertex subset: no cycle, and the restricted spans meet in
    // a root subspace.
    std::size_t subsets = 0, bad = 0;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> subset;
      for (int v = 1; v <= n; ++v)
        if (mask & (1u << (v - 1))) subset.push_back(v);
      ++subsets;
      const bool lib_cycle = find_chordless_cycle_ge4(induced_subgraph(g1, subset), induced_subgraph(g2, subset)).has_value();
      auto restricted = [&](const RootCone& c) {
        ref::QMat out;
        for (auto [i, j] : c.lineality_pairs)
          if (std::binary_search(subset.begin(), subset.end(), i) && std::binary_search(subset.begin(), subset.end(), j))
            out.push_back(qvec(root(n, i, j)));
        return out;
      };
      const auto r1 = restricted(l1), r2 = restricted(l2);
      bool meet_root = true;
      if (!r1.empty() && !r2.empty()) {
        std::vector<IntVector> ints;
        for (const auto& v : span_intersection(r1, r2, static_cast<std::size_t>(n))) {
          const auto iv = ref::integral(v);
          ints.emplace_back(iv.begin(), iv.end());
        }
        meet_root = is_root_subspace(ints);
      }
      if (lib_cycle || !meet_root) ++bad;
    }
    ok = ok && full_cycle && line_ok && bad == 0;
    os << " 2n=" << n << ": cycle length " << (cycle ? cycle->length() : 0) << ", " << subsets << " proper subsets, "
       << bad << " with a cycle;";
  }
  return {ok, os.str()};
}

Outcome criterion_theorem_b() {
  std::mt19937_64 rng(kPairSeed);
  PairCheckOptions restriction;
  restriction.fast_path = false;
  std::size_t mismatches = 0, negative = 0;
  std::string first;
  for (std::size_t trial = 0; trial < kPairCount; ++trial) {
    auto a = iota_vec(7), b = iota_vec(7);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const auto s = OrderedSetPartition::from_sequence(a);
    const auto t = OrderedSetPartition::from_sequence(b);
    const bool via_restriction = check_pair(s, t, restriction).compatible;
    const bool direct = !find_violating_cycle(union_upper_lower(graph_of_osp(s), graph_of_osp(t))).has_value();
    negative += !direct;
    if (via_restriction != direct) {
      if (mismatches == 0) first = s.to_string() + " / " + t.to_string();
      ++mismatches;
    }
  }
  std::ostringstream os;
  os << kPairCount << " pairs, " << negative << " incompatible, " << mismatches << " mismatches, seed " << kPairSeed;
  if (!first.empty()) os << ", first " << first;
  return {mismatches <= kMismatchTolerance, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "oracle vs criterion, all cyclic pairs n=4,5,6", 600, criterion_nondegenerate},
      {2, "oracle vs criterion, all normalized pairs n=4,5", 300, criterion_degenerate},
      {3, "1432-avoiding counts n=4..10", 120, criterion_callan},
      {4, "n=6 full census and 6-interlaced orders", 600, criterion_census_six},
      {5, "sampled pairwise-compatible collections are alcoved", 600, criterion_theorem_a},
      {6, "families pairwise n<=9, oracle n<=6, negative control", 1800, criterion_families},
      {7, "root-cone intersection example", 60, criterion_example_cones},
      {8, "non-reduction for general root subspaces", 60, criterion_non_reduction},
      {9, "restriction check vs direct violating cycle, n=7", 300, criterion_theorem_b},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("%s %d %s: %s [%.1fs, budget %.0fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs,
                c.budget_seconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
