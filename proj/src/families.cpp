#include "alcoved/families.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>

namespace alcoved {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Associahedron: return "associahedron";
    case Family::Cyclohedron: return "cyclohedron";
    case Family::Dhat: return "dhat";
    case Family::Pellytope: return "pellytope";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Associahedron, Family::Cyclohedron, Family::Dhat, Family::Pellytope})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

std::string_view to_string(VerifyMode m) { return m == VerifyMode::Pairwise ? "pairwise" : "oracle"; }

namespace {

void require(int n, int min, const char* what) {
  if (n < min) throw std::invalid_argument(std::string(what) + ": n must be at least " + std::to_string(min));
}

int wrap(int x, int m) { return ((x - 1) % m + m) % m + 1; }

}  // namespace

std::vector<OrderedSetPartition> cyclohedron_summands(int n) {
  require(n, 2, "cyclohedron_summands");
  std::vector<OrderedSetPartition> out;
  std::vector<int> standard(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) standard[static_cast<std::size_t>(i)] = i + 1;
  out.push_back(OrderedSetPartition::from_sequence(standard));
  for (int len = 2; len <= n - 1; ++len) {
    for (int a = 1; a <= n; ++a) {
      std::vector<Block> blocks;
      Block big;
      for (int i = 0; i < len; ++i) big.push_back(wrap(a + i, n));
      blocks.push_back(std::move(big));
      for (int i = len; i < n; ++i) blocks.push_back({wrap(a + i, n)});
      out.push_back(normalize_cyclic(OrderedSetPartition(std::move(blocks))));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderedSetPartition> associahedron_summands(int n) {
  require(n, 2, "associahedron_summands");
  std::vector<OrderedSetPartition> out;
  for (auto& p : cyclohedron_summands(n)) {
    if (p.nondegenerate() || p.blocks()[static_cast<std::size_t>(p.block_of(n))].size() > 1) out.push_back(std::move(p));
  }
  return out;
}

std::vector<OrderedSetPartition> dhat_summands(int n, bool dedup) {
  require(n, 2, "dhat_summands");
  const int m = n - 1;
  std::vector<OrderedSetPartition> out;
  for (int s = 1; s <= m; ++s) {
    for (int t = 1; t <= m; ++t) {
      const int len = (t - s + m) % m + 1;  // size of the cyclic interval [s,t]
      std::vector<Block> blocks;
      Block first;
      for (int i = 0; i < len; ++i) first.push_back(wrap(s + i, m));
      first.push_back(n);
      blocks.push_back(std::move(first));
      for (int i = len; i < m; ++i) blocks.push_back({wrap(s + i, m)});
      out.push_back(normalize_cyclic(OrderedSetPartition(std::move(blocks))));
    }
  }
  if (dedup) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::vector<OrderedSetPartition> pellytope_summands(int n) {
  require(n, 1, "pellytope_summands");
  const int top = n + 1;
  std::vector<OrderedSetPartition> out;
  auto rest_without = [&](std::initializer_list<int> skip) {
    Block rest;
    for (int x = 1; x <= top; ++x)
      if (std::find(skip.begin(), skip.end(), x) == skip.end()) rest.push_back(x);
    return rest;
  };
  for (int i = 1; i <= n; ++i) out.push_back(OrderedSetPartition(std::vector<Block>{{i}, rest_without({i})}));
  for (int j = 1; j <= n - 1; ++j) out.push_back(OrderedSetPartition(std::vector<Block>{{j}, {j + 1}, rest_without({j, j + 1})}));
  return out;
}

FamilySpec make_family(Family f, int n, bool dedup) {
  FamilySpec spec{std::string(to_string(f)), n, {}};
  switch (f) {
    case Family::Associahedron: spec.summands = associahedron_summands(n); break;
    case Family::Cyclohedron: spec.summands = cyclohedron_summands(n); break;
    case Family::Dhat: spec.summands = dhat_summands(n, dedup); break;
    case Family::Pellytope: spec.summands = pellytope_summands(n); break;
  }
  return spec;
}

int oracle_bound_from_env() {
  if (const char* v = std::getenv("ALCOVED_ORACLE_BOUND")) {
    char* end = nullptr;
    const long b = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && b > 0 && b < 64) return static_cast<int>(b);
  }
  return kDefaultOracleBound;
}

FamilyReport verify_family(const FamilySpec& spec, VerifyMode mode, int oracle_bound, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  FamilyReport report;
  report.spec = spec;
  report.mode = mode;
  if (mode == VerifyMode::Pairwise) {
    report.verdict = check_collection(spec.summands, jobs);
    const std::size_t k = spec.summands.size();
    report.pairs_checked = k * (k > 0 ? k - 1 : 0) / 2;
  } else {
    if (spec.n > oracle_bound)
      throw std::domain_error("verify_family: n=" + std::to_string(spec.n) + " exceeds the oracle bound " +
                              std::to_string(oracle_bound));
    report.verdict.method = Method::Oracle;
    if (!spec.summands.empty()) {
      const auto sum = simplex_sum(spec.summands, true);
      report.vertices = sum.points.size();
      const auto result = is_alcoved(sum);
      report.verdict.compatible = result.alcoved;
      if (result.witness) report.verdict.witness = *result.witness;
      report.hrep = result.hrep;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace alcoved
