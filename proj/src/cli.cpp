#include "alcoved/cli.hpp"

#include "alcoved/compat.hpp"
#include "alcoved/families.hpp"
#include "alcoved/geom.hpp"
#include "alcoved/parallel.hpp"
#include "alcoved/pdgraph.hpp"
#include "alcoved/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace alcoved::cli {

namespace {

using report::Json;

struct Globals {
  std::string format = "json";
  unsigned jobs = 1;
  int oracle_bound = 0;  // 0: environment or default

  bool json() const { return format == "json"; }
  int bound() const { return oracle_bound > 0 ? oracle_bound : oracle_bound_from_env(); }
};

void add_globals(CLI::App& app, Globals& g) {
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--oracle-bound", g.oracle_bound, "Largest n for oracle runs (overrides ALCOVED_ORACLE_BOUND)")
      ->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// One partition per line; blank lines and lines starting with '#' are skipped.
std::vector<OrderedSetPartition> read_osp_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<OrderedSetPartition> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_osp(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<OrderedSetPartition> parse_all(const std::vector<std::string>& texts) {
  std::vector<OrderedSetPartition> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_osp(t));
  return out;
}

void require_bound(int n, int bound) {
  if (n > bound)
    throw std::domain_error("n=" + std::to_string(n) + " exceeds the oracle bound " + std::to_string(bound) +
                            " (set --oracle-bound or ALCOVED_ORACLE_BOUND)");
}

int max_label(const std::vector<OrderedSetPartition>& ps) {
  int n = 0;
  for (const auto& p : ps) n = std::max(n, p.max_element());
  return n;
}

/// Progress lines on stderr, roughly every tenth of the run.
class Progress {
 public:
  Progress(std::ostream& err, std::string label, std::size_t total)
      : err_(err), label_(std::move(label)), total_(total), step_(std::max<std::size_t>(1, total / 10)) {}

  void tick() {
    const std::size_t done = ++done_;
    if (total_ < 1000 || (done % step_ != 0 && done != total_)) return;
    std::lock_guard lock(mutex_);
    err_ << label_ << ": " << done << "/" << total_ << "\n";
  }

 private:
  std::ostream& err_;
  std::string label_;
  std::size_t total_;
  std::size_t step_;
  std::atomic<std::size_t> done_{0};
  std::mutex mutex_;
};

void emit(std::ostream& out, const Globals& g, const Json& j, const std::string& text) {
  if (g.json()) {
    out << j.dump() << "\n";
  } else {
    out << text;
  }
}

// ---- check-pair / check-collection ---------------------------------------

int cmd_check_pair(const Globals& g, const std::string& a, const std::string& b, bool fast_path, std::ostream& out) {
  const auto s = parse_osp(a);
  const auto t = parse_osp(b);
  if (s.ground() != t.ground()) throw std::invalid_argument("partitions have different ground sets");
  PairCheckOptions options;
  options.fast_path = fast_path;
  const auto v = check_pair(s, t, options);
  emit(out, g, report::to_json(v), report::verdict_text(v));
  return v.compatible ? kOk : kNegative;
}

int cmd_check_collection(const Globals& g, const std::string& path, bool fast_path, std::ostream& out,
                         std::ostream& err) {
  const auto ps = read_osp_file(path);
  if (ps.empty()) err << "warning: " << path << " holds no partitions\n";
  PairCheckOptions options;
  options.fast_path = fast_path;
  const auto v = check_collection(ps, g.jobs, options);
  Json j = report::to_json(v);
  j["summands"] = ps.size();
  if (v.pair) j["failing_pair"] = {ps[v.pair->first].to_string(), ps[v.pair->second].to_string()};
  std::string text = report::verdict_text(v);
  if (v.pair) text += "failing pair: " + ps[v.pair->first].to_string() + " / " + ps[v.pair->second].to_string() + "\n";
  emit(out, g, j, text);
  return v.compatible ? kOk : kNegative;
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
  std::vector<std::string> osps;
  std::string file;
  std::string polytope;
  bool dump = false;
  bool compare = false;
  int all_cyclic = 0;
  int all_normalized = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  int n = 0;
  std::size_t max_k = 5;
  bool compatible_only = false;
};

struct Comparison {
  bool criterion = true;
  bool oracle = true;
  Verdict verdict;
};

Comparison compare_collection(const std::vector<OrderedSetPartition>& ps) {
  Comparison c;
  c.verdict = check_collection(ps);
  c.criterion = c.verdict.compatible;
  c.oracle = ps.empty() || is_alcoved(simplex_sum(ps, true)).alcoved;
  return c;
}

/// Runs the criterion and the oracle on every collection, prints one line per
/// disagreement and a summary line.
int run_bulk(const Globals& g, const std::string& label, const std::vector<std::vector<OrderedSetPartition>>& cs,
             std::ostream& out, std::ostream& err) {
  std::vector<Comparison> results(cs.size());
  Progress progress(err, label, cs.size());
  parallel_for(cs.size(), g.jobs, [&](std::size_t i) {
    results[i] = compare_collection(cs[i]);
    progress.tick();
  });
  std::size_t compatible = 0;
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& r = results[i];
    if (r.criterion) ++compatible;
    if (r.criterion == r.oracle) continue;
    ++disagreements;
    Json summands = Json::array();
    std::string text = "disagreement:";
    for (const auto& p : cs[i]) {
      summands.push_back(p.to_string());
      text += " [" + p.to_string() + "]";
    }
    text += " criterion=" + std::string(r.criterion ? "compatible" : "incompatible") +
            " oracle=" + (r.oracle ? "alcoved" : "not-alcoved") + "\n";
    emit(out, g,
         Json{{"disagreement", true},
              {"index", i},
              {"summands", std::move(summands)},
              {"criterion", report::to_json(r.verdict)},
              {"oracle_alcoved", r.oracle}},
         text);
  }
  emit(out, g,
       Json{{"run", label},
            {"collections", cs.size()},
            {"compatible", compatible},
            {"agree", cs.size() - disagreements},
            {"disagree", disagreements}},
       label + ": " + std::to_string(cs.size()) + " collections, " + std::to_string(compatible) + " compatible, " +
           std::to_string(disagreements) + " disagreements\n");
  return disagreements == 0 ? kOk : kDisagreement;
}

std::vector<std::vector<OrderedSetPartition>> all_pairs(const std::vector<OrderedSetPartition>& ps) {
  std::vector<std::vector<OrderedSetPartition>> out;
  out.reserve(ps.size() * ps.size());
  for (const auto& s : ps)
    for (const auto& t : ps) out.push_back({s, t});
  return out;
}

int cmd_oracle(const Globals& g, const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const int bound = g.bound();
  const int bulk_modes = (a.all_cyclic > 0) + (a.all_normalized > 0) + (a.sample > 0);
  if (bulk_modes > 1) throw std::invalid_argument("oracle: choose one of --all-cyclic, --all-normalized, --sample");
  if (bulk_modes == 1) {
    if (!a.osps.empty() || !a.file.empty() || !a.polytope.empty())
      throw std::invalid_argument("oracle: bulk runs take no partitions");
    if (!a.compare) throw std::invalid_argument("oracle: bulk runs require --compare");
    if (a.all_cyclic > 0) {
      require_bound(a.all_cyclic, bound);
      return run_bulk(g, "all-cyclic n=" + std::to_string(a.all_cyclic), all_pairs(cyclic_orders(a.all_cyclic)), out,
                      err);
    }
    if (a.all_normalized > 0) {
      require_bound(a.all_normalized, bound);
      return run_bulk(g, "all-normalized n=" + std::to_string(a.all_normalized),
                      all_pairs(normalized_osps(a.all_normalized)), out, err);
    }
    if (a.n < 1) throw std::invalid_argument("oracle: --sample needs --n");
    require_bound(a.n, bound);
    std::vector<std::vector<OrderedSetPartition>> cs;
    for (auto& sc : sample_collections(a.sample, std::min(4, a.n), a.n, a.max_k, a.seed, a.compatible_only))
      cs.push_back(std::move(sc.summands));
    return run_bulk(g, "sample seed=" + std::to_string(a.seed), cs, out, err);
  }

  VPolytope sum;
  std::vector<OrderedSetPartition> ps;
  if (!a.polytope.empty()) {
    if (!a.osps.empty() || !a.file.empty()) throw std::invalid_argument("oracle: --polytope excludes partitions");
    if (a.compare) throw std::invalid_argument("oracle: --compare needs partitions");
    sum = parse_polytope(read_file(a.polytope));
    require_bound(sum.n, bound);
  } else {
    ps = parse_all(a.osps);
    if (!a.file.empty()) {
      auto more = read_osp_file(a.file);
      ps.insert(ps.end(), more.begin(), more.end());
    }
    if (ps.empty()) throw std::invalid_argument("oracle: no partitions given");
    require_bound(max_label(ps), bound);
    sum = simplex_sum(ps, true);
  }
  if (a.dump) {
    out << dump_polytope(sum);
    return kOk;
  }
  const auto result = is_alcoved(sum);
  Json j = report::oracle_json(sum, result);
  std::string text = report::oracle_text(sum, result);
  int code = result.alcoved ? kOk : kNegative;
  if (a.compare) {
    const auto v = check_collection(ps, g.jobs);
    const bool agree = v.compatible == result.alcoved;
    j["criterion"] = report::to_json(v);
    j["agree"] = agree;
    text += "criterion: " + report::verdict_text(v);
    text += agree ? "agreement\n" : "DISAGREEMENT\n";
    if (!agree) code = kDisagreement;
  }
  emit(out, g, j, text);
  return code;
}

// ---- count / family / cones / enumerate ----------------------------------

int cmd_count(const Globals& g, int n, const std::string& mode_name, int bound, std::ostream& out,
              std::ostream& err) {
  const CountMode mode = mode_name == "full" ? CountMode::Full : CountMode::FourOnly;
  err << "count: enumerating cyclic orders of [" << n << "]\n";
  const auto c = census_with_standard(n, mode, bound, g.jobs);
  Json six = Json::array();
  std::string text = std::to_string(c.count) + "\n";
  for (const auto& o : c.six_only) {
    six.push_back(o);
    text += "six-only:";
    for (int x : o) text += " " + std::to_string(x);
    text += "\n";
  }
  Json j{{"n", n}, {"mode", to_string(mode)}, {"total", c.total}, {"count", c.count}};
  if (mode == CountMode::Full) j["six_only"] = std::move(six);
  emit(out, g, j, text);
  return kOk;
}

int cmd_family(const Globals& g, const std::string& name, int n, const std::string& mode_name, bool dedup,
               bool timings, std::ostream& out) {
  const auto f = parse_family(name);
  if (!f) throw std::invalid_argument("unknown family '" + name + "'");
  const VerifyMode mode = mode_name == "oracle" ? VerifyMode::Oracle : VerifyMode::Pairwise;
  const auto spec = make_family(*f, n, dedup);
  const auto r = verify_family(spec, mode, g.bound(), g.jobs);
  emit(out, g, report::to_json(r, timings), report::family_text(r, timings));
  return r.verdict.compatible ? kOk : kNegative;
}

int cmd_cones(const Globals& g, const std::string& a, const std::string& b, int n, std::ostream& out) {
  auto s = parse_root_cone(a, n);
  auto t = parse_root_cone(b, n);
  const int size = std::max(s.n, t.n);
  if (size < 2) throw std::invalid_argument("cones: need at least two labels");
  s.n = t.n = size;
  const auto c = intersect_root_cones(s, t);
  Json j = report::to_json(c);
  Json labels = Json::array();
  for (const auto& cy : c.cycles) labels.push_back(report::ray_label(cy));
  j["ray_labels"] = std::move(labels);
  emit(out, g, j, report::cones_text(c, size));
  return c.is_root_cone ? kOk : kNegative;
}

int cmd_enumerate(const Globals& g, const std::string& text, bool cyclic_only, int bound, std::ostream& out,
                  std::ostream& err) {
  const auto s = parse_osp(text);
  const int n = s.max_element();
  if (n > bound) throw std::domain_error("enumerate: n exceeds the bound " + std::to_string(bound));
  const auto partners = cyclic_only ? cyclic_orders(n) : normalized_osps(n);
  std::vector<Verdict> verdicts(partners.size());
  Progress progress(err, "enumerate", partners.size());
  parallel_for(partners.size(), g.jobs, [&](std::size_t i) {
    verdicts[i] = check_pair(s, partners[i]);
    progress.tick();
  });
  std::size_t bad = 0;
  for (std::size_t i = 0; i < partners.size(); ++i) {
    if (verdicts[i].compatible) continue;
    ++bad;
    emit(out, g, Json{{"partner", partners[i].to_string()}, {"verdict", report::to_json(verdicts[i])}},
         partners[i].to_string() + "  " + report::witness_text(verdicts[i].witness) + "\n");
  }
  emit(out, g, Json{{"osp", s.to_string()}, {"partners", partners.size()}, {"incompatible", bad}},
       std::to_string(bad) + " of " + std::to_string(partners.size()) + " partners incompatible\n");
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compatibility of alcoved simplices and alcovedness of their Minkowski sums", "alcoved"};
  app.require_subcommand(1);
  Globals g;
  add_globals(app, g);

  bool fast_path = true;
  std::string pair_a, pair_b, collection_path;
  auto* check_pair_cmd = app.add_subcommand("check-pair", "Check a pair of ordered set partitions");
  check_pair_cmd->add_option("s", pair_a, "First partition, e.g. \"1|2 3|4\"")->required();
  check_pair_cmd->add_option("t", pair_b, "Second partition")->required();
  check_pair_cmd->add_flag("!--no-fast-path", fast_path, "Skip the interlacing test");

  auto* check_collection_cmd = app.add_subcommand("check-collection", "Check all pairs of a collection");
  check_collection_cmd->add_option("file", collection_path, "One partition per line")->required();
  check_collection_cmd->add_flag("!--no-fast-path", fast_path, "Skip the interlacing test");

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "Alcoved test of a Minkowski sum of simplices");
  oracle_cmd->add_option("osps", oa.osps, "Partitions");
  oracle_cmd->add_option("--file", oa.file, "Partitions, one per line");
  oracle_cmd->add_option("--polytope", oa.polytope, "Point dump to test instead of a sum");
  oracle_cmd->add_flag("--dump", oa.dump, "Print the points of the sum and stop");
  oracle_cmd->add_flag("--compare", oa.compare, "Also run the collection check; exit 3 on disagreement");
  oracle_cmd->add_option("--all-cyclic", oa.all_cyclic, "All ordered pairs of cyclic orders of [N]");
  oracle_cmd->add_option("--all-normalized", oa.all_normalized, "All ordered pairs of normalized partitions of [N]");
  oracle_cmd->add_option("--sample", oa.sample, "Number of random collections");
  oracle_cmd->add_option("--seed", oa.seed, "Seed for --sample");
  oracle_cmd->add_option("--n", oa.n, "Largest n for --sample");
  oracle_cmd->add_option("--max-k", oa.max_k, "Largest collection size for --sample")->check(CLI::Range(2, 16));
  oracle_cmd->add_flag("--compatible-only", oa.compatible_only, "Sample collections that pass pairwise checks");

  int count_n = 0;
  int count_bound = kDefaultCountBound;
  std::string count_mode = "four-only";
  auto* count_cmd = app.add_subcommand("count", "Cyclic orders compatible with the standard order");
  count_cmd->add_option("--n", count_n, "Size")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--mode", count_mode, "four-only or full")->check(CLI::IsMember({"four-only", "full"}));
  count_cmd->add_option("--bound", count_bound, "Largest n allowed")->check(CLI::PositiveNumber);

  std::string family_name, family_mode = "pairwise";
  int family_n = 0;
  bool dedup = false, timings = false;
  auto* family_cmd = app.add_subcommand("family", "Verify a named family of summands");
  family_cmd->add_option("--name", family_name, "associahedron, cyclohedron, dhat or pellytope")->required();
  family_cmd->add_option("--n", family_n, "Family parameter")->required()->check(CLI::PositiveNumber);
  family_cmd->add_option("--mode", family_mode, "pairwise or oracle")->check(CLI::IsMember({"pairwise", "oracle"}));
  family_cmd->add_flag("--dedup", dedup, "Drop repeated summands");
  family_cmd->add_flag("--timings", timings, "Report wall time");

  std::string cone_a, cone_b;
  int cone_n = 0;
  auto* cones_cmd = app.add_subcommand("cones", "Intersect two root cones given as \"1>2 2>3 1~4\"");
  cones_cmd->add_option("sigma", cone_a, "First cone")->required();
  cones_cmd->add_option("tau", cone_b, "Second cone")->required();
  cones_cmd->add_option("--n", cone_n, "Ambient size (default: largest label)");

  std::string enum_osp;
  bool cyclic_only = false;
  int enum_bound = 8;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all incompatible partners of a partition");
  enumerate_cmd->add_option("osp", enum_osp, "Partition")->required();
  enumerate_cmd->add_flag("--cyclic-only", cyclic_only, "Only nondegenerate partners");
  enumerate_cmd->add_option("--bound", enum_bound, "Largest n allowed")->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check_pair_cmd->parsed()) return cmd_check_pair(g, pair_a, pair_b, fast_path, out);
    if (check_collection_cmd->parsed()) return cmd_check_collection(g, collection_path, fast_path, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle(g, oa, out, err);
    if (count_cmd->parsed()) return cmd_count(g, count_n, count_mode, count_bound, out, err);
    if (family_cmd->parsed()) return cmd_family(g, family_name, family_n, family_mode, dedup, timings, out);
    if (cones_cmd->parsed()) return cmd_cones(g, cone_a, cone_b, cone_n, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(g, enum_osp, cyclic_only, enum_bound, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kDisagreement;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace alcoved::cli
