#include "alcoved/pdgraph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alcoved {

std::string_view to_string(Layer layer) {
  switch (layer) {
    case Layer::Upper: return "upper";
    case Layer::Lower: return "lower";
    case Layer::Plain: return "plain";
  }
  return "?";
}

PartiallyDirectedGraph::PartiallyDirectedGraph(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

int PartiallyDirectedGraph::index_of(int label) const noexcept {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || *it != label) return -1;
  return static_cast<int>(it - vertices_.begin());
}

void PartiallyDirectedGraph::add_edge(int tail, int head, bool directed, Layer layer) {
  if (index_of(tail) < 0 || index_of(head) < 0) throw std::invalid_argument("add_edge: unknown vertex");
  if (tail == head) throw std::invalid_argument("add_edge: self-loop");
  if (!directed && tail > head) std::swap(tail, head);
  const Edge e{tail, head, directed, layer};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
}

bool PartiallyDirectedGraph::has_edge(int tail, int head, bool directed, Layer layer) const {
  if (!directed && tail > head) std::swap(tail, head);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{tail, head, directed, layer});
}

bool PartiallyDirectedGraph::traversable(int from, int to, Layer layer) const {
  return has_edge(from, to, true, layer) || has_edge(from, to, false, layer);
}

std::string PartiallyDirectedGraph::dump() const {
  std::string out;
  for (const auto& e : edges_) {
    out += std::to_string(e.tail) + (e.directed ? "->" : "--") + std::to_string(e.head) + " [" +
           std::string(to_string(e.layer)) + "]\n";
  }
  return out;
}

bool operator==(const PartiallyDirectedGraph& a, const PartiallyDirectedGraph& b) {
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

std::string CycleWitness::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out += ", ";
    const auto& e = edges[i];
    out += std::to_string(e.from) + (e.directed ? "->" : "--") + std::to_string(e.to) + " " +
           std::string(alcoved::to_string(e.layer));
  }
  return out;
}

CycleWitness make_cycle(const PartiallyDirectedGraph& g, std::span<const int> vertex_sequence,
                        std::span<const Layer> layers) {
  if (vertex_sequence.size() != layers.size()) throw std::invalid_argument("make_cycle: size mismatch");
  CycleWitness c;
  c.vertex_sequence.assign(vertex_sequence.begin(), vertex_sequence.end());
  const std::size_t k = vertex_sequence.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int from = vertex_sequence[i];
    const int to = vertex_sequence[(i + 1) % k];
    if (g.has_edge(from, to, true, layers[i])) {
      c.edges.push_back({from, to, true, layers[i]});
    } else if (g.has_edge(from, to, false, layers[i])) {
      c.edges.push_back({from, to, false, layers[i]});
    } else {
      throw std::invalid_argument("make_cycle: missing edge " + std::to_string(from) + "->" + std::to_string(to));
    }
  }
  return c;
}

bool is_closed(const CycleWitness& c) {
  const std::size_t k = c.edges.size();
  if (k == 0) return true;
  if (c.vertex_sequence.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (c.edges[i].from != c.vertex_sequence[i]) return false;
    if (c.edges[i].to != c.edges[(i + 1) % k].from) return false;
  }
  return true;
}

std::size_t upper_segment_count(const CycleWitness& c) {
  const std::size_t k = c.edges.size();
  std::size_t runs = 0;
  bool any_upper = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (c.edges[i].layer != Layer::Upper) continue;
    any_upper = true;
    if (c.edges[(i + k - 1) % k].layer != Layer::Upper) ++runs;
  }
  return any_upper && runs == 0 ? 1 : runs;
}

bool is_alternating(const CycleWitness& c) {
  const std::size_t k = c.edges.size();
  if (k < 2 || k % 2 != 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Layer a = c.edges[i].layer;
    const Layer b = c.edges[(i + 1) % k].layer;
    if (a == Layer::Plain || a == b) return false;
  }
  return true;
}

RootCone parse_root_cone(std::string_view text, int n) {
  RootCone cone;
  std::istringstream in{std::string(text)};
  std::string token;
  int max_label = 0;
  while (in >> token) {
    const auto sep = token.find_first_of(">~");
    if (sep == std::string::npos || sep == 0 || sep + 1 == token.size())
      throw std::invalid_argument("root cone: malformed token '" + token + "'");
    const std::string a = token.substr(0, sep);
    const std::string b = token.substr(sep + 1);
    auto all_digits = [](const std::string& s) {
      return s.size() <= 9 && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    if (!all_digits(a) || !all_digits(b)) throw std::invalid_argument("root cone: malformed token '" + token + "'");
    const int i = std::stoi(a);
    const int j = std::stoi(b);
    if (i <= 0 || j <= 0 || i == j) throw std::invalid_argument("root cone: invalid pair in '" + token + "'");
    max_label = std::max({max_label, i, j});
    if (token[sep] == '>') {
      cone.generators.emplace_back(i, j);
    } else {
      cone.lineality_pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  if (n > 0 && max_label > n) throw std::invalid_argument("root cone: label exceeds n");
  cone.n = n > 0 ? n : max_label;
  return cone;
}

PartiallyDirectedGraph graph_of_osp(const OrderedSetPartition& p) {
  PartiallyDirectedGraph g(p.ground());
  const auto& blocks = p.blocks();
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) g.add_edge(b[i], b[j], false, Layer::Plain);
  }
  const std::size_t l = blocks.size();
  if (l >= 2) {
    for (std::size_t i = 0; i < l; ++i) g.add_edge(blocks[i].front(), blocks[(i + 1) % l].front(), true, Layer::Plain);
  }
  return g;
}

PartiallyDirectedGraph union_upper_lower(const PartiallyDirectedGraph& g_s, const PartiallyDirectedGraph& g_t) {
  if (g_s.vertices() != g_t.vertices()) throw std::invalid_argument("union_upper_lower: vertex sets differ");
  PartiallyDirectedGraph g(g_s.vertices());
  for (const auto& e : g_s.edges()) g.add_edge(e.tail, e.head, e.directed, Layer::Upper);
  for (const auto& e : g_t.edges()) {
    if (e.directed) {
      g.add_edge(e.head, e.tail, true, Layer::Lower);
    } else {
      g.add_edge(e.tail, e.head, false, Layer::Lower);
    }
  }
  return g;
}

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix reach_matrix(const PartiallyDirectedGraph& g, Layer layer) {
  const std::size_t n = g.num_vertices();
  Matrix m(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.layer != layer) continue;
    const auto u = static_cast<std::size_t>(g.index_of(e.tail));
    const auto v = static_cast<std::size_t>(g.index_of(e.head));
    m[u][v] = 1;
    if (!e.directed) m[v][u] = 1;
  }
  return m;
}

void close_matrix(Matrix& r) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
}

void add_closed_layer(PartiallyDirectedGraph& out, const std::vector<int>& labels, const Matrix& r, Layer layer) {
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !r[i][j]) continue;
      if (r[j][i]) {
        if (i < j) out.add_edge(labels[i], labels[j], false, layer);
      } else {
        out.add_edge(labels[i], labels[j], true, layer);
      }
    }
  }
}

PartiallyDirectedGraph layer_subgraph(const PartiallyDirectedGraph& g, Layer layer) {
  PartiallyDirectedGraph out(g.vertices());
  for (const auto& e : g.edges())
    if (e.layer == layer) out.add_edge(e.tail, e.head, e.directed, layer);
  return out;
}

using Mask = std::uint64_t;

struct CycleMasks {
  Mask tails = 0;
  Mask heads = 0;
  friend auto operator<=>(const CycleMasks&, const CycleMasks&) = default;
};

CycleMasks masks_of(const PartiallyDirectedGraph& g, const CycleWitness& c) {
  CycleMasks m;
  for (const auto& e : c.edges) {
    if (e.layer != Layer::Upper) continue;
    m.tails |= Mask{1} << g.index_of(e.from);
    m.heads |= Mask{1} << g.index_of(e.to);
  }
  return m;
}

bool exact_cover(Mask remaining, const std::vector<Mask>& pieces) {
  if (remaining == 0) return true;
  const Mask low = remaining & (~remaining + 1);
  for (Mask p : pieces) {
    if ((p & low) && (p & ~remaining) == 0 && exact_cover(remaining & ~p, pieces)) return true;
  }
  return false;
}

// A split into two or more alternating cycles whose upper tails and heads
// partition those of `target`.
bool splits(const CycleMasks& target, const std::vector<CycleMasks>& all) {
  std::set<Mask> pieces;
  for (const auto& m : all) {
    if (m == target) continue;
    if ((m.tails & ~target.tails) || (m.heads & ~target.heads)) continue;
    if ((m.tails & m.heads) != 0) continue;
    pieces.insert(m.tails | m.heads);
  }
  const Mask whole = target.tails | target.heads;
  pieces.erase(whole);
  return exact_cover(whole, std::vector<Mask>(pieces.begin(), pieces.end()));
}

Layer other(Layer l) { return l == Layer::Upper ? Layer::Lower : Layer::Upper; }

}  // namespace

PartiallyDirectedGraph transitive_closure(const PartiallyDirectedGraph& g) {
  std::set<Layer> layers;
  for (const auto& e : g.edges()) layers.insert(e.layer);
  if (layers.size() > 1) throw std::invalid_argument("transitive_closure: multi-layer input");
  const Layer layer = layers.empty() ? Layer::Plain : *layers.begin();
  Matrix r = reach_matrix(g, layer);
  close_matrix(r);
  PartiallyDirectedGraph out(g.vertices());
  add_closed_layer(out, g.vertices(), r, layer);
  return out;
}

bool is_transitively_closed(const PartiallyDirectedGraph& g) {
  for (Layer layer : {Layer::Upper, Layer::Lower, Layer::Plain}) {
    const auto sub = layer_subgraph(g, layer);
    if (!(transitive_closure(sub) == sub)) return false;
  }
  return true;
}

PartiallyDirectedGraph cone_graph(const RootCone& cone) {
  if (cone.n <= 0) throw std::invalid_argument("cone_graph: n must be positive");
  std::vector<int> labels(static_cast<std::size_t>(cone.n));
  for (int i = 0; i < cone.n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  PartiallyDirectedGraph g(labels);
  auto check = [&](int i, int j) {
    if (i < 1 || j < 1 || i > cone.n || j > cone.n || i == j) throw std::invalid_argument("cone_graph: bad root index");
  };
  for (auto [i, j] : cone.generators) {
    check(i, j);
    g.add_edge(i, j, true, Layer::Plain);
  }
  for (auto [i, j] : cone.lineality_pairs) {
    check(i, j);
    g.add_edge(i, j, false, Layer::Plain);
  }
  return transitive_closure(g);
}

PartiallyDirectedGraph induced_subgraph(const PartiallyDirectedGraph& g, std::span<const int> subset) {
  PartiallyDirectedGraph out(std::vector<int>(subset.begin(), subset.end()));
  for (int v : out.vertices())
    if (g.index_of(v) < 0) throw std::invalid_argument("induced_subgraph: unknown vertex");
  for (const auto& e : g.edges()) {
    if (out.index_of(e.tail) >= 0 && out.index_of(e.head) >= 0) out.add_edge(e.tail, e.head, e.directed, e.layer);
  }
  return out;
}

std::optional<CycleWitness> find_chordless_cycle_ge4(const PartiallyDirectedGraph& gl,
                                                     const PartiallyDirectedGraph& gm) {
  if (gl.vertices() != gm.vertices()) throw std::invalid_argument("find_chordless_cycle_ge4: vertex sets differ");
  const std::size_t n = gl.num_vertices();
  auto adjacency = [&](const PartiallyDirectedGraph& g) {
    Matrix a(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges()) {
      if (e.directed) throw std::invalid_argument("find_chordless_cycle_ge4: directed edge in input");
      const auto u = static_cast<std::size_t>(g.index_of(e.tail));
      const auto v = static_cast<std::size_t>(g.index_of(e.head));
      a[u][v] = a[v][u] = 1;
    }
    // Components must be cliques.
    Matrix r = a;
    close_matrix(r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && r[i][j] && !a[i][j])
          throw std::invalid_argument("find_chordless_cycle_ge4: component is not a clique");
    return a;
  };
  const Matrix al = adjacency(gl);
  const Matrix am = adjacency(gm);
  Matrix a(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = al[i][j] || am[i][j];

  std::vector<std::size_t> path;
  std::vector<char> used(n, 0);
  std::size_t target = 0;
  // Induced path search: vertices after the first are larger than it, no
  // chords, and only the last vertex touches the first.
  auto extend = [&](auto&& self) -> bool {
    const std::size_t m = path.size();
    const std::size_t s = path.front();
    for (std::size_t w = s + 1; w < n; ++w) {
      if (used[w] || !a[path.back()][w]) continue;
      bool ok = true;
      for (std::size_t i = 1; i + 1 < m && ok; ++i) ok = !a[path[i]][w];
      if (!ok) continue;
      const bool closes = a[s][w] != 0;
      if (m + 1 == target) {
        if (!closes) continue;
      } else if (closes && m >= 2) {
        continue;
      }
      path.push_back(w);
      used[w] = 1;
      if (m + 1 == target || self(self)) return true;
      used[w] = 0;
      path.pop_back();
    }
    return false;
  };
  for (target = 4; target <= n; ++target) {
    for (std::size_t s = 0; s < n; ++s) {
      path.assign(1, s);
      std::fill(used.begin(), used.end(), 0);
      used[s] = 1;
      if (!extend(extend)) continue;
      CycleWitness c;
      const auto& labels = gl.vertices();
      for (std::size_t i = 0; i < path.size(); ++i) {
        const std::size_t u = path[i];
        const std::size_t v = path[(i + 1) % path.size()];
        c.vertex_sequence.push_back(labels[u]);
        c.edges.push_back({labels[u], labels[v], false, al[u][v] ? Layer::Upper : Layer::Lower});
      }
      return c;
    }
  }
  return std::nullopt;
}

std::vector<CycleWitness> alternating_cycles(const PartiallyDirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  const Matrix up = reach_matrix(g, Layer::Upper);
  const Matrix lo = reach_matrix(g, Layer::Lower);
  const auto& labels = g.vertices();
  std::vector<CycleWitness> out;
  std::vector<std::size_t> path;
  std::vector<Layer> layers;
  std::vector<char> used(n, 0);
  auto adj = [&](Layer l, std::size_t u, std::size_t v) { return (l == Layer::Upper ? up : lo)[u][v] != 0; };
  auto emit = [&] {
    std::vector<int> seq;
    for (auto i : path) seq.push_back(labels[i]);
    out.push_back(make_cycle(g, seq, layers));
  };
  auto dfs = [&](auto&& self, Layer next) -> void {
    const std::size_t s = path.front();
    const std::size_t u = path.back();
    // Close: the closing edge must differ in layer from the first edge.
    if (path.size() >= 2 && next != layers.front() && adj(next, u, s)) {
      layers.push_back(next);
      emit();
      layers.pop_back();
    }
    for (std::size_t w = s + 1; w < n; ++w) {
      if (used[w] || !adj(next, u, w)) continue;
      used[w] = 1;
      path.push_back(w);
      layers.push_back(next);
      self(self, other(next));
      layers.pop_back();
      path.pop_back();
      used[w] = 0;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    for (Layer first : {Layer::Upper, Layer::Lower}) {
      path.assign(1, s);
      layers.clear();
      std::fill(used.begin(), used.end(), 0);
      used[s] = 1;
      for (std::size_t w = s + 1; w < n; ++w) {
        if (!adj(first, s, w)) continue;
        used[w] = 1;
        path.push_back(w);
        layers.push_back(first);
        dfs(dfs, other(first));
        layers.pop_back();
        path.pop_back();
        used[w] = 0;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CycleWitness& a, const CycleWitness& b) {
    if (a.vertex_sequence != b.vertex_sequence) return a.vertex_sequence < b.vertex_sequence;
    return a.edges < b.edges;
  });
  return out;
}

std::vector<CycleWitness> primitive_alternating_cycles(const PartiallyDirectedGraph& g) {
  if (g.num_vertices() > 64) throw std::domain_error("primitive_alternating_cycles: more than 64 vertices");
  for (Layer layer : {Layer::Upper, Layer::Lower}) {
    const auto sub = layer_subgraph(g, layer);
    if (!(transitive_closure(sub) == sub))
      throw std::invalid_argument("primitive_alternating_cycles: layer is not transitively closed");
  }
  const auto all = alternating_cycles(g);
  std::vector<CycleMasks> masks;
  masks.reserve(all.size());
  for (const auto& c : all) masks.push_back(masks_of(g, c));
  std::vector<CycleWitness> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!splits(masks[i], masks)) out.push_back(all[i]);
  }
  return out;
}

IntVector cycle_point(const CycleWitness& c, int n) {
  IntVector upper(static_cast<std::size_t>(n), 0);
  IntVector lower(static_cast<std::size_t>(n), 0);
  for (const auto& e : c.edges) {
    if (e.from < 1 || e.to < 1 || e.from > n || e.to > n) throw std::invalid_argument("cycle_point: label out of range");
    if (e.layer == Layer::Plain) throw std::invalid_argument("cycle_point: plain edge in cycle");
    auto& v = e.layer == Layer::Upper ? upper : lower;
    v[static_cast<std::size_t>(e.from - 1)] += 1;
    v[static_cast<std::size_t>(e.to - 1)] -= 1;
  }
  for (std::size_t i = 0; i < upper.size(); ++i)
    if (upper[i] != -lower[i]) throw std::invalid_argument("cycle_point: upper and lower sums disagree");
  return upper;
}

ConeIntersection intersect_root_cones(const RootCone& s, const RootCone& t) {
  if (s.n != t.n) throw std::invalid_argument("intersect_root_cones: ambient sizes differ");
  const auto g = union_upper_lower(cone_graph(s), cone_graph(t));
  ConeIntersection result;
  result.cycles = primitive_alternating_cycles(g);
  std::set<IntVector> rays;
  for (const auto& c : result.cycles) {
    rays.insert(cycle_point(c, s.n));
    if (c.length() >= 4 && result.is_root_cone) {
      result.is_root_cone = false;
      result.witness = c;
    }
  }
  result.rays.assign(rays.begin(), rays.end());
  return result;
}

bool certify_violating_cycle(const PartiallyDirectedGraph& g, const CycleWitness& c) {
  const std::size_t k = c.edges.size();
  if (k < 4 || upper_segment_count(c) < 2) return false;

  // Smallest cones touched by the cycle: full block cliques of each layer plus
  // the directed edges the cycle uses.
  PartiallyDirectedGraph up(g.vertices());
  PartiallyDirectedGraph lo(g.vertices());
  for (const auto& e : g.edges()) {
    if (e.directed) continue;
    (e.layer == Layer::Upper ? up : lo).add_edge(e.tail, e.head, false, e.layer);
  }
  for (const auto& e : c.edges) {
    if (e.directed) (e.layer == Layer::Upper ? up : lo).add_edge(e.from, e.to, true, e.layer);
  }
  PartiallyDirectedGraph gamma(g.vertices());
  for (const auto* part : {&up, &lo}) {
    const auto closed = transitive_closure(*part);
    for (const auto& e : closed.edges()) gamma.add_edge(e.tail, e.head, e.directed, e.layer);
  }

  // Contract every maximal segment to one edge.
  std::size_t start = 0;
  while (c.edges[start].layer == c.edges[(start + k - 1) % k].layer) ++start;
  std::vector<int> seq;
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& e = c.edges[(start + i) % k];
    if (i == 0 || e.layer != layers.back()) {
      seq.push_back(e.from);
      layers.push_back(e.layer);
    }
  }
  const auto contracted = make_cycle(gamma, seq, layers);
  if (!is_alternating(contracted)) throw std::logic_error("certify_violating_cycle: contraction is not alternating");

  std::vector<int> support = seq;
  std::sort(support.begin(), support.end());
  const auto local = induced_subgraph(gamma, support);
  const auto all = alternating_cycles(local);
  std::vector<CycleMasks> masks;
  masks.reserve(all.size());
  for (const auto& a : all) masks.push_back(masks_of(local, a));
  return !splits(masks_of(local, contracted), masks);
}

std::optional<CycleWitness> find_violating_cycle(const PartiallyDirectedGraph& g, const ViolatingSearchOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n > options.max_vertices)
    throw std::domain_error("find_violating_cycle: " + std::to_string(n) + " vertices exceeds the bound " +
                            std::to_string(options.max_vertices));
  const Matrix up = reach_matrix(g, Layer::Upper);
  const Matrix lo = reach_matrix(g, Layer::Lower);
  const auto& labels = g.vertices();
  std::vector<std::size_t> path;
  std::vector<Layer> layers;
  std::vector<char> used(n, 0);
  std::optional<CycleWitness> found;

  auto try_emit = [&]() -> bool {
    std::size_t runs = 0;
    const std::size_t k = layers.size();
    for (std::size_t i = 0; i < k; ++i)
      if (layers[i] == Layer::Upper && layers[(i + k - 1) % k] != Layer::Upper) ++runs;
    if (runs < 2) return false;
    std::vector<int> seq;
    for (auto i : path) seq.push_back(labels[i]);
    auto c = make_cycle(g, seq, layers);
    if (options.certified && !certify_violating_cycle(g, c)) return false;
    found = std::move(c);
    return true;
  };
  auto dfs = [&](auto&& self) -> bool {
    const std::size_t s = path.front();
    const std::size_t u = path.back();
    for (Layer l : {Layer::Upper, Layer::Lower}) {
      const Matrix& m = l == Layer::Upper ? up : lo;
      if (path.size() >= 4 && m[u][s]) {
        layers.push_back(l);
        if (try_emit()) return true;
        layers.pop_back();
      }
    }
    for (std::size_t w = s + 1; w < n; ++w) {
      if (used[w]) continue;
      for (Layer l : {Layer::Upper, Layer::Lower}) {
        const Matrix& m = l == Layer::Upper ? up : lo;
        if (!m[u][w]) continue;
        used[w] = 1;
        path.push_back(w);
        layers.push_back(l);
        if (self(self)) return true;
        layers.pop_back();
        path.pop_back();
        used[w] = 0;
      }
    }
    return false;
  };
  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    layers.clear();
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    if (dfs(dfs)) return found;
  }
  return std::nullopt;
}

}  // namespace alcoved
