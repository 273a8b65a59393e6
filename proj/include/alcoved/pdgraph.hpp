#pragma once

// Partially directed graphs on integer labels and the cycle criteria built on
// them: graphs of ordered set partitions, cone graphs, intersection graphs,
// chordless cycles, alternating cycles and violating cycles.

#include "alcoved/exact.hpp"
#include "alcoved/osp.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace alcoved {

enum class Layer { Upper, Lower, Plain };

std::string_view to_string(Layer layer);

/// Edge record. Undirected edges are stored with tail < head.
struct Edge {
  int tail = 0;
  int head = 0;
  bool directed = true;
  Layer layer = Layer::Plain;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class PartiallyDirectedGraph {
 public:
  PartiallyDirectedGraph() = default;
  explicit PartiallyDirectedGraph(std::vector<int> vertices);

  /// Adds an edge unless the same record already exists in that layer.
  /// Self-loops are rejected.
  void add_edge(int tail, int head, bool directed, Layer layer);

  const std::vector<int>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }

  /// Position of `label` in vertices(), or -1.
  int index_of(int label) const noexcept;

  bool has_edge(int tail, int head, bool directed, Layer layer) const;

  /// True when `from -> to` is traversable in `layer`: a directed edge
  /// from->to or an undirected edge between them.
  bool traversable(int from, int to, Layer layer) const;

  /// Sorted edge list, one per line: `u->v [layer]` or `u--v [layer]`.
  std::string dump() const;

  friend bool operator==(const PartiallyDirectedGraph& a, const PartiallyDirectedGraph& b);

 private:
  std::vector<int> vertices_;  // sorted
  std::vector<Edge> edges_;    // kept sorted
};

/// One traversed edge of a cycle. Undirected edges carry the traversal
/// direction in from/to.
struct TraversedEdge {
  int from = 0;
  int to = 0;
  bool directed = true;
  Layer layer = Layer::Plain;

  friend bool operator==(const TraversedEdge&, const TraversedEdge&) = default;
  friend auto operator<=>(const TraversedEdge&, const TraversedEdge&) = default;
};

struct CycleWitness {
  std::vector<TraversedEdge> edges;
  std::vector<int> vertex_sequence;  // edges[i] runs vertex_sequence[i] -> vertex_sequence[i+1 mod k]

  std::size_t length() const noexcept { return edges.size(); }
  std::string to_string() const;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Builds a witness from a vertex sequence and the per-edge layers, looking up
/// directedness in `g`. Throws std::invalid_argument if an edge is missing.
CycleWitness make_cycle(const PartiallyDirectedGraph& g, std::span<const int> vertex_sequence,
                        std::span<const Layer> layers);

/// True when consecutive edges chain and the sequence closes.
bool is_closed(const CycleWitness& c);

/// Number of maximal runs of consecutive upper edges, cyclically. A cycle made
/// only of upper edges has one run.
std::size_t upper_segment_count(const CycleWitness& c);

bool is_alternating(const CycleWitness& c);

/// A cone in H_n generated by roots e_i - e_j for (i,j) in `generators` plus the
/// lines through e_i - e_j for {i,j} in `lineality_pairs`.
struct RootCone {
  int n = 0;
  std::vector<std::pair<int, int>> generators;
  std::vector<std::pair<int, int>> lineality_pairs;
};

/// Parses "1>2 2>3 1~4": `i>j` is a generator, `i~j` a lineality pair.
RootCone parse_root_cone(std::string_view text, int n = 0);

/// Undirected clique on every block, directed edge from the minimum of each
/// block to the minimum of the next block (cyclically). One block gives no
/// directed edge; two blocks give two antiparallel directed edges.
PartiallyDirectedGraph graph_of_osp(const OrderedSetPartition& p);

/// Edges of `g_s` tagged upper, edges of `g_t` with directed edges reversed
/// tagged lower. Input layers are ignored.
PartiallyDirectedGraph union_upper_lower(const PartiallyDirectedGraph& g_s, const PartiallyDirectedGraph& g_t);

/// Closure of a single-layer graph. Mutually reachable pairs become undirected
/// edges. Throws std::invalid_argument on multi-layer input.
PartiallyDirectedGraph transitive_closure(const PartiallyDirectedGraph& g);

bool is_transitively_closed(const PartiallyDirectedGraph& g);

/// Graph of a root cone: transitive closure of its generators and lineality.
PartiallyDirectedGraph cone_graph(const RootCone& cone);

/// Subgraph induced on `subset` (labels kept).
PartiallyDirectedGraph induced_subgraph(const PartiallyDirectedGraph& g, std::span<const int> subset);

/// Chordless cycle of length >= 4 in the union of two undirected graphs whose
/// components are cliques. Edges of `gl` are reported as upper, edges only in
/// `gm` as lower. Shortest cycles are found first.
std::optional<CycleWitness> find_chordless_cycle_ge4(const PartiallyDirectedGraph& gl,
                                                     const PartiallyDirectedGraph& gm);

/// All simple alternating cycles of an upper/lower graph, rotated to start at
/// their smallest vertex, sorted.
std::vector<CycleWitness> alternating_cycles(const PartiallyDirectedGraph& g);

/// Primitive alternating cycles of an intersection graph whose layers are
/// both transitively closed. A simple alternating cycle is not primitive when
/// its upper tails and upper heads can be split exactly among two or more
/// smaller alternating cycles of the graph.
std::vector<CycleWitness> primitive_alternating_cycles(const PartiallyDirectedGraph& g);

/// Sum of e_from - e_to over the upper edges; checked against minus the lower
/// sum. Indexed by label - 1, length n.
IntVector cycle_point(const CycleWitness& c, int n);

struct ConeIntersection {
  bool is_root_cone = true;
  std::vector<IntVector> rays;  // one per primitive alternating cycle, sorted, distinct
  std::vector<CycleWitness> cycles;
  std::optional<CycleWitness> witness;
};

ConeIntersection intersect_root_cones(const RootCone& s, const RootCone& t);

struct ViolatingSearchOptions {
  std::size_t max_vertices = 7;
  /// When set, a candidate cycle must also be primitive after contracting its
  /// segments in the intersection graph of the smallest cones it touches
  /// (each layer keeps its full block cliques). Without this, partitions with
  /// non-singleton blocks admit spurious cycles.
  bool certified = true;
};

/// Exhaustive search for a simple cycle with at least two maximal upper
/// segments in an upper/lower graph. Throws std::domain_error above the vertex
/// bound.
std::optional<CycleWitness> find_violating_cycle(const PartiallyDirectedGraph& g,
                                                 const ViolatingSearchOptions& options = {});

/// True when the candidate cycle passes the certification described in
/// ViolatingSearchOptions::certified.
bool certify_violating_cycle(const PartiallyDirectedGraph& g, const CycleWitness& c);

}  // namespace alcoved
