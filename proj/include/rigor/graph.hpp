#pragma once

// Multigraphs with loops: G = (V, E, L).
//
// Vertices are 0..n-1. Edges and loops are stored in insertion order and
// identified by their index in `edges()` / `loops()`; those indices are the
// stable instance ids used by every other module (rigidity-matrix rows are
// edges then loops, by id).

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace rigor {

using VertexId = std::size_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
};

// Loops added by add_uniform_loops are tagged so a lifted graph G^[k] still
// knows which loops belonged to G.
enum class LoopOrigin : std::uint8_t { original, uniform };

struct Loop {
  VertexId vertex = 0;
  LoopOrigin origin = LoopOrigin::original;
};

// A subset F of E ∪ L, as sorted edge ids and sorted loop ids.
struct EdgeOrLoopSet {
  std::vector<std::size_t> edges;
  std::vector<std::size_t> loops;

  std::size_t size() const { return edges.size() + loops.size(); }
  bool empty() const { return edges.empty() && loops.empty(); }
  friend bool operator==(const EdgeOrLoopSet&, const EdgeOrLoopSet&) = default;
};

class LoopedGraph {
 public:
  LoopedGraph() = default;
  explicit LoopedGraph(std::size_t n) : n_(n) {}
  // Throws std::invalid_argument on out-of-range endpoints or u == v edges.
  LoopedGraph(std::size_t n, std::vector<Edge> edges, std::vector<Loop> loops);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t loop_count() const { return loops_.size(); }
  std::size_t element_count() const { return edges_.size() + loops_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Loop>& loops() const { return loops_; }

  VertexId add_vertex() { return n_++; }
  std::size_t add_edge(VertexId u, VertexId v);
  std::size_t add_loop(VertexId v, LoopOrigin origin = LoopOrigin::original);

  // Multiset equality of edges (as unordered pairs) and loop vertices.
  // Loop origins and instance order are ignored.
  friend bool operator==(const LoopedGraph& a, const LoopedGraph& b);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Loop> loops_;
};

// Complete graph K_n.
LoopedGraph complete_graph(std::size_t n);
// Cycle C_n on vertices 0..n-1 (n >= 3).
LoopedGraph cycle_graph(std::size_t n);

// G^[k]: appends k loops at every vertex, vertex-major, tagged uniform.
LoopedGraph add_uniform_loops(const LoopedGraph& g, std::size_t k);

// Edges plus loops at v, loops counted once.
std::size_t delta(const LoopedGraph& g, VertexId v);
// Edges plus loops at v, loops counted twice.
std::size_t degree(const LoopedGraph& g, VertexId v);
std::size_t loop_multiplicity(const LoopedGraph& g, VertexId v);
// Distinct neighbours other than v, ascending.
std::vector<VertexId> neighbours(const LoopedGraph& g, VertexId v);
// Loop ids at v, ascending.
std::vector<std::size_t> loops_at(const LoopedGraph& g, VertexId v);
// Edge ids incident to v, ascending.
std::vector<std::size_t> edges_at(const LoopedGraph& g, VertexId v);

// V_F, ascending.
std::vector<VertexId> incident_vertices(const LoopedGraph& g, const EdgeOrLoopSet& f);

// Connected components under edges (loops do not connect), each ascending,
// ordered by smallest vertex.
std::vector<std::vector<VertexId>> components(const LoopedGraph& g);

// Connected and every vertex has degree two. A lone vertex with one loop is
// a cycle of length 1; two parallel edges form a cycle of length 2.
bool is_cycle(const LoopedGraph& g);

// All cycle subgraphs of length <= max_len: loops, parallel pairs and simple
// cycles, each listed once. Order: by length, then lexicographic by ids.
// Stops after `limit` cycles and sets *truncated when given.
std::vector<EdgeOrLoopSet> enumerate_cycles(const LoopedGraph& g, std::size_t max_len,
                                            std::size_t limit = static_cast<std::size_t>(-1),
                                            bool* truncated = nullptr);

// 5-sets of vertices spanning all ten K5 edges in the simple support of g.
std::vector<std::array<VertexId, 5>> find_k5_subgraphs(const LoopedGraph& g);

// Spanning subgraph with the given edges and loops (ids refer to g).
LoopedGraph spanning_subgraph(const LoopedGraph& g, const EdgeOrLoopSet& f);

// All of E ∪ L.
EdgeOrLoopSet all_elements(const LoopedGraph& g);

// Keeps one copy of every parallel class of edges (the smallest id) and all
// loops. `kept` receives the original ids of kept edges when non-null.
LoopedGraph collapse_parallel_edges(const LoopedGraph& g, std::vector<std::size_t>* kept = nullptr);

bool has_parallel_edges(const LoopedGraph& g);
bool is_simple(const LoopedGraph& g);

struct VertexDeletion {
  LoopedGraph graph;
  // old id -> new id, or npos for the deleted vertex.
  std::vector<std::size_t> old_to_new;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// G - v with compact renumbering; incident edges and loops are dropped.
VertexDeletion remove_vertex(const LoopedGraph& g, VertexId v);

// Graph induced on the listed vertices, renumbered in list order.
LoopedGraph induced_subgraph(const LoopedGraph& g, const std::vector<VertexId>& vertices);

// Relabels vertices: vertex i of g becomes perm[i].
LoopedGraph relabel(const LoopedGraph& g, const std::vector<VertexId>& perm);

}  // namespace rigor
