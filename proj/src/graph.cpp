#include "rigor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rigor {

namespace {

void check_vertex(std::size_t n, VertexId v) {
  if (v >= n)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range (n=" +
                                std::to_string(n) + ")");
}

std::pair<VertexId, VertexId> ordered(const Edge& e) {
  return e.u < e.v ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

}  // namespace

LoopedGraph::LoopedGraph(std::size_t n, std::vector<Edge> edges, std::vector<Loop> loops)
    : n_(n) {
  edges_.reserve(edges.size());
  loops_.reserve(loops.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
  for (const Loop& l : loops) add_loop(l.vertex, l.origin);
}

std::size_t LoopedGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("edge {v,v}: loops belong in the loop list");
  edges_.push_back({u, v});
  return edges_.size() - 1;
}

std::size_t LoopedGraph::add_loop(VertexId v, LoopOrigin origin) {
  check_vertex(n_, v);
  loops_.push_back({v, origin});
  return loops_.size() - 1;
}

bool operator==(const LoopedGraph& a, const LoopedGraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size() || a.loops_.size() != b.loops_.size())
    return false;
  auto edge_keys = [](const LoopedGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> keys;
    keys.reserve(g.edges_.size());
    for (const Edge& e : g.edges_) keys.push_back(ordered(e));
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  auto loop_keys = [](const LoopedGraph& g) {
    std::vector<VertexId> keys;
    keys.reserve(g.loops_.size());
    for (const Loop& l : g.loops_) keys.push_back(l.vertex);
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  return edge_keys(a) == edge_keys(b) && loop_keys(a) == loop_keys(b);
}

LoopedGraph complete_graph(std::size_t n) {
  LoopedGraph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

LoopedGraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  LoopedGraph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

LoopedGraph add_uniform_loops(const LoopedGraph& g, std::size_t k) {
  LoopedGraph out = g;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (std::size_t i = 0; i < k; ++i) out.add_loop(v, LoopOrigin::uniform);
  return out;
}

std::size_t loop_multiplicity(const LoopedGraph& g, VertexId v) {
  check_vertex(g.vertex_count(), v);
  return static_cast<std::size_t>(std::count_if(g.loops().begin(), g.loops().end(),
                                                [v](const Loop& l) { return l.vertex == v; }));
}

std::size_t delta(const LoopedGraph& g, VertexId v) {
  return edges_at(g, v).size() + loop_multiplicity(g, v);
}

std::size_t degree(const LoopedGraph& g, VertexId v) {
  return edges_at(g, v).size() + 2 * loop_multiplicity(g, v);
}

std::vector<VertexId> neighbours(const LoopedGraph& g, VertexId v) {
  check_vertex(g.vertex_count(), v);
  std::vector<VertexId> out;
  for (const Edge& e : g.edges()) {
    if (e.u == v) out.push_back(e.v);
    else if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> loops_at(const LoopedGraph& g, VertexId v) {
  check_vertex(g.vertex_count(), v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.loop_count(); ++i)
    if (g.loops()[i].vertex == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> edges_at(const LoopedGraph& g, VertexId v) {
  check_vertex(g.vertex_count(), v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.edges()[i].u == v || g.edges()[i].v == v) out.push_back(i);
  return out;
}

std::vector<VertexId> incident_vertices(const LoopedGraph& g, const EdgeOrLoopSet& f) {
  std::vector<VertexId> out;
  for (std::size_t id : f.edges) {
    out.push_back(g.edges().at(id).u);
    out.push_back(g.edges().at(id).v);
  }
  for (std::size_t id : f.loops) out.push_back(g.loops().at(id).vertex);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<VertexId>> components(const LoopedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    const VertexId a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  for (VertexId v = 0; v < n; ++v) {
    const VertexId r = find(v);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

bool is_cycle(const LoopedGraph& g) {
  if (g.vertex_count() == 0) return false;
  if (components(g).size() != 1) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (degree(g, v) != 2) return false;
  return true;
}

namespace {

struct CycleSearch {
  const LoopedGraph& g;
  std::size_t max_len;
  std::size_t limit;
  // parallel[u][v]: edge ids joining u and v, ascending
  std::vector<std::vector<std::vector<std::size_t>>> parallel;
  std::vector<std::vector<VertexId>> adj;
  std::vector<char> on_path;
  std::vector<VertexId> path;
  std::vector<EdgeOrLoopSet> found;
  bool truncated = false;

  CycleSearch(const LoopedGraph& graph, std::size_t len, std::size_t lim)
      : g(graph), max_len(len), limit(lim) {
    const std::size_t n = g.vertex_count();
    parallel.assign(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      parallel[e.u][e.v].push_back(i);
      parallel[e.v][e.u].push_back(i);
    }
    adj.resize(n);
    for (VertexId v = 0; v < n; ++v) adj[v] = neighbours(g, v);
    on_path.assign(n, 0);
  }

  bool full() {
    if (found.size() >= limit) {
      truncated = true;
      return true;
    }
    return false;
  }

  void emit_edge_choices() {
    // choose one parallel copy for each consecutive pair
    const std::size_t len = path.size();
    std::vector<const std::vector<std::size_t>*> options(len);
    for (std::size_t i = 0; i < len; ++i) options[i] = &parallel[path[i]][path[(i + 1) % len]];
    std::vector<std::size_t> pick(len, 0);
    while (true) {
      if (full()) return;
      EdgeOrLoopSet c;
      for (std::size_t i = 0; i < len; ++i) c.edges.push_back((*options[i])[pick[i]]);
      std::sort(c.edges.begin(), c.edges.end());
      found.push_back(std::move(c));
      std::size_t i = 0;
      while (i < len && ++pick[i] == options[i]->size()) pick[i++] = 0;
      if (i == len) return;
    }
  }

  void extend(VertexId start) {
    if (truncated) return;
    const VertexId last = path.back();
    for (VertexId next : adj[last]) {
      if (truncated) return;
      if (next == start && path.size() >= 3 && path[1] < path.back()) {
        emit_edge_choices();
        continue;
      }
      if (next <= start || on_path[next] || path.size() == max_len) continue;
      on_path[next] = 1;
      path.push_back(next);
      extend(start);
      path.pop_back();
      on_path[next] = 0;
    }
  }
};

}  // namespace

std::vector<EdgeOrLoopSet> enumerate_cycles(const LoopedGraph& g, std::size_t max_len,
                                            std::size_t limit, bool* truncated) {
  CycleSearch search(g, max_len, limit);
  if (max_len >= 1) {
    for (std::size_t i = 0; i < g.loop_count() && !search.full(); ++i)
      search.found.push_back({{}, {i}});
  }
  if (max_len >= 2) {
    for (std::size_t i = 0; i < g.edge_count() && !search.truncated; ++i)
      for (std::size_t j = i + 1; j < g.edge_count() && !search.full(); ++j)
        if (ordered(g.edges()[i]) == ordered(g.edges()[j])) search.found.push_back({{i, j}, {}});
  }
  if (max_len >= 3) {
    for (VertexId s = 0; s < g.vertex_count() && !search.truncated; ++s) {
      search.path = {s};
      search.on_path[s] = 1;
      search.extend(s);
      search.on_path[s] = 0;
    }
  }
  std::stable_sort(search.found.begin(), search.found.end(),
                   [](const EdgeOrLoopSet& a, const EdgeOrLoopSet& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     if (a.loops != b.loops) return a.loops < b.loops;
                     return a.edges < b.edges;
                   });
  if (truncated) *truncated = search.truncated;
  return std::move(search.found);
}

std::vector<std::array<VertexId, 5>> find_k5_subgraphs(const LoopedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adjacent[e.u][e.v] = adjacent[e.v][e.u] = 1;
  std::vector<std::array<VertexId, 5>> out;
  std::array<VertexId, 5> clique{};
  auto grow = [&](auto&& self, std::size_t size, VertexId from) -> void {
    if (size == 5) {
      out.push_back(clique);
      return;
    }
    for (VertexId v = from; v < n; ++v) {
      bool ok = true;
      for (std::size_t i = 0; i < size && ok; ++i) ok = adjacent[clique[i]][v];
      if (!ok) continue;
      clique[size] = v;
      self(self, size + 1, v + 1);
    }
  };
  grow(grow, 0, 0);
  return out;
}

LoopedGraph spanning_subgraph(const LoopedGraph& g, const EdgeOrLoopSet& f) {
  LoopedGraph out(g.vertex_count());
  for (std::size_t id : f.edges) out.add_edge(g.edges().at(id).u, g.edges().at(id).v);
  for (std::size_t id : f.loops) out.add_loop(g.loops().at(id).vertex, g.loops().at(id).origin);
  return out;
}

EdgeOrLoopSet all_elements(const LoopedGraph& g) {
  EdgeOrLoopSet f;
  f.edges.resize(g.edge_count());
  std::iota(f.edges.begin(), f.edges.end(), std::size_t{0});
  f.loops.resize(g.loop_count());
  std::iota(f.loops.begin(), f.loops.end(), std::size_t{0});
  return f;
}

LoopedGraph collapse_parallel_edges(const LoopedGraph& g, std::vector<std::size_t>* kept) {
  std::vector<std::pair<VertexId, VertexId>> seen;
  LoopedGraph out(g.vertex_count());
  if (kept) kept->clear();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto key = ordered(g.edges()[i]);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.add_edge(g.edges()[i].u, g.edges()[i].v);
    if (kept) kept->push_back(i);
  }
  for (const Loop& l : g.loops()) out.add_loop(l.vertex, l.origin);
  return out;
}

bool has_parallel_edges(const LoopedGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> keys;
  for (const Edge& e : g.edges()) keys.push_back(ordered(e));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

bool is_simple(const LoopedGraph& g) { return g.loop_count() == 0 && !has_parallel_edges(g); }

VertexDeletion remove_vertex(const LoopedGraph& g, VertexId v) {
  check_vertex(g.vertex_count(), v);
  VertexDeletion out;
  out.old_to_new.assign(g.vertex_count(), VertexDeletion::npos);
  std::size_t next = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (u != v) out.old_to_new[u] = next++;
  out.graph = LoopedGraph(next);
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) out.graph.add_edge(out.old_to_new[e.u], out.old_to_new[e.v]);
  for (const Loop& l : g.loops())
    if (l.vertex != v) out.graph.add_loop(out.old_to_new[l.vertex], l.origin);
  return out;
}

LoopedGraph induced_subgraph(const LoopedGraph& g, const std::vector<VertexId>& vertices) {
  std::vector<std::size_t> index(g.vertex_count(), VertexDeletion::npos);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  LoopedGraph out(vertices.size());
  for (const Edge& e : g.edges())
    if (index[e.u] != VertexDeletion::npos && index[e.v] != VertexDeletion::npos)
      out.add_edge(index[e.u], index[e.v]);
  for (const Loop& l : g.loops())
    if (index[l.vertex] != VertexDeletion::npos) out.add_loop(index[l.vertex], l.origin);
  return out;
}

LoopedGraph relabel(const LoopedGraph& g, const std::vector<VertexId>& perm) {
  if (perm.size() != g.vertex_count()) throw std::invalid_argument("relabel: size mismatch");
  LoopedGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  for (const Loop& l : g.loops()) out.add_loop(perm[l.vertex], l.origin);
  return out;
}

}  // namespace rigor
