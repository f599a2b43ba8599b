#include "rigor/sparsity.hpp"

#include "rigor/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace rigor {

void SparsityParams::validate() const {
  if (k < 1) throw std::invalid_argument("sparsity parameter k must be positive");
  if (l >= 2 * k) throw std::invalid_argument("sparsity parameters need 0 <= l < 2k");
}

bool revalidate(const LoopedGraph& g, const SparsityParams& params,
                const SparsityCertificate& cert) {
  if (!cert.sparse) {
    if (cert.violation.empty()) return false;
    const auto vf = incident_vertices(g, cert.violation);
    return static_cast<long>(cert.violation.size()) >
           static_cast<long>(params.k * vf.size()) - static_cast<long>(params.l);
  }
  if (cert.edge_tail.empty() && cert.pebbles.empty()) return true;
  if (cert.edge_tail.size() != g.edge_count() || cert.pebbles.size() != g.vertex_count())
    return false;
  std::vector<unsigned> out(g.vertex_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (cert.edge_tail[i] != e.u && cert.edge_tail[i] != e.v) return false;
    ++out[cert.edge_tail[i]];
  }
  for (const Loop& l : g.loops()) ++out[l.vertex];
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (out[v] + cert.pebbles[v] != params.k) return false;
  return true;
}

// -- pebble game -------------------------------------------------------------

PebbleGame::PebbleGame(std::size_t n, SparsityParams params)
    : n_(n), params_(params), pebbles_(n, params.k), out_(n), region_(n, 0) {
  params_.validate();
}

bool PebbleGame::fetch_pebble(VertexId root, std::vector<char>& visited) {
  // iterative DFS recording the arc used to enter each vertex
  std::vector<std::size_t> via(n_, static_cast<std::size_t>(-1));
  std::vector<VertexId> stack{root};
  visited[root] = 1;
  VertexId found = static_cast<VertexId>(-1);
  while (!stack.empty() && found == static_cast<VertexId>(-1)) {
    const VertexId x = stack.back();
    stack.pop_back();
    std::vector<std::size_t> arcs = out_[x];
    std::sort(arcs.begin(), arcs.end(), [&](std::size_t a, std::size_t b) {
      return arcs_[a].head != arcs_[b].head ? arcs_[a].head < arcs_[b].head : a < b;
    });
    std::vector<VertexId> next;
    for (std::size_t a : arcs) {
      const VertexId y = arcs_[a].head;
      if (arcs_[a].is_loop || visited[y]) continue;
      visited[y] = 1;
      via[y] = a;
      if (pebbles_[y] > 0) {
        found = y;
        break;
      }
      next.push_back(y);
    }
    stack.insert(stack.end(), next.rbegin(), next.rend());
  }
  if (found == static_cast<VertexId>(-1)) return false;
  // reverse the path root -> ... -> found
  VertexId y = found;
  while (y != root) {
    const std::size_t a = via[y];
    Arc& arc = arcs_[a];
    const VertexId x = arc.tail;
    auto& list = out_[x];
    list.erase(std::find(list.begin(), list.end(), a));
    std::swap(arc.tail, arc.head);
    out_[arc.tail].push_back(a);
    y = x;
  }
  --pebbles_[found];
  ++pebbles_[root];
  return true;
}

bool PebbleGame::gather_for_edge(VertexId u, VertexId v) {
  std::fill(region_.begin(), region_.end(), 0);
  while (pebbles_[u] + pebbles_[v] < params_.l + 1) {
    std::vector<char> visited(n_, 0);
    visited[v] = 1;
    if (pebbles_[u] < params_.k && fetch_pebble(u, visited)) continue;
    std::vector<char> visited_v(n_, 0);
    visited_v[u] = 1;
    if (pebbles_[v] < params_.k && fetch_pebble(v, visited_v)) continue;
    for (std::size_t i = 0; i < n_; ++i) region_[i] = visited[i] || visited_v[i];
    region_[u] = region_[v] = 1;
    return false;
  }
  return true;
}

bool PebbleGame::gather_for_loop(VertexId v) {
  std::fill(region_.begin(), region_.end(), 0);
  // a lone loop already violates the count, so the witness is empty
  if (!params_.loops_admissible()) return false;
  while (pebbles_[v] < params_.l + 1) {
    std::vector<char> visited(n_, 0);
    if (fetch_pebble(v, visited)) continue;
    region_ = visited;
    region_[v] = 1;
    return false;
  }
  return true;
}

void PebbleGame::place(bool is_loop, std::size_t id, VertexId a, VertexId b) {
  VertexId tail = a, head = b;
  if (!is_loop && pebbles_[a] == 0) std::swap(tail, head);
  --pebbles_[tail];
  arcs_.push_back({is_loop, id, tail, head});
  out_[tail].push_back(arcs_.size() - 1);
}

bool PebbleGame::can_insert_edge(VertexId u, VertexId v) { return gather_for_edge(u, v); }
bool PebbleGame::can_insert_loop(VertexId v) { return gather_for_loop(v); }

bool PebbleGame::insert_edge(std::size_t id, VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("pebble game: edge with equal endpoints");
  if (!gather_for_edge(u, v)) return false;
  place(false, id, u, v);
  return true;
}

bool PebbleGame::insert_loop(std::size_t id, VertexId v) {
  if (!gather_for_loop(v)) return false;
  place(true, id, v, v);
  return true;
}

EdgeOrLoopSet PebbleGame::accepted() const {
  EdgeOrLoopSet f;
  for (const Arc& a : arcs_) (a.is_loop ? f.loops : f.edges).push_back(a.id);
  std::sort(f.edges.begin(), f.edges.end());
  std::sort(f.loops.begin(), f.loops.end());
  return f;
}

std::vector<VertexId> PebbleGame::edge_tails(std::size_t edge_count) const {
  std::vector<VertexId> tails(edge_count, static_cast<VertexId>(-1));
  for (const Arc& a : arcs_)
    if (!a.is_loop) tails.at(a.id) = a.tail;
  return tails;
}

EdgeOrLoopSet PebbleGame::rejection_witness() const {
  EdgeOrLoopSet f;
  for (const Arc& a : arcs_)
    if (region_[a.tail]) (a.is_loop ? f.loops : f.edges).push_back(a.id);
  std::sort(f.edges.begin(), f.edges.end());
  std::sort(f.loops.begin(), f.loops.end());
  return f;
}

SparsityCertificate is_sparse(const LoopedGraph& g, const SparsityParams& params) {
  PebbleGame game(g.vertex_count(), params);
  SparsityCertificate cert;
  auto reject = [&](bool is_loop, std::size_t id) {
    cert.sparse = false;
    cert.violation = game.rejection_witness();
    auto& list = is_loop ? cert.violation.loops : cert.violation.edges;
    list.insert(std::lower_bound(list.begin(), list.end(), id), id);
    return cert;
  };
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!game.insert_edge(i, g.edges()[i].u, g.edges()[i].v)) return reject(false, i);
  for (std::size_t i = 0; i < g.loop_count(); ++i)
    if (!game.insert_loop(i, g.loops()[i].vertex)) return reject(true, i);
  cert.sparse = true;
  cert.edge_tail = game.edge_tails(g.edge_count());
  cert.pebbles = game.pebbles();
  return cert;
}

// -- exhaustive backend ------------------------------------------------------

namespace {

// element i < |E| is edge i, otherwise loop i - |E|
struct ElementTable {
  std::vector<VertexId> a, b;  // a == b for loops
  std::vector<bool> is_loop;
  std::size_t edges = 0;

  explicit ElementTable(const LoopedGraph& g) : edges(g.edge_count()) {
    for (const Edge& e : g.edges()) {
      a.push_back(e.u);
      b.push_back(e.v);
      is_loop.push_back(false);
    }
    for (const Loop& l : g.loops()) {
      a.push_back(l.vertex);
      b.push_back(l.vertex);
      is_loop.push_back(true);
    }
  }
  std::size_t size() const { return a.size(); }

  EdgeOrLoopSet to_set(std::uint64_t mask) const {
    EdgeOrLoopSet f;
    for (std::size_t i = 0; i < size(); ++i) {
      if (!(mask >> i & 1)) continue;
      if (is_loop[i]) f.loops.push_back(i - edges);
      else f.edges.push_back(i);
    }
    return f;
  }
};

// Walks every subset of `free_bits` (Gray order) unioned with `fixed`,
// keeping per-vertex incidence counts. `visit(mask, |F|, |V_F|, loops in F)`
// returns false to stop early.
template <typename Visit>
void walk_subsets(const ElementTable& t, std::size_t n, const std::vector<std::size_t>& free_bits,
                  std::uint64_t fixed, Visit&& visit) {
  std::vector<unsigned> count(n, 0);
  std::size_t covered = 0, loops = 0, size = 0;
  std::uint64_t mask = 0;
  auto toggle = [&](std::size_t i) {
    const bool adding = !(mask >> i & 1);
    mask ^= std::uint64_t{1} << i;
    auto bump = [&](VertexId v) {
      if (adding) covered += count[v]++ == 0;
      else covered -= --count[v] == 0;
    };
    bump(t.a[i]);
    if (!t.is_loop[i]) bump(t.b[i]);
    if (t.is_loop[i]) loops += adding ? 1 : -1;
    size += adding ? 1 : -1;
  };
  for (std::size_t i = 0; i < t.size(); ++i)
    if (fixed >> i & 1) toggle(i);
  if (mask != 0 && !visit(mask, size, covered, loops)) return;
  const std::uint64_t total = std::uint64_t{1} << free_bits.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    toggle(free_bits[static_cast<std::size_t>(std::countr_zero(step))]);
    if (!visit(mask, size, covered, loops)) return;
  }
}

void check_budget(const LoopedGraph& g) {
  if (g.element_count() > kBruteForceElementBudget)
    throw ScaleError("exhaustive subset check limited to " +
                     std::to_string(kBruteForceElementBudget) + " edges+loops, got " +
                     std::to_string(g.element_count()));
}

}  // namespace

SparsityCertificate is_sparse_bruteforce(const LoopedGraph& g, const SparsityParams& params) {
  params.validate();
  check_budget(g);
  const ElementTable table(g);
  std::vector<std::size_t> bits(table.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = i;
  std::uint64_t best = 0;
  std::size_t best_size = 0;
  walk_subsets(table, g.vertex_count(), bits, 0,
               [&](std::uint64_t mask, std::size_t size, std::size_t covered, std::size_t) {
                 if (static_cast<long>(size) >
                     static_cast<long>(params.k * covered) - static_cast<long>(params.l)) {
                   if (best == 0 || size < best_size || (size == best_size && mask < best)) {
                     best = mask;
                     best_size = size;
                   }
                 }
                 return true;
               });
  SparsityCertificate cert;
  cert.sparse = best == 0;
  if (!cert.sparse) cert.violation = table.to_set(best);
  return cert;
}

// -- rank, tightness, bases --------------------------------------------------

EdgeOrLoopSet count_matroid_basis(const LoopedGraph& g, const SparsityParams& params) {
  PebbleGame game(g.vertex_count(), params);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    game.insert_edge(i, g.edges()[i].u, g.edges()[i].v);
  for (std::size_t i = 0; i < g.loop_count(); ++i) game.insert_loop(i, g.loops()[i].vertex);
  return game.accepted();
}

std::size_t matroid_rank(const LoopedGraph& g, const SparsityParams& params) {
  return count_matroid_basis(g, params).size();
}

bool is_tight(const LoopedGraph& g, const SparsityParams& params) {
  const long target = static_cast<long>(params.k * g.vertex_count()) - static_cast<long>(params.l);
  return static_cast<long>(g.element_count()) == target && is_sparse(g, params).sparse;
}

namespace {

EdgeOrLoopSet lift_ids(const EdgeOrLoopSet& f, const std::vector<std::size_t>& edge_ids) {
  EdgeOrLoopSet out;
  for (std::size_t e : f.edges) out.edges.push_back(edge_ids[e]);
  std::sort(out.edges.begin(), out.edges.end());
  out.loops = f.loops;
  return out;
}

}  // namespace

std::optional<EdgeOrLoopSet> tight_spanning_basis(const LoopedGraph& g, unsigned t) {
  if (t < 1) throw std::invalid_argument("tight_spanning_basis needs t >= 1");
  std::vector<std::size_t> kept;
  const LoopedGraph collapsed = collapse_parallel_edges(g, &kept);
  const EdgeOrLoopSet basis = count_matroid_basis(collapsed, {t, 0});
  if (basis.size() != t * g.vertex_count()) return std::nullopt;
  return lift_ids(basis, kept);
}

std::optional<LoopedGraph> find_tight_spanning_subgraph(const LoopedGraph& g, unsigned t) {
  auto basis = tight_spanning_basis(g, t);
  if (!basis) return std::nullopt;
  return spanning_subgraph(g, *basis);
}

std::optional<EdgeOrLoopSet> tight_k5free_spanning_basis(const LoopedGraph& g) {
  if (g.vertex_count() > kK5FreeVertexBudget)
    throw ScaleError("K5-free tight subgraph search limited to " +
                     std::to_string(kK5FreeVertexBudget) + " vertices");
  std::vector<std::size_t> kept;
  const LoopedGraph collapsed = collapse_parallel_edges(g, &kept);
  const std::size_t target = 2 * g.vertex_count();
  std::set<std::vector<bool>> explored;

  auto search = [&](auto&& self, std::vector<bool>& excluded) -> std::optional<EdgeOrLoopSet> {
    if (!explored.insert(excluded).second) return std::nullopt;
    LoopedGraph current(collapsed.vertex_count());
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < collapsed.edge_count(); ++i) {
      if (excluded[i]) continue;
      current.add_edge(collapsed.edges()[i].u, collapsed.edges()[i].v);
      ids.push_back(i);
    }
    for (const Loop& l : collapsed.loops()) current.add_loop(l.vertex, l.origin);
    const EdgeOrLoopSet basis = count_matroid_basis(current, {2, 0});
    if (basis.size() < target) return std::nullopt;
    if (find_k5_subgraphs(spanning_subgraph(current, basis)).empty())
      return lift_ids(lift_ids(basis, ids), kept);
    const auto k5s = find_k5_subgraphs(current);
    const auto& clique = k5s.front();
    for (std::size_t a = 0; a < 5; ++a) {
      for (std::size_t b = a + 1; b < 5; ++b) {
        for (std::size_t i = 0; i < collapsed.edge_count(); ++i) {
          const Edge& e = collapsed.edges()[i];
          if (excluded[i]) continue;
          if (!((e.u == clique[a] && e.v == clique[b]) || (e.u == clique[b] && e.v == clique[a])))
            continue;
          excluded[i] = true;
          auto found = self(self, excluded);
          excluded[i] = false;
          if (found) return found;
        }
      }
    }
    return std::nullopt;
  };
  std::vector<bool> excluded(collapsed.edge_count(), false);
  return search(search, excluded);
}

std::optional<LoopedGraph> find_tight_k5free_spanning_subgraph(const LoopedGraph& g) {
  auto basis = tight_k5free_spanning_basis(g);
  if (!basis) return std::nullopt;
  return spanning_subgraph(g, *basis);
}

EdgeOrLoopSet tight_closure(const LoopedGraph& g, const SparsityParams& params,
                            const EdgeOrLoopSet& seed) {
  params.validate();
  if (!is_sparse(g, params).sparse)
    throw HypothesisError("tight_closure requires a sparse graph");
  const std::size_t n = g.vertex_count();
  if (n > 24) throw ScaleError("tight_closure limited to 24 vertices");
  const ElementTable table(g);
  std::vector<std::uint32_t> element_mask(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    element_mask[i] = (std::uint32_t{1} << table.a[i]) | (std::uint32_t{1} << table.b[i]);
  std::uint32_t seed_mask = 0;
  for (VertexId v : incident_vertices(g, seed)) seed_mask |= std::uint32_t{1} << v;

  auto induced = [&](std::uint32_t u) {
    std::size_t c = 0;
    for (std::uint32_t m : element_mask) c += (m & ~u) == 0;
    return c;
  };
  auto tight = [&](std::uint32_t u) {
    const std::size_t c = induced(u);
    return c > 0 && static_cast<long>(c) == static_cast<long>(params.k * std::popcount(u)) -
                                               static_cast<long>(params.l);
  };
  const std::uint32_t rest = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1) & ~seed_mask;
  std::uint32_t union_mask = 0, largest = 0;
  bool any = false;
  // supersets of the seed's vertex set
  for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
    const std::uint32_t u = sub | seed_mask;
    if (u != 0 && tight(u)) {
      any = true;
      union_mask |= u;
      if (std::popcount(u) > std::popcount(largest)) largest = u;
    }
    if (sub == 0) break;
  }
  if (!any) throw std::invalid_argument("no tight subgraph contains the seed");
  const std::uint32_t closure = tight(union_mask) ? union_mask : largest;
  EdgeOrLoopSet out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (element_mask[i] & ~closure) continue;
    if (table.is_loop[i]) out.loops.push_back(i - table.edges);
    else out.edges.push_back(i);
  }
  return out;
}

// -- mixed count -------------------------------------------------------------

std::size_t mixed_count_rank(const LoopedGraph& g) {
  check_budget(g);
  const ElementTable table(g);
  std::vector<std::size_t> independent;
  for (std::size_t e = 0; e < table.size(); ++e) {
    bool ok = true;
    walk_subsets(table, g.vertex_count(), independent, std::uint64_t{1} << e,
                 [&](std::uint64_t, std::size_t size, std::size_t covered, std::size_t loops) {
                   const long bound = static_cast<long>(2 * covered) - (loops == 0 ? 3 : 0);
                   if (static_cast<long>(size) > bound) ok = false;
                   return ok;
                 });
    if (ok) independent.push_back(e);
  }
  return independent.size();
}

bool st_spanning_check(const LoopedGraph& g) {
  return mixed_count_rank(g) == 2 * g.vertex_count();
}

}  // namespace rigor
