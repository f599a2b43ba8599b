#include "rigor/linecon.hpp"

#include "rigor/construct.hpp"
#include "rigor/errors.hpp"

#include <algorithm>
#include <queue>

namespace rigor {

namespace {

RationalVector row_of(const RationalMatrix& m, std::size_t i) {
  return m.row(static_cast<Index>(i)).transpose();
}

std::vector<RationalVector> normals_at(const LoopedGraph& lifted, const RationalMatrix& q,
                                       VertexId v) {
  std::vector<RationalVector> out;
  for (std::size_t l : loops_at(lifted, v)) out.push_back(row_of(q, l));
  return out;
}

// First d-1 independent normals at v, in loop id order, optionally forced to
// start with `first`.
std::vector<RationalVector> select_normals(const std::vector<RationalVector>& at, Index d,
                                           std::optional<RationalVector> first = std::nullopt) {
  std::vector<RationalVector> s;
  if (first) s.push_back(*first);
  for (const RationalVector& x : at) {
    if (static_cast<Index>(s.size()) >= d - 1) break;
    s.push_back(x);
    if (span_dimension(s, d) != static_cast<Index>(s.size())) s.pop_back();
  }
  return s;
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& x, Index d) {
  std::vector<RationalVector> t = basis;
  const Index before = span_dimension(t, d);
  t.push_back(x);
  return span_dimension(t, d) == before;
}

void check_q(const LoopedGraph& lifted, Index d, const RationalMatrix& q) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (q.rows() != static_cast<Index>(lifted.loop_count()) || q.cols() != d)
    throw std::invalid_argument("q must have one row of length d per loop of G^[d-1]");
}

bool witnesses(const LoopedGraph& g, const LoopedGraph& lifted, Index d, const RationalMatrix& q,
               const EdgeOrLoopSet& cycle) {
  if (cycle.size() == 2) return false;
  if (d == 1) {
    if (cycle.loops.size() != 1) return false;
    return !is_zero_vector(row_of(q, cycle.loops[0]));
  }
  std::vector<RationalVector> all;
  for (VertexId v : incident_vertices(g, cycle))
    for (RationalVector& x : normals_at(lifted, q, v)) all.push_back(std::move(x));
  return span_dimension(all, d) == d;
}

// Vertices of an edge cycle in cyclic order.
std::vector<VertexId> cycle_order(const LoopedGraph& g, const EdgeOrLoopSet& cycle) {
  std::vector<VertexId> order;
  std::vector<bool> used(cycle.edges.size(), false);
  VertexId cur = g.edges()[cycle.edges[0]].u;
  order.push_back(cur);
  for (std::size_t step = 0; step + 1 < cycle.edges.size(); ++step) {
    for (std::size_t i = 0; i < cycle.edges.size(); ++i) {
      if (used[i]) continue;
      const Edge& e = g.edges()[cycle.edges[i]];
      if (e.u != cur && e.v != cur) continue;
      used[i] = true;
      cur = e.u == cur ? e.v : e.u;
      order.push_back(cur);
      break;
    }
  }
  return order;
}

}  // namespace

Index normal_span_dimension(const LoopedGraph& g, Index d, const RationalMatrix& q, VertexId v) {
  return span_dimension(normals_at(g, q, v), d);
}

bool line_admissible(const LoopedGraph& lifted, Index d, const RationalMatrix& q) {
  check_q(lifted, d, q);
  for (VertexId v = 0; v < lifted.vertex_count(); ++v)
    if (normal_span_dimension(lifted, d, q, v) < d - 1) return false;
  std::vector<RationalVector> all;
  for (std::size_t l = 0; l < lifted.loop_count(); ++l) all.push_back(row_of(q, l));
  return span_dimension(all, d) == d;
}

LineCheck line_theorem_check(const LoopedGraph& g, Index d, const RationalMatrix& q,
                             std::size_t cycle_limit) {
  const LoopedGraph lifted = add_uniform_loops(g, static_cast<std::size_t>(std::max<Index>(d - 1, 0)));
  check_q(lifted, d, q);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (normal_span_dimension(lifted, d, q, v) < d - 1)
      throw HypothesisError("dim W_v < d-1 at vertex " + std::to_string(v));

  LineCheck out;
  out.components = components(g);
  out.witnesses.assign(out.components.size(), std::nullopt);
  std::vector<std::size_t> comp_of(g.vertex_count());
  for (std::size_t c = 0; c < out.components.size(); ++c)
    for (VertexId v : out.components[c]) comp_of[v] = c;

  const auto cycles = enumerate_cycles(g, g.vertex_count(), cycle_limit, &out.truncated);
  for (const EdgeOrLoopSet& cycle : cycles) {
    const std::size_t c = comp_of[incident_vertices(g, cycle).front()];
    if (out.witnesses[c]) continue;
    if (witnesses(g, lifted, d, q, cycle)) out.witnesses[c] = cycle;
  }
  const bool all = std::all_of(out.witnesses.begin(), out.witnesses.end(),
                               [](const auto& w) { return w.has_value(); });
  out.verdict = all ? LineVerdict::holds : out.truncated ? LineVerdict::unknown : LineVerdict::fails;
  return out;
}

std::optional<RationalFramework> realize_line(const LoopedGraph& g, Index d,
                                              const RationalMatrix& q, std::uint64_t seed,
                                              std::size_t cycle_limit) {
  const LineCheck check = line_theorem_check(g, d, q, cycle_limit);
  if (check.verdict != LineVerdict::holds) return std::nullopt;
  const LoopedGraph lifted = add_uniform_loops(g, static_cast<std::size_t>(d - 1));
  Rng rng(seed);

  auto random_point = [&] { return rng.integer_vector(d, -1000, 1000); };

  for (unsigned attempt = 0; attempt < kDefaultRetries; ++attempt) {
    RationalFramework f(lifted, d);
    f.q = q;
    std::vector<bool> placed(g.vertex_count(), false);
    auto set_p = [&](VertexId v, const RationalVector& x) {
      f.p.row(static_cast<Index>(v)) = x.transpose();
      placed[v] = true;
    };
    auto pos = [&](VertexId v) -> RationalVector { return f.p.row(static_cast<Index>(v)).transpose(); };
    // p(w) - p(parent) outside the span of d-1 selected normals at w, and
    // optionally `extra(p(w))` true as well.
    auto place_after = [&](VertexId w, VertexId parent, auto&& extra) {
      const auto s = select_normals(normals_at(lifted, q, w), d);
      for (int tries = 0; tries < 64; ++tries) {
        const RationalVector x = random_point();
        if (x == pos(parent)) continue;
        if (d > 1 && in_span(s, x - pos(parent), d)) continue;
        if (!extra(x)) continue;
        set_p(w, x);
        return true;
      }
      return false;
    };
    auto always = [](const RationalVector&) { return true; };
    bool ok = true;

    for (std::size_t c = 0; c < check.components.size() && ok; ++c) {
      const EdgeOrLoopSet& cycle = *check.witnesses[c];
      std::vector<VertexId> seeds;
      if (!cycle.loops.empty()) {
        const VertexId v = g.loops()[cycle.loops[0]].vertex;
        set_p(v, random_point());
        seeds.push_back(v);
      } else {
        const std::vector<VertexId> order = cycle_order(g, cycle);
        const std::size_t m = order.size();
        // adjacent u, v with a normal at u outside W_v
        bool found = false;
        for (std::size_t i = 0; i < m && !found; ++i) {
          for (int dir = 0; dir < 2 && !found; ++dir) {
            const std::size_t iu = dir == 0 ? i : (i + 1) % m;
            const std::size_t iv = dir == 0 ? (i + 1) % m : i;
            const VertexId u = order[iu], v = order[iv];
            const auto sv = select_normals(normals_at(lifted, q, v), d);
            std::optional<RationalVector> e;
            for (std::size_t l : loops_at(lifted, u)) {
              if (!in_span(sv, row_of(q, l), d)) {
                e = row_of(q, l);
                break;
              }
            }
            if (!e) continue;
            found = true;
            const auto su = select_normals(normals_at(lifted, q, u), d, *e);
            // path v = x_0, ..., x_r = w running away from u
            std::vector<VertexId> path;
            std::size_t idx = iv;
            for (std::size_t s = 0; s + 1 < m; ++s) {
              path.push_back(order[idx]);
              idx = (idx + (dir == 0 ? 1 : m - 1)) % m;
            }
            set_p(v, random_point());
            for (std::size_t s = 1; s < path.size() && ok; ++s) {
              const bool last = s + 1 == path.size();
              ok = place_after(path[s], path[s - 1], [&](const RationalVector& x) {
                return !last || !in_span(su, pos(v) + *e - x, d);
              });
            }
            if (ok) set_p(u, pos(v) + *e);
            seeds = order;
          }
        }
        if (!found) throw std::logic_error("realize_line: admissible cycle without a split pair");
      }
      // breadth-first 0-extensions for the rest of the component
      std::queue<VertexId> frontier;
      for (VertexId s : seeds) frontier.push(s);
      while (!frontier.empty() && ok) {
        const VertexId x = frontier.front();
        frontier.pop();
        for (VertexId y : neighbours(g, x)) {
          if (placed[y]) continue;
          ok = place_after(y, x, always);
          if (!ok) break;
          frontier.push(y);
        }
      }
    }
    if (ok && is_inf_rigid(f)) return f;
  }
  throw DegenerateError("realize_line: no rigid placement found");
}

}  // namespace rigor
