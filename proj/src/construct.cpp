#include "rigor/construct.hpp"

#include "rigor/sparsity.hpp"

#include <algorithm>
#include <numeric>

namespace rigor {

namespace {

std::string vertex_str(VertexId v) { return std::to_string(v); }

// Greedy independent subset of `vectors` (in order) extending `start`.
std::vector<RationalVector> extend_independent(std::vector<RationalVector> start,
                                               const std::vector<RationalVector>& vectors,
                                               Index d) {
  Index dim = span_dimension(start, d);
  for (const RationalVector& x : vectors) {
    start.push_back(x);
    const Index next = span_dimension(start, d);
    if (next == dim) start.pop_back();
    else dim = next;
  }
  return start;
}

RationalVector loop_normal(const RationalFramework& f, std::size_t loop) {
  return f.q.row(static_cast<Index>(loop)).transpose();
}

RationalVector position(const RationalFramework& f, VertexId v) {
  return f.p.row(static_cast<Index>(v)).transpose();
}

std::vector<RationalVector> loop_normals_at(const RationalFramework& f, VertexId v) {
  std::vector<RationalVector> out;
  for (std::size_t l : loops_at(f.graph, v)) out.push_back(loop_normal(f, l));
  return out;
}

// Random integer vectors completing `basis` to a basis of Q^d.
std::vector<RationalVector> complete_basis(const std::vector<RationalVector>& basis, Index d,
                                           Rng& rng) {
  std::vector<RationalVector> out = basis;
  std::vector<RationalVector> added;
  int guard = 0;
  while (static_cast<Index>(out.size()) < d) {
    RationalVector x = rng.integer_vector(d, -1000, 1000);
    out.push_back(x);
    if (span_dimension(out, d) == static_cast<Index>(out.size())) {
      added.push_back(std::move(x));
      continue;
    }
    out.pop_back();
    if (++guard > 256) throw DegenerateError("could not complete a basis");
  }
  return added;
}

std::vector<RationalVector> random_basis(Index d, Rng& rng) { return complete_basis({}, d, rng); }

// Framework on `target` assembled from frameworks on induced pieces. Vertex
// i of piece c is pieces[c].second[i] in target; loops are matched per
// vertex in id order.
RationalFramework assemble(const LoopedGraph& target, Index d,
                           const std::vector<std::pair<RationalFramework, std::vector<VertexId>>>& pieces) {
  RationalFramework out(target, d);
  for (const auto& [piece, vertices] : pieces) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const VertexId v = vertices[i];
      out.p.row(static_cast<Index>(v)) = piece.p.row(static_cast<Index>(i));
      const auto from = loops_at(piece.graph, i);
      const auto to = loops_at(target, v);
      if (from.size() != to.size()) throw std::logic_error("assemble: loop counts differ");
      for (std::size_t j = 0; j < to.size(); ++j)
        out.q.row(static_cast<Index>(to[j])) = piece.q.row(static_cast<Index>(from[j]));
    }
  }
  return out;
}

void require_rigid(const RationalFramework& f, const char* what) {
  if (!is_inf_rigid(f)) throw std::logic_error(std::string(what) + ": result is not rigid");
}

}  // namespace

// -- reduction ---------------------------------------------------------------

Reduction reduce_vertex(const LoopedGraph& g, unsigned t, VertexId v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("reduce_vertex: no such vertex");
  const SparsityParams params{t, 0};
  if (!is_tight(g, params)) throw HypothesisError("reduce_vertex needs a (t,0)-tight graph");
  const std::size_t dv = delta(g, v);
  if (dv < t) throw HypothesisError("reduce_vertex needs delta(v) >= t");

  Reduction out;
  out.step.vertex = v;
  out.step.k = dv - t;
  VertexDeletion del = remove_vertex(g, v);
  out.step.old_to_new = del.old_to_new;
  LoopedGraph& h = del.graph;

  PebbleGame game(h.vertex_count(), params);
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    if (!game.insert_edge(i, h.edges()[i].u, h.edges()[i].v))
      throw std::logic_error("reduce_vertex: G - v is not sparse");
  for (std::size_t i = 0; i < h.loop_count(); ++i)
    if (!game.insert_loop(i, h.loops()[i].vertex))
      throw std::logic_error("reduce_vertex: G - v is not sparse");

  const std::vector<VertexId> nbrs = neighbours(g, v);
  for (std::size_t slot = 0; slot < out.step.k; ++slot) {
    bool placed = false;
    for (VertexId w : nbrs) {
      if (std::find(out.step.neighbours.begin(), out.step.neighbours.end(), w) !=
          out.step.neighbours.end())
        continue;
      const VertexId hw = del.old_to_new[w];
      if (!game.can_insert_loop(hw)) continue;
      const std::size_t id = h.add_loop(hw);
      game.insert_loop(id, hw);
      out.step.neighbours.push_back(w);
      out.step.new_loops.push_back(id);
      placed = true;
      break;
    }
    if (!placed) throw std::logic_error("reduce_vertex: no admissible neighbour");
  }
  if (!is_tight(h, params)) throw std::logic_error("reduce_vertex: result is not tight");
  out.graph = std::move(h);
  return out;
}

// -- extension ---------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

}  // namespace

ExtensionError::ExtensionError(std::vector<std::string> violations)
    : HypothesisError("invalid k-loop extension: " + join(violations)),
      violations_(std::move(violations)) {}

std::vector<std::string> extension_violations(const LoopedGraph& h, const ExtensionData& ext) {
  std::vector<std::string> out;
  const std::size_t k = ext.k();
  const std::size_t d = ext.d < 0 ? 0 : static_cast<std::size_t>(ext.d);
  if (ext.d < 1) out.push_back("dimension must be positive");
  std::vector<VertexId> loop_vertices;
  for (std::size_t l : ext.deleted_loops) {
    if (l >= h.loop_count()) {
      out.push_back("deleted loop " + std::to_string(l) + " does not exist");
      continue;
    }
    const VertexId x = h.loops()[l].vertex;
    if (std::find(loop_vertices.begin(), loop_vertices.end(), x) != loop_vertices.end())
      out.push_back("deleted loops share vertex " + vertex_str(x));
    loop_vertices.push_back(x);
  }
  for (VertexId x : ext.edge_targets)
    if (x >= h.vertex_count()) out.push_back("edge target " + vertex_str(x) + " does not exist");
  for (VertexId x : loop_vertices) {
    const auto c = std::count(ext.edge_targets.begin(), ext.edge_targets.end(), x);
    if (c != 1)
      out.push_back("deleted-loop vertex " + vertex_str(x) + " needs exactly one new edge, got " +
                    std::to_string(c));
  }
  if (ext.new_loops < k)
    out.push_back("at least " + std::to_string(k) + " loops needed at the new vertex, got " +
                  std::to_string(ext.new_loops));
  if (ext.new_loops > d) out.push_back("more than d loops at the new vertex");
  if (ext.edge_targets.size() > d) out.push_back("more than d edges at the new vertex");
  if (ext.edge_targets.size() + ext.new_loops != d + k)
    out.push_back("new vertex needs d + k = " + std::to_string(d + k) + " incidences, got " +
                  std::to_string(ext.edge_targets.size() + ext.new_loops));
  return out;
}

LoopedGraph apply_extension(const LoopedGraph& h, const ExtensionData& ext) {
  auto violations = extension_violations(h, ext);
  if (!violations.empty()) throw ExtensionError(std::move(violations));
  LoopedGraph g(h.vertex_count());
  for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
  for (std::size_t i = 0; i < h.loop_count(); ++i)
    if (std::find(ext.deleted_loops.begin(), ext.deleted_loops.end(), i) == ext.deleted_loops.end())
      g.add_loop(h.loops()[i].vertex, h.loops()[i].origin);
  const VertexId v = g.add_vertex();
  for (VertexId x : ext.edge_targets) g.add_edge(x, v);
  for (std::size_t i = 0; i < ext.new_loops; ++i) g.add_loop(v, LoopOrigin::uniform);
  // new edges were appended after H's edges; loops likewise
  return g;
}

ExtensionData reversal(const LoopedGraph& g, const ReductionStep& step, std::size_t lift, Index d) {
  ExtensionData ext;
  ext.d = d;
  ext.deleted_loops = step.new_loops;
  for (std::size_t e : edges_at(g, step.vertex)) {
    const Edge& edge = g.edges()[e];
    const VertexId other = edge.u == step.vertex ? edge.v : edge.u;
    ext.edge_targets.push_back(step.old_to_new[other]);
  }
  ext.new_loops = loop_multiplicity(g, step.vertex) + lift;
  return ext;
}

std::vector<VertexId> reversal_relabeling(const ReductionStep& step) {
  std::vector<VertexId> perm(step.old_to_new.size());
  for (VertexId old = 0; old < step.old_to_new.size(); ++old)
    if (old != step.vertex) perm[step.old_to_new[old]] = old;
  perm.back() = step.vertex;
  return perm;
}

RationalFramework genericize(const RationalFramework& f, Rng& rng, unsigned attempt) {
  for (unsigned a = attempt; a < attempt + 4; ++a) {
    const unsigned bits = 20 + 4 * a;
    const Integer scale = Integer(1) << bits;
    auto snap = [&](const Rational& x) {
      const Rational scaled = x * Rational(scale);
      // floor(scaled + 1/2)
      Integer num = numerator(scaled), den = denominator(scaled);
      Integer rounded = (2 * num + den) / (2 * den);
      if (2 * num + den < 0 && (2 * num + den) % (2 * den) != 0) rounded -= 1;
      return Rational(rounded + rng.uniform(-1024, 1024)) / Rational(scale);
    };
    RationalFramework out = f;
    for (Index i = 0; i < out.p.rows(); ++i)
      for (Index c = 0; c < out.d; ++c) out.p(i, c) = snap(f.p(i, c));
    for (Index i = 0; i < out.q.rows(); ++i)
      for (Index c = 0; c < out.d; ++c) out.q(i, c) = snap(f.q(i, c));
    if (is_inf_rigid(out)) return out;
  }
  return f;
}

RationalFramework geometric_extension(const RationalFramework& fh, const ExtensionData& ext,
                                      Rng& rng, unsigned retries) {
  const LoopedGraph g = apply_extension(fh.graph, ext);
  if (ext.d != fh.d) throw HypothesisError("extension dimension differs from the framework");
  const Index d = fh.d;
  const std::size_t k = ext.k();
  std::vector<VertexId> vj;
  for (std::size_t l : ext.deleted_loops) vj.push_back(fh.graph.loops()[l].vertex);
  if (k >= 2) {
    const std::size_t need = (static_cast<std::size_t>(d) * (k - 1) + k - 1) / k;
    for (VertexId x : vj)
      if (loop_multiplicity(fh.graph, x) < need)
        throw HypothesisError("vertex " + vertex_str(x) + " needs at least " +
                              std::to_string(need) + " loops for a " + std::to_string(k) +
                              "-loop extension");
  }
  if (!is_inf_rigid(fh)) throw HypothesisError("geometric_extension needs a rigid framework");

  // H loop id -> G loop id for surviving loops
  std::vector<std::size_t> loop_map(fh.graph.loop_count(), static_cast<std::size_t>(-1));
  {
    std::size_t next = 0;
    for (std::size_t i = 0; i < fh.graph.loop_count(); ++i)
      if (std::find(ext.deleted_loops.begin(), ext.deleted_loops.end(), i) ==
          ext.deleted_loops.end())
        loop_map[i] = next++;
  }
  const VertexId v = fh.graph.vertex_count();
  const std::vector<std::size_t> new_loop_ids = loops_at(g, v);

  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    const RationalFramework base = attempt == 0 ? fh : genericize(fh, rng, attempt);

    // W_j and the affine intersection of p(v_j) + W_j
    std::vector<std::vector<RationalVector>> w(k);
    std::vector<RationalVector> rows;
    std::vector<Rational> rhs;
    Index expected = d;
    for (std::size_t j = 0; j < k; ++j) {
      w[j] = extend_independent({}, loop_normals_at(base, vj[j]), d);
      expected -= d - static_cast<Index>(w[j].size());
      const RationalVector pj = position(base, vj[j]);
      for (const RationalVector& nrm :
           nullspace(stack_rows(w[j], d))) {
        rows.push_back(nrm);
        rhs.push_back(nrm.dot(pj));
      }
    }
    std::optional<AffineSolutionSet> sol;
    if (rows.empty()) {
      sol = AffineSolutionSet{RationalVector::Zero(d), {}};
      for (Index c = 0; c < d; ++c) {
        RationalVector e = RationalVector::Zero(d);
        e(c) = 1;
        sol->directions.push_back(e);
      }
    } else {
      RationalVector b(static_cast<Index>(rhs.size()));
      for (std::size_t i = 0; i < rhs.size(); ++i) b(static_cast<Index>(i)) = rhs[i];
      sol = solve_linear_system(stack_rows(rows, d), b);
    }
    if (!sol || sol->dimension() != std::max<Index>(expected, 0) || expected < 0) continue;

    std::vector<RationalVector> targets;
    for (VertexId x : ext.edge_targets) targets.push_back(position(base, x));

    for (int inner = 0; inner < 8; ++inner) {
      RationalVector z = sol->particular;
      for (const RationalVector& dir : sol->directions) z += rng.integer(-1000, 1000) * dir;
      std::vector<RationalVector> independent;
      for (const RationalVector& t : targets) independent.push_back(z - t);
      if (span_dimension(independent, d) != static_cast<Index>(independent.size())) {
        if (sol->dimension() == 0) break;
        continue;
      }

      RationalFramework out(g, d);
      out.p.topRows(base.p.rows()) = base.p;
      out.p.row(static_cast<Index>(v)) = z.transpose();
      for (std::size_t i = 0; i < fh.graph.loop_count(); ++i)
        if (loop_map[i] != static_cast<std::size_t>(-1))
          out.q.row(static_cast<Index>(loop_map[i])) = base.q.row(static_cast<Index>(i));

      // loops m_1..m_k at v point along the new edges to v_j
      for (std::size_t j = 0; j < k; ++j) {
        const RationalVector m = z - position(base, vj[j]);
        out.q.row(static_cast<Index>(new_loop_ids[j])) = m.transpose();
        // q on L_G(v_j) together with m spans W_j
        const std::vector<RationalVector> old = loop_normals_at(base, vj[j]);
        std::vector<RationalVector> span{m};
        std::vector<bool> used(old.size(), false);
        for (std::size_t i = 0; i < old.size(); ++i) {
          span.push_back(old[i]);
          if (span_dimension(span, d) == static_cast<Index>(span.size())) used[i] = true;
          else span.pop_back();
        }
        std::vector<RationalVector> chosen;
        for (std::size_t i = 0; i < old.size(); ++i)
          if (used[i]) chosen.push_back(old[i]);
        for (std::size_t i = 0; i < old.size(); ++i)
          if (!used[i]) chosen.push_back(old[i]);
        const std::vector<std::size_t> at = loops_at(g, vj[j]);
        for (std::size_t i = 0; i < at.size(); ++i)
          out.q.row(static_cast<Index>(at[i])) = chosen[i].transpose();
      }
      const std::vector<RationalVector> rest = complete_basis(independent, d, rng);
      for (std::size_t i = 0; i < rest.size(); ++i)
        out.q.row(static_cast<Index>(new_loop_ids[k + i])) = rest[i].transpose();

      if (is_inf_rigid(out)) return out;
    }
  }
  throw DegenerateError("geometric_extension: no rigid placement after " +
                        std::to_string(retries) + " attempts");
}

RationalFramework zero_extension(const RationalFramework& f, const std::vector<VertexId>& targets,
                                 const std::vector<RationalVector>& normals, Rng& rng,
                                 unsigned retries) {
  const Index d = f.d;
  if (static_cast<Index>(targets.size() + normals.size()) != d)
    throw HypothesisError("0-extension needs exactly d new edges and loops, got " +
                          std::to_string(targets.size() + normals.size()));
  if (span_dimension(normals, d) != static_cast<Index>(normals.size()))
    throw HypothesisError("0-extension loop normals are dependent");
  for (VertexId x : targets)
    if (x >= f.graph.vertex_count()) throw std::invalid_argument("0-extension target out of range");

  LoopedGraph g = f.graph;
  const VertexId v = g.add_vertex();
  for (VertexId x : targets) g.add_edge(x, v);
  for (std::size_t i = 0; i < normals.size(); ++i) g.add_loop(v);
  RationalFramework out(g, d);
  out.p.topRows(f.p.rows()) = f.p;
  out.q.topRows(f.q.rows()) = f.q;
  for (std::size_t i = 0; i < normals.size(); ++i)
    out.q.row(f.q.rows() + static_cast<Index>(i)) = normals[i].transpose();

  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    const RationalVector p0 = rng.integer_vector(d, -1000, 1000);
    std::vector<RationalVector> rows = normals;
    for (VertexId x : targets) rows.push_back(p0 - position(f, x));
    if (span_dimension(rows, d) == d) {
      out.p.row(static_cast<Index>(v)) = p0.transpose();
      return out;
    }
  }
  throw DegenerateError("0-extension: no independent placement found");
}

// -- realizations ------------------------------------------------------------

namespace {

RationalFramework single_vertex(const LoopedGraph& lifted, Index d, Rng& rng) {
  RationalFramework f(lifted, d);
  const std::vector<RationalVector> basis = random_basis(d, rng);
  f.p.row(0) = rng.integer_vector(d, -1000, 1000).transpose();
  for (Index j = 0; j < f.q.rows(); ++j)
    f.q.row(j) = (j < d ? basis[static_cast<std::size_t>(j)] : rng.integer_vector(d, -1000, 1000))
                     .transpose();
  return f;
}

// Reduce at v, realize H, extend back. Result is on add_uniform_loops(g, lift).
template <typename Recurse>
RationalFramework reduce_and_extend(const LoopedGraph& g, Index d, unsigned t, VertexId v,
                                    Rng& rng, std::vector<ReductionStep>& trace,
                                    Recurse&& recurse) {
  const std::size_t lift = static_cast<std::size_t>(d) - t;
  Reduction red = reduce_vertex(g, t, v);
  trace.push_back(red.step);
  const RationalFramework fh = recurse(red.graph);
  const ExtensionData ext = reversal(g, red.step, lift, d);
  RationalFramework fg = genericize(geometric_extension(fh, ext, rng), rng);
  return transport(relabel_framework(fg, reversal_relabeling(red.step)), add_uniform_loops(g, lift));
}

RationalFramework realize_main_rec(const LoopedGraph& g, Index d, unsigned t, Rng& rng,
                                   std::vector<ReductionStep>& trace) {
  const std::size_t lift = static_cast<std::size_t>(d) - t;
  const LoopedGraph lifted = add_uniform_loops(g, lift);
  if (g.vertex_count() == 0) return RationalFramework(lifted, d);
  if (g.vertex_count() == 1) return single_vertex(lifted, d, rng);
  VertexId best = 0;
  std::size_t best_score = static_cast<std::size_t>(-1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t score = delta(g, v) + loop_multiplicity(g, v);
    if (score < best_score) {
      best_score = score;
      best = v;
    }
  }
  return reduce_and_extend(g, d, t, best, rng, trace, [&](const LoopedGraph& h) {
    return realize_main_rec(h, d, t, rng, trace);
  });
}

RationalFramework realize_plane_rec(const LoopedGraph& g, Rng& rng,
                                    std::vector<ReductionStep>& trace);

RationalFramework realize_plane_connected(const LoopedGraph& g, Rng& rng,
                                          std::vector<ReductionStep>& trace) {
  const LoopedGraph lifted = add_uniform_loops(g, 1);
  if (g.vertex_count() == 1) return single_vertex(lifted, 3, rng);
  VertexId best = 0;
  for (VertexId v = 1; v < g.vertex_count(); ++v)
    if (delta(g, v) < delta(g, best)) best = v;
  if (delta(g, best) >= 4) return cylinder_realization(g, rng).framework;
  return reduce_and_extend(g, 3, 2, best, rng, trace, [&](const LoopedGraph& h) {
    return realize_plane_rec(h, rng, trace);
  });
}

RationalFramework realize_plane_rec(const LoopedGraph& g, Rng& rng,
                                    std::vector<ReductionStep>& trace) {
  const auto comps = components(g);
  if (comps.size() <= 1) return realize_plane_connected(g, rng, trace);
  std::vector<std::pair<RationalFramework, std::vector<VertexId>>> pieces;
  for (const auto& comp : comps)
    pieces.emplace_back(realize_plane_connected(induced_subgraph(g, comp), rng, trace), comp);
  return assemble(add_uniform_loops(g, 1), 3, pieces);
}

}  // namespace

Realization realize_rigid_main(const LoopedGraph& g, Index d, unsigned t, std::uint64_t seed) {
  if (t < 1) throw HypothesisError("t must be positive");
  const Index ti = static_cast<Index>(t);
  if (d < std::max(2 * ti, ti * (ti - 1)))
    throw HypothesisError("need d >= max(2t, t(t-1)), got d = " + std::to_string(d) +
                          ", t = " + std::to_string(t));
  if (has_parallel_edges(g)) throw HypothesisError("graph is not looped simple");
  if (!is_tight(g, {t, 0})) throw HypothesisError("graph is not (t,0)-tight");
  Rng rng(seed);
  Realization out;
  out.framework = realize_main_rec(g, d, t, rng, out.trace);
  require_rigid(out.framework, "realize_rigid_main");
  return out;
}

RationalFramework extend_to_supergraph(const RationalFramework& sub, const LoopedGraph& g,
                                       const EdgeOrLoopSet& kept, std::size_t lift, Rng& rng) {
  const LoopedGraph lifted = add_uniform_loops(g, lift);
  RationalFramework out(lifted, sub.d);
  out.p = sub.p;
  std::vector<bool> set(lifted.loop_count(), false);
  for (std::size_t i = 0; i < kept.loops.size(); ++i) {
    out.q.row(static_cast<Index>(kept.loops[i])) = sub.q.row(static_cast<Index>(i));
    set[kept.loops[i]] = true;
  }
  const std::size_t sub_original = kept.loops.size();
  for (std::size_t j = 0; j + sub_original < sub.graph.loop_count(); ++j) {
    out.q.row(static_cast<Index>(g.loop_count() + j)) =
        sub.q.row(static_cast<Index>(sub_original + j));
    set[g.loop_count() + j] = true;
  }
  for (std::size_t i = 0; i < set.size(); ++i)
    if (!set[i]) out.q.row(static_cast<Index>(i)) = rng.integer_vector(sub.d, -1000, 1000).transpose();
  return out;
}

std::optional<Realization> realize_main(const LoopedGraph& g, Index d, unsigned t,
                                        std::uint64_t seed) {
  const auto basis = tight_spanning_basis(g, t);
  if (!basis) return std::nullopt;
  Realization r = realize_rigid_main(spanning_subgraph(g, *basis), d, t, seed);
  Rng rng(derive_seed(seed, 1));
  r.framework = extend_to_supergraph(r.framework, g, *basis, static_cast<std::size_t>(d) - t, rng);
  require_rigid(r.framework, "realize_main");
  return r;
}

CylinderRealization cylinder_realization(const LoopedGraph& g, Rng& rng, unsigned retries) {
  const std::size_t n = g.vertex_count();
  if (!is_simple(g) || g.loop_count() != 0) throw HypothesisError("cylinder placement needs a simple graph");
  for (VertexId v = 0; v < n; ++v)
    if (degree(g, v) != 4) throw HypothesisError("cylinder placement needs a 4-regular graph");
  if (components(g).size() != 1) throw HypothesisError("cylinder placement needs a connected graph");
  if (!find_k5_subgraphs(g).empty()) throw HypothesisError("cylinder placement excludes K5");

  const LoopedGraph lifted = add_uniform_loops(g, 1);
  const Index target = 3 * static_cast<Index>(n);
  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    RationalFramework f(lifted, 3);
    for (VertexId v = 0; v < n; ++v)
      f.p.row(static_cast<Index>(v)) = rng.integer_vector(3, -1000, 1000).transpose();
    for (std::size_t j = 0; j < lifted.loop_count(); ++j) {
      const Index v = static_cast<Index>(lifted.loops()[j].vertex);
      f.q(static_cast<Index>(j), 0) = 2 * f.p(v, 0);
      f.q(static_cast<Index>(j), 1) = 4 * f.p(v, 1);
      f.q(static_cast<Index>(j), 2) = 0;
    }
    if (rigidity_rank(f) != target - 1) continue;
    const auto s = stresses(f);
    if (s.size() != 1) continue;
    std::size_t chosen = static_cast<std::size_t>(-1);
    for (Index j = 0; j < s[0].lambda.size(); ++j)
      if (!s[0].lambda(j).is_zero()) {
        chosen = static_cast<std::size_t>(j);
        break;
      }
    if (chosen == static_cast<std::size_t>(-1)) continue;
    RationalFramework rigid = f;
    rigid.q.row(static_cast<Index>(chosen)) << 0, 0, 1;
    if (!is_inf_rigid(rigid)) continue;
    return {std::move(f), s[0], chosen, std::move(rigid)};
  }
  throw DegenerateError("cylinder placement failed after " + std::to_string(retries) + " attempts");
}

Realization realize_plane_3d(const LoopedGraph& g, std::uint64_t seed) {
  if (has_parallel_edges(g)) throw HypothesisError("graph is not looped simple");
  if (!is_tight(g, {2, 0})) throw HypothesisError("graph is not (2,0)-tight");
  if (!find_k5_subgraphs(g).empty()) throw HypothesisError("graph contains K5");
  Rng rng(seed);
  Realization out;
  out.framework = realize_plane_rec(g, rng, out.trace);
  require_rigid(out.framework, "realize_plane_3d");
  return out;
}

std::optional<Realization> realize_plane(const LoopedGraph& g, std::uint64_t seed) {
  const auto basis = tight_k5free_spanning_basis(g);
  if (!basis) return std::nullopt;
  Realization r = realize_plane_3d(spanning_subgraph(g, *basis), seed);
  Rng rng(derive_seed(seed, 1));
  r.framework = extend_to_supergraph(r.framework, g, *basis, 1, rng);
  require_rigid(r.framework, "realize_plane");
  return r;
}

}  // namespace rigor
