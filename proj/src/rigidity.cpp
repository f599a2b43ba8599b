#include "rigor/rigidity.hpp"

#include <algorithm>

namespace rigor {

Index rigidity_rank(const RationalFramework& f) { return rank_exact(build_rigidity_matrix(f)); }

bool is_inf_rigid(const RationalFramework& f) {
  return rigidity_rank(f) == f.d * static_cast<Index>(f.graph.vertex_count());
}

Index generic_rank(const LoopedGraph& g, Index d, unsigned trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("generic_rank needs at least one trial");
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  Index best = 0;
  for (unsigned t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    Framework<ModP> f(g, d);
    for (Index i = 0; i < f.p.rows(); ++i)
      for (Index c = 0; c < d; ++c) f.p(i, c) = ModP::from_i64(rng.uniform(1, 1000000));
    for (Index j = 0; j < f.q.rows(); ++j)
      for (Index c = 0; c < d; ++c) f.q(j, c) = ModP::from_i64(rng.uniform(1, 1000000));
    best = std::max(best, rank_modp(build_rigidity_matrix(f)));
  }
  return best;
}

std::vector<RationalMatrix> motions(const RationalFramework& f) {
  const Index n = static_cast<Index>(f.graph.vertex_count());
  std::vector<RationalMatrix> out;
  for (const RationalVector& x : nullspace(build_rigidity_matrix(f))) {
    RationalMatrix m(n, f.d);
    for (Index i = 0; i < n; ++i)
      for (Index c = 0; c < f.d; ++c) m(i, c) = x(i * f.d + c);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<EquilibriumStress> stresses(const RationalFramework& f) {
  const Index ne = static_cast<Index>(f.graph.edge_count());
  const Index nl = static_cast<Index>(f.graph.loop_count());
  std::vector<EquilibriumStress> out;
  for (const RationalVector& w : cokernel(build_rigidity_matrix(f)))
    out.push_back({w.head(ne), w.segment(ne, nl)});
  return out;
}

RationalFramework random_framework(const LoopedGraph& g, Index d, Rng& rng, std::int64_t lo,
                                   std::int64_t hi) {
  RationalFramework f(g, d);
  for (Index i = 0; i < f.p.rows(); ++i)
    for (Index c = 0; c < d; ++c) f.p(i, c) = rng.integer(lo, hi);
  for (Index j = 0; j < f.q.rows(); ++j)
    for (Index c = 0; c < d; ++c) f.q(j, c) = rng.integer(lo, hi);
  return f;
}

RationalFramework transport(const RationalFramework& f, const LoopedGraph& target) {
  if (!(f.graph == target) || f.graph.vertex_count() != target.vertex_count())
    throw std::invalid_argument("transport needs the same edge and loop multisets");
  RationalFramework out(target, f.d);
  out.p = f.p;
  for (VertexId v = 0; v < target.vertex_count(); ++v) {
    const auto from = loops_at(f.graph, v);
    const auto to = loops_at(target, v);
    for (std::size_t i = 0; i < to.size(); ++i)
      out.q.row(static_cast<Index>(to[i])) = f.q.row(static_cast<Index>(from[i]));
  }
  return out;
}

RationalFramework relabel_framework(const RationalFramework& f, const std::vector<VertexId>& perm) {
  RationalFramework out(relabel(f.graph, perm), f.d);
  for (VertexId v = 0; v < perm.size(); ++v)
    out.p.row(static_cast<Index>(perm[v])) = f.p.row(static_cast<Index>(v));
  out.q = f.q;
  return out;
}

RationalFramework restrict_framework(const RationalFramework& f, const EdgeOrLoopSet& keep) {
  RationalFramework out(spanning_subgraph(f.graph, keep), f.d);
  out.p = f.p;
  for (std::size_t i = 0; i < keep.loops.size(); ++i)
    out.q.row(static_cast<Index>(i)) = f.q.row(static_cast<Index>(keep.loops[i]));
  return out;
}

}  // namespace rigor
