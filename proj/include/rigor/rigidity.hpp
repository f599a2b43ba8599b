#pragma once

// Linearly-constrained frameworks (G, p, q) and their rigidity matrices.
//
// Row order is edges then loops, by id; column block i holds the d velocity
// coordinates of vertex i. An edge uv contributes p(u)-p(v) in block u and
// p(v)-p(u) in block v; a loop at v contributes q in block v.

#include "rigor/graph.hpp"
#include "rigor/linalg.hpp"
#include "rigor/random.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rigor {

template <typename Scalar>
struct Framework {
  LoopedGraph graph;
  Index d = 0;
  Matrix<Scalar> p;  // |V| x d, row i is p(i)
  Matrix<Scalar> q;  // |L| x d, row j is q(loop j)

  Framework() = default;
  Framework(LoopedGraph g, Index dim)
      : graph(std::move(g)),
        d(dim),
        p(Matrix<Scalar>::Zero(static_cast<Index>(graph.vertex_count()), dim)),
        q(Matrix<Scalar>::Zero(static_cast<Index>(graph.loop_count()), dim)) {}
};

using RationalFramework = Framework<Rational>;

// Throws std::invalid_argument when the shapes of p and q disagree with the
// graph and dimension.
template <typename Scalar>
void check_shape(const Framework<Scalar>& f) {
  if (f.d < 1) throw std::invalid_argument("framework dimension must be positive");
  if (f.p.rows() != static_cast<Index>(f.graph.vertex_count()) || f.p.cols() != f.d)
    throw std::invalid_argument("framework p must be |V| x d");
  if (f.q.rows() != static_cast<Index>(f.graph.loop_count()) || f.q.cols() != f.d)
    throw std::invalid_argument("framework q must be |L| x d");
}

template <typename Scalar>
Matrix<Scalar> build_rigidity_matrix(const Framework<Scalar>& f) {
  check_shape(f);
  const Index d = f.d;
  const Index ne = static_cast<Index>(f.graph.edge_count());
  const Index nl = static_cast<Index>(f.graph.loop_count());
  Matrix<Scalar> r = Matrix<Scalar>::Zero(ne + nl, d * static_cast<Index>(f.graph.vertex_count()));
  for (Index i = 0; i < ne; ++i) {
    const Edge& e = f.graph.edges()[static_cast<std::size_t>(i)];
    const Index u = static_cast<Index>(e.u), v = static_cast<Index>(e.v);
    for (Index c = 0; c < d; ++c) {
      const Scalar diff = f.p(u, c) - f.p(v, c);
      r(i, u * d + c) = diff;
      r(i, v * d + c) = -diff;
    }
  }
  for (Index j = 0; j < nl; ++j) {
    const Index v = static_cast<Index>(f.graph.loops()[static_cast<std::size_t>(j)].vertex);
    r.block(ne + j, v * d, 1, d) = f.q.row(j);
  }
  return r;
}

// The E-rows only: the bar-joint rigidity matrix of (G - L, p).
template <typename Scalar>
Matrix<Scalar> bar_joint_submatrix(const Framework<Scalar>& f) {
  return build_rigidity_matrix(f).topRows(static_cast<Index>(f.graph.edge_count()));
}

Index rigidity_rank(const RationalFramework& f);
bool is_inf_rigid(const RationalFramework& f);

inline constexpr unsigned kDefaultTrials = 5;

// Max of rank_modp over `trials` realizations with integer coordinates drawn
// uniformly from [1, 10^6]. Trial i draws from derive_seed(seed, i).
Index generic_rank(const LoopedGraph& g, Index d, unsigned trials, std::uint64_t seed);

// Infinitesimal motions: each |V| x d matrix has row i equal to pdot(i).
std::vector<RationalMatrix> motions(const RationalFramework& f);

struct EquilibriumStress {
  RationalVector omega;   // by edge id
  RationalVector lambda;  // by loop id
};
std::vector<EquilibriumStress> stresses(const RationalFramework& f);

// Integer coordinates in [lo, hi] for p and q.
RationalFramework random_framework(const LoopedGraph& g, Index d, Rng& rng,
                                   std::int64_t lo = -1000, std::int64_t hi = 1000);

// The same framework viewed on a graph with identical vertices and the same
// edge and loop multisets: q is carried over vertex by vertex, loops at a
// vertex matched in id order. Throws std::invalid_argument on a mismatch.
RationalFramework transport(const RationalFramework& f, const LoopedGraph& target);

// Moves vertex i of f to perm[i] and carries q along.
RationalFramework relabel_framework(const RationalFramework& f, const std::vector<VertexId>& perm);

// Restriction to a spanning subgraph in element ids of f.graph.
RationalFramework restrict_framework(const RationalFramework& f, const EdgeOrLoopSet& keep);

}  // namespace rigor
