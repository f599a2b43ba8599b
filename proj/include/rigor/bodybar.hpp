#pragma once

// Linearly-constrained body-bar frameworks. Each vertex is a rigid body with
// velocity (tau, s) in Q^d x Q^C(d,2), where s_ij (i < j) is minus the
// (i,j) entry of the angular velocity matrix. A bar between points a and b
// then has row -pl(a,b) on its first body and pl(a,b) on its second.

#include "rigor/graph.hpp"
#include "rigor/linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rigor {

enum class ConstraintMode { point, body };

struct BodyBarInstance {
  LoopedGraph graph;
  Index d = 2;
  ConstraintMode mode = ConstraintMode::point;
  RationalMatrix q;  // |L| x d, nonzero rows
};

// Throws std::invalid_argument on a shape mismatch or a zero normal.
void validate(const BodyBarInstance& inst);

// C(d+1, 2).
constexpr Index body_freedom(Index d) { return d * (d + 1) / 2; }

// (b - a, a_i b_j - a_j b_i for i < j). Throws std::invalid_argument when
// a == b.
RationalVector pluecker(const RationalVector& a, const RationalVector& b);

using Partition = std::vector<std::vector<VertexId>>;

inline constexpr std::size_t kPartitionVertexBudget = 10;

// Calls `visit` on every set partition of {0..n-1} once, in restricted
// growth string order, until it returns false. Throws ScaleError above
// kPartitionVertexBudget.
void for_each_partition(std::size_t n, const std::function<bool(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(std::size_t n);

struct PartitionWitness {
  Partition blocks;
  std::size_t crossing = 0;  // edges joining different blocks
  long required = 0;         // right-hand side of the count
  long deficiency = 0;       // required - crossing > 0
};

struct CountResult {
  bool holds = true;
  std::optional<PartitionWitness> witness;  // first violating partition
};

// Edges of g joining different blocks.
std::size_t crossing_edges(const LoopedGraph& g, const Partition& p);

// Point mode: delta(P) >= C(d+1,2)|P| - sum over X of dim<q(e)* : e in L(X)>,
// q(e)* the Pluecker vector of a segment with direction q(e) through a
// seeded generic point.
CountResult point_count_check(const BodyBarInstance& inst, std::uint64_t seed);

// Body mode: delta(P) >= C(d+1,2)|P| - sum over X with L(X) nonempty of
// sum_{i=1}^{d_X+1} (d-i+1), d_X = rank<q(L(X))> - 1.
CountResult body_count_check(const BodyBarInstance& inst);

// sum_{i=1}^{dx+1} (d-i+1).
long body_deficit(Index d, Index dx);

// Dimension of the affine span of the points q(e) themselves.
Index affine_span_dimension(const std::vector<RationalVector>& points, Index d);

// Rows: bars, then loops (one row per point constraint, d+1 rows per body
// constraint: tau.q = 0 and the d entries of Omega q). Attachment points are
// integer points drawn from `seed`.
RationalMatrix body_bar_matrix(const BodyBarInstance& inst, std::uint64_t seed);
Index body_bar_rank(const BodyBarInstance& inst, std::uint64_t seed);
bool body_bar_rigid(const BodyBarInstance& inst, std::uint64_t seed);

// Recounts crossing edges and the stated deficiency.
bool revalidate(const BodyBarInstance& inst, const PartitionWitness& w, std::uint64_t seed);

}  // namespace rigor
