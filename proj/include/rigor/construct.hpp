#pragma once

// Inductive constructions of infinitesimally rigid frameworks: vertex
// reduction of tight graphs, k-loop extensions (combinatorial and
// geometric), 0-extensions and the elliptical-cylinder placement used for
// 4-regular graphs in the plane-constrained case.

#include "rigor/errors.hpp"
#include "rigor/graph.hpp"
#include "rigor/rigidity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rigor {

inline constexpr unsigned kDefaultRetries = 32;

struct ReductionStep {
  VertexId vertex = 0;                  // removed vertex, id in G
  std::size_t k = 0;                    // delta(v) - t
  std::vector<VertexId> neighbours;     // v_1..v_k, ids in G
  std::vector<std::size_t> new_loops;   // l_1..l_k, loop ids in H
  std::vector<std::size_t> old_to_new;  // G vertex -> H vertex, npos for v
};

struct Reduction {
  LoopedGraph graph;
  ReductionStep step;
};

// H = (G - v) plus a loop at each of k = delta(v) - t distinct neighbours,
// (t,0)-tight. Slots are filled greedily with the smallest-id neighbour at
// which a loop keeps the graph sparse. Throws HypothesisError when G is not
// (t,0)-tight or delta(v) < t.
Reduction reduce_vertex(const LoopedGraph& g, unsigned t, VertexId v);

struct ExtensionData {
  Index d = 0;
  std::vector<std::size_t> deleted_loops;  // loop ids in H at distinct vertices
  std::vector<VertexId> edge_targets;      // neighbours of the new vertex in H
  std::size_t new_loops = 0;               // loops added at the new vertex
  std::size_t k() const { return deleted_loops.size(); }
};

class ExtensionError : public HypothesisError {
 public:
  explicit ExtensionError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Every proviso of the d-dimensional k-loop extension that `ext` breaks.
std::vector<std::string> extension_violations(const LoopedGraph& h, const ExtensionData& ext);

// The extended graph. The new vertex is appended; H's edges keep their ids
// and the new edges follow; surviving loops of H keep their relative order
// and the new loops follow. Throws ExtensionError.
LoopedGraph apply_extension(const LoopedGraph& h, const ExtensionData& ext);

// The extension that undoes `step` on the lifted graphs H^[lift] -> G^[lift].
ExtensionData reversal(const LoopedGraph& g, const ReductionStep& step, std::size_t lift, Index d);

// perm with relabel(apply_extension(H, reversal(...)), perm) == G.
std::vector<VertexId> reversal_relabeling(const ReductionStep& step);

// A rigid framework on apply_extension(fh.graph, ext). The new vertex is
// placed at z in the intersection of the affine spaces p(v_j) + W_j off the
// affine span of its neighbours. Throws HypothesisError when fh is not rigid
// or some v_j has fewer than ceil((k-1)d/k) loops (k >= 2), DegenerateError
// after `retries` failed placements.
RationalFramework geometric_extension(const RationalFramework& fh, const ExtensionData& ext,
                                      Rng& rng, unsigned retries = kDefaultRetries);

// Rounds p and q to a dyadic grid and adds a small random offset, keeping the
// result only if it is still rigid. Bounds coordinate size along a long
// construction.
RationalFramework genericize(const RationalFramework& f, Rng& rng, unsigned attempt = 0);

// Adds a vertex joined to `targets` with loops of the given normals, placed
// so the new rows are independent. Throws HypothesisError unless
// |targets| + |normals| = d and the normals are independent.
RationalFramework zero_extension(const RationalFramework& f, const std::vector<VertexId>& targets,
                                 const std::vector<RationalVector>& normals, Rng& rng,
                                 unsigned retries = kDefaultRetries);

struct Realization {
  RationalFramework framework;
  std::vector<ReductionStep> trace;  // outermost reduction first
};

// G (t,0)-tight and looped simple, d >= max(2t, t(t-1)): a rigid framework
// on G^[d-t] in add_uniform_loops order.
Realization realize_rigid_main(const LoopedGraph& g, Index d, unsigned t, std::uint64_t seed);

// G has a (t,0)-tight looped simple spanning subgraph: a rigid framework on
// G^[d-t]. nullopt when no such subgraph exists.
std::optional<Realization> realize_main(const LoopedGraph& g, Index d, unsigned t,
                                        std::uint64_t seed);

struct CylinderRealization {
  RationalFramework on_cylinders;  // q(v) = (2x, 4y, 0); rank 3n - 1
  EquilibriumStress stress;
  std::size_t replaced_loop = 0;
  RationalFramework framework;     // q(replaced) = (0, 0, 1); rank 3n
};

// G 4-regular, simple, connected and not K5: a rigid framework on G^[1] in
// R^3 with joints on concentric cylinders x^2 + 2y^2 = r.
CylinderRealization cylinder_realization(const LoopedGraph& g, Rng& rng,
                                         unsigned retries = kDefaultRetries);

// G (2,0)-tight, looped simple, no K5: a rigid framework on G^[1] in R^3.
// Components are realized separately.
Realization realize_plane_3d(const LoopedGraph& g, std::uint64_t seed);

// G has a (2,0)-tight K5-free looped simple spanning subgraph: a rigid
// framework on G^[1] in R^3; nullopt otherwise.
std::optional<Realization> realize_plane(const LoopedGraph& g, std::uint64_t seed);

// Places the sub-framework on the subgraph `kept` of g^[lift] and gives the
// remaining loops of g^[lift] random normals.
RationalFramework extend_to_supergraph(const RationalFramework& sub, const LoopedGraph& g,
                                       const EdgeOrLoopSet& kept, std::size_t lift, Rng& rng);

}  // namespace rigor
