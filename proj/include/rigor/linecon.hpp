#pragma once

// Line-constrained frameworks with prescribed loop normals. G^[d-1] carries
// a fixed q; the question is whether some p makes (G^[d-1], p, q) rigid.
//
// q is indexed by the loop ids of add_uniform_loops(G, d-1): the loops of G
// first, then d-1 uniform loops per vertex.

#include "rigor/graph.hpp"
#include "rigor/rigidity.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rigor {

// W_v = span of q over the loops at v.
Index normal_span_dimension(const LoopedGraph& g, Index d, const RationalMatrix& q, VertexId v);

// dim W_v >= d-1 at every vertex and the normals span Q^d. For d = 1 the
// first condition is vacuous and the second asks for a nonzero normal.
bool line_admissible(const LoopedGraph& lifted, Index d, const RationalMatrix& q);

enum class LineVerdict { holds, fails, unknown };

struct LineCheck {
  LineVerdict verdict = LineVerdict::fails;
  std::vector<std::vector<VertexId>> components;
  // Per component: a witness cycle (ids in G) or nullopt.
  std::vector<std::optional<EdgeOrLoopSet>> witnesses;
  bool truncated = false;
};

inline constexpr std::size_t kCycleLimit = 200000;

// Every component of G has a cycle of length other than two on whose lift
// the normals are line-admissible (for d = 1: a loop with nonzero normal).
// Throws HypothesisError when dim W_v < d-1 somewhere. The verdict is
// unknown when cycle enumeration hits `cycle_limit` before every component
// has a witness.
LineCheck line_theorem_check(const LoopedGraph& g, Index d, const RationalMatrix& q,
                             std::size_t cycle_limit = kCycleLimit);

// A rigid framework on G^[d-1] with the given q, or nullopt when the check
// does not hold. Throws HypothesisError as line_theorem_check and
// DegenerateError when placements keep failing.
std::optional<RationalFramework> realize_line(const LoopedGraph& g, Index d,
                                              const RationalMatrix& q, std::uint64_t seed,
                                              std::size_t cycle_limit = kCycleLimit);

}  // namespace rigor
