#pragma once

// (k,l)-sparsity of graphs with loops: |F| <= k|V_F| - l for every nonempty
// F ⊆ E ∪ L. Certification by pebble game with an exhaustive backend for
// cross-checking, tight-subgraph search and the mixed count matroid whose
// spanning sets characterize planar linearly-constrained rigidity.

#include "rigor/graph.hpp"

#include <optional>
#include <vector>

namespace rigor {

struct SparsityParams {
  unsigned k = 2;
  unsigned l = 0;

  // Throws std::invalid_argument unless k >= 1 and l < 2k.
  void validate() const;
  // A lone loop F has |F| = 1 <= k - l iff l < k.
  bool loops_admissible() const { return l < k; }
};

struct SparsityCertificate {
  bool sparse = false;
  // On sparse from the pebble backend: the edge id -> tail vertex orientation
  // and the free pebbles per vertex. Loops are out-arcs of their vertex.
  // Empty for the exhaustive backend.
  std::vector<VertexId> edge_tail;
  std::vector<unsigned> pebbles;
  // On violation: a set F with |F| > k|V_F| - l.
  EdgeOrLoopSet violation;
};

// Re-counts a violation or checks out-degree + pebbles = k at every vertex.
bool revalidate(const LoopedGraph& g, const SparsityParams& params,
                const SparsityCertificate& cert);

// Pebble game for the (k,l)-count matroid on E ∪ L. Each vertex starts with
// k pebbles. An edge uv is accepted when l+1 pebbles can be gathered on
// {u,v}, a loop at v when l+1 pebbles can be gathered on v. Pebbles are
// fetched depth-first along the orientation, trying smaller vertex ids first.
class PebbleGame {
 public:
  PebbleGame(std::size_t n, SparsityParams params);

  bool insert_edge(std::size_t id, VertexId u, VertexId v);
  bool insert_loop(std::size_t id, VertexId v);

  // Independent of the accepted set: would the element be accepted?
  bool can_insert_edge(VertexId u, VertexId v);
  bool can_insert_loop(VertexId v);

  const std::vector<unsigned>& pebbles() const { return pebbles_; }
  // Accepted elements so far, sorted ids.
  EdgeOrLoopSet accepted() const;
  std::size_t accepted_count() const { return arcs_.size(); }
  std::vector<VertexId> edge_tails(std::size_t edge_count) const;

  // After a rejected insertion: accepted elements inside the failed search
  // region. Together with the rejected element they violate the count.
  EdgeOrLoopSet rejection_witness() const;

 private:
  struct Arc {
    bool is_loop;
    std::size_t id;
    VertexId tail;
    VertexId head;
  };
  bool gather_for_edge(VertexId u, VertexId v);
  bool gather_for_loop(VertexId v);
  // Moves one pebble to `root` along a reversed path. Vertices already marked
  // in `visited` are not entered.
  bool fetch_pebble(VertexId root, std::vector<char>& visited);
  void place(bool is_loop, std::size_t id, VertexId a, VertexId b);

  std::size_t n_;
  SparsityParams params_;
  std::vector<unsigned> pebbles_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;  // arc indices by tail
  std::vector<char> region_;
};

// Pebble-game certificate; insertion order is edges then loops, by id.
SparsityCertificate is_sparse(const LoopedGraph& g, const SparsityParams& params);

// Exhaustive check of all nonempty F ⊆ E ∪ L. Returns a violating F of least
// size (least bitmask among those). Throws ScaleError above 24 elements.
SparsityCertificate is_sparse_bruteforce(const LoopedGraph& g, const SparsityParams& params);
inline constexpr std::size_t kBruteForceElementBudget = 24;

// Rank of E ∪ L in the (k,l)-count matroid.
std::size_t matroid_rank(const LoopedGraph& g, const SparsityParams& params);

// A basis of the count matroid, greedy in the order edges then loops.
EdgeOrLoopSet count_matroid_basis(const LoopedGraph& g, const SparsityParams& params);

bool is_tight(const LoopedGraph& g, const SparsityParams& params);

// A (t,0)-tight looped simple spanning subgraph, as element ids of g.
std::optional<EdgeOrLoopSet> tight_spanning_basis(const LoopedGraph& g, unsigned t);
std::optional<LoopedGraph> find_tight_spanning_subgraph(const LoopedGraph& g, unsigned t);

// A (2,0)-tight looped simple spanning subgraph with no K5 in its simple
// support, by branch and bound over K5 edge exclusions. Throws ScaleError
// above kK5FreeVertexBudget vertices.
std::optional<EdgeOrLoopSet> tight_k5free_spanning_basis(const LoopedGraph& g);
std::optional<LoopedGraph> find_tight_k5free_spanning_subgraph(const LoopedGraph& g);
inline constexpr std::size_t kK5FreeVertexBudget = 10;

// The maximal tight subgraph containing `seed`, as an induced element set.
// Throws HypothesisError when g is not sparse and std::invalid_argument when
// no tight subgraph contains the seed.
EdgeOrLoopSet tight_closure(const LoopedGraph& g, const SparsityParams& params,
                            const EdgeOrLoopSet& seed);

// Rank of E ∪ L in the matroid induced by f(F) = 2|V_F| - 3 for F ⊆ E and
// 2|V_F| otherwise; independence by subset enumeration.
std::size_t mixed_count_rank(const LoopedGraph& g);

// Spanning subgraph with |E|+|L| = 2|V| meeting both planar counts.
// Throws ScaleError above kBruteForceElementBudget elements.
bool st_spanning_check(const LoopedGraph& g);

}  // namespace rigor
