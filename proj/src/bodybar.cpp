#include "rigor/bodybar.hpp"

#include "rigor/errors.hpp"
#include "rigor/random.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace rigor {

void validate(const BodyBarInstance& inst) {
  if (inst.d < 1) throw std::invalid_argument("dimension must be positive");
  if (inst.q.rows() != static_cast<Index>(inst.graph.loop_count()) || inst.q.cols() != inst.d)
    throw std::invalid_argument("q must have one row of length d per loop");
  for (Index j = 0; j < inst.q.rows(); ++j)
    if (is_zero_vector(inst.q.row(j).transpose()))
      throw std::invalid_argument("loop " + std::to_string(j) + " has a zero normal");
}

RationalVector pluecker(const RationalVector& a, const RationalVector& b) {
  const Index d = a.size();
  if (b.size() != d) throw std::invalid_argument("pluecker: dimension mismatch");
  if (a == b) throw std::invalid_argument("pluecker: degenerate segment");
  RationalVector out(body_freedom(d));
  out.head(d) = b - a;
  Index k = d;
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) out(k++) = a(i) * b(j) - a(j) * b(i);
  return out;
}

void for_each_partition(std::size_t n, const std::function<bool(const Partition&)>& visit) {
  if (n > kPartitionVertexBudget)
    throw ScaleError("partition enumeration limited to " + std::to_string(kPartitionVertexBudget) +
                     " vertices");
  if (n == 0) {
    visit({});
    return;
  }
  // restricted growth string a with a[0] = 0, a[i] <= 1 + max(a[0..i-1])
  std::vector<std::size_t> a(n, 0), prefix_max(n, 0);
  while (true) {
    std::size_t blocks = 0;
    for (std::size_t x : a) blocks = std::max(blocks, x + 1);
    Partition p(blocks);
    for (std::size_t i = 0; i < n; ++i) p[a[i]].push_back(i);
    if (!visit(p)) return;
    std::size_t i = n - 1;
    while (i > 0 && a[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<Partition> enumerate_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::size_t crossing_edges(const LoopedGraph& g, const Partition& p) {
  std::vector<std::size_t> block(g.vertex_count(), 0);
  for (std::size_t b = 0; b < p.size(); ++b)
    for (VertexId v : p[b]) block[v] = b;
  std::size_t c = 0;
  for (const Edge& e : g.edges()) c += block[e.u] != block[e.v];
  return c;
}

long body_deficit(Index d, Index dx) {
  long s = 0;
  for (Index i = 1; i <= dx + 1; ++i) s += static_cast<long>(d - i + 1);
  return s;
}

Index affine_span_dimension(const std::vector<RationalVector>& points, Index d) {
  if (points.empty()) return -1;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return span_dimension(diffs, d);
}

namespace {

std::vector<std::vector<std::size_t>> loops_by_vertex(const LoopedGraph& g) {
  std::vector<std::vector<std::size_t>> out(g.vertex_count());
  for (std::size_t j = 0; j < g.loop_count(); ++j) out[g.loops()[j].vertex].push_back(j);
  return out;
}

// Point constraint vectors q(e)*, one per loop.
std::vector<RationalVector> constraint_vectors(const BodyBarInstance& inst, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x51));
  std::vector<RationalVector> out;
  for (Index j = 0; j < inst.q.rows(); ++j) {
    const RationalVector x = rng.integer_vector(inst.d, -1000, 1000);
    out.push_back(pluecker(x, x + inst.q.row(j).transpose()));
  }
  return out;
}

template <typename BlockValue>
CountResult partition_scan(const BodyBarInstance& inst, BlockValue&& block_value) {
  const std::size_t n = inst.graph.vertex_count();
  const long freedom = static_cast<long>(body_freedom(inst.d));
  std::map<std::vector<VertexId>, long> memo;
  CountResult out;
  for_each_partition(n, [&](const Partition& p) {
    long required = freedom * static_cast<long>(p.size());
    for (const auto& blockv : p) {
      auto it = memo.find(blockv);
      if (it == memo.end()) it = memo.emplace(blockv, block_value(blockv)).first;
      required -= it->second;
    }
    const std::size_t crossing = crossing_edges(inst.graph, p);
    if (static_cast<long>(crossing) < required) {
      out.holds = false;
      out.witness = PartitionWitness{p, crossing, required, required - static_cast<long>(crossing)};
      return false;
    }
    return true;
  });
  return out;
}

long point_block_value(const BodyBarInstance& inst, const std::vector<RationalVector>& star,
                       const std::vector<std::vector<std::size_t>>& at,
                       const std::vector<VertexId>& block) {
  std::vector<RationalVector> vs;
  for (VertexId v : block)
    for (std::size_t j : at[v]) vs.push_back(star[j]);
  return static_cast<long>(span_dimension(vs, body_freedom(inst.d)));
}

long body_block_value(const BodyBarInstance& inst, const std::vector<std::vector<std::size_t>>& at,
                      const std::vector<VertexId>& block) {
  std::vector<RationalVector> vs;
  for (VertexId v : block)
    for (std::size_t j : at[v]) vs.push_back(inst.q.row(static_cast<Index>(j)).transpose());
  if (vs.empty()) return 0;
  return body_deficit(inst.d, span_dimension(vs, inst.d) - 1);
}

}  // namespace

CountResult point_count_check(const BodyBarInstance& inst, std::uint64_t seed) {
  validate(inst);
  if (inst.mode != ConstraintMode::point) throw std::invalid_argument("instance is not in point mode");
  const auto star = constraint_vectors(inst, seed);
  const auto at = loops_by_vertex(inst.graph);
  return partition_scan(inst, [&](const std::vector<VertexId>& b) {
    return point_block_value(inst, star, at, b);
  });
}

CountResult body_count_check(const BodyBarInstance& inst) {
  validate(inst);
  if (inst.mode != ConstraintMode::body) throw std::invalid_argument("instance is not in body mode");
  const auto at = loops_by_vertex(inst.graph);
  return partition_scan(inst, [&](const std::vector<VertexId>& b) {
    return body_block_value(inst, at, b);
  });
}

RationalMatrix body_bar_matrix(const BodyBarInstance& inst, std::uint64_t seed) {
  validate(inst);
  const Index d = inst.d;
  const Index bf = body_freedom(d);
  const Index cols = bf * static_cast<Index>(inst.graph.vertex_count());
  const Index loop_rows = inst.mode == ConstraintMode::point ? 1 : d + 1;
  const Index rows = static_cast<Index>(inst.graph.edge_count()) +
                     loop_rows * static_cast<Index>(inst.graph.loop_count());
  RationalMatrix m = RationalMatrix::Zero(rows, cols);
  Rng rng(seed);
  Index r = 0;
  for (const Edge& e : inst.graph.edges()) {
    RationalVector a = rng.integer_vector(d, -1000, 1000);
    RationalVector b = rng.integer_vector(d, -1000, 1000);
    while (a == b) b = rng.integer_vector(d, -1000, 1000);
    const RationalVector pl = pluecker(a, b);
    m.block(r, static_cast<Index>(e.u) * bf, 1, bf) = -pl.transpose();
    m.block(r, static_cast<Index>(e.v) * bf, 1, bf) = pl.transpose();
    ++r;
  }
  for (std::size_t j = 0; j < inst.graph.loop_count(); ++j) {
    const Index col = static_cast<Index>(inst.graph.loops()[j].vertex) * bf;
    const RationalVector q = inst.q.row(static_cast<Index>(j)).transpose();
    if (inst.mode == ConstraintMode::point) {
      const RationalVector x = rng.integer_vector(d, -1000, 1000);
      m.block(r++, col, 1, bf) = pluecker(x, x + q).transpose();
      continue;
    }
    m.block(r++, col, 1, d) = q.transpose();
    for (Index comp = 0; comp < d; ++comp, ++r) {
      Index k = d;
      for (Index i = 0; i < d; ++i)
        for (Index jj = i + 1; jj < d; ++jj, ++k) {
          // (Omega q)_comp with Omega_ij = -s_ij, Omega_ji = s_ij
          if (comp == i) m(r, col + k) -= q(jj);
          if (comp == jj) m(r, col + k) += q(i);
        }
    }
  }
  return m;
}

Index body_bar_rank(const BodyBarInstance& inst, std::uint64_t seed) {
  return rank_exact(body_bar_matrix(inst, seed));
}

bool body_bar_rigid(const BodyBarInstance& inst, std::uint64_t seed) {
  return body_bar_rank(inst, seed) ==
         body_freedom(inst.d) * static_cast<Index>(inst.graph.vertex_count());
}

bool revalidate(const BodyBarInstance& inst, const PartitionWitness& w, std::uint64_t seed) {
  std::vector<bool> seen(inst.graph.vertex_count(), false);
  for (const auto& b : w.blocks)
    for (VertexId v : b) {
      if (v >= seen.size() || seen[v]) return false;
      seen[v] = true;
    }
  for (bool s : seen)
    if (!s) return false;
  if (crossing_edges(inst.graph, w.blocks) != w.crossing) return false;
  const auto at = loops_by_vertex(inst.graph);
  long required = static_cast<long>(body_freedom(inst.d)) * static_cast<long>(w.blocks.size());
  if (inst.mode == ConstraintMode::point) {
    const auto star = constraint_vectors(inst, seed);
    for (const auto& b : w.blocks) required -= point_block_value(inst, star, at, b);
  } else {
    for (const auto& b : w.blocks) required -= body_block_value(inst, at, b);
  }
  return required == w.required && w.deficiency == required - static_cast<long>(w.crossing) &&
         w.deficiency > 0;
}

}  // namespace rigor
