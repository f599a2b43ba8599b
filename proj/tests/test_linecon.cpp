#include "rigor/errors.hpp"
#include "rigor/linecon.hpp"

#include <doctest.h>

using namespace rigor;

namespace {

RationalMatrix random_normals(Rng& rng, std::size_t rows, Index d) {
  RationalMatrix q(static_cast<Index>(rows), d);
  for (Index i = 0; i < q.rows(); ++i)
    for (Index j = 0; j < d; ++j) q(i, j) = rng.integer(-9, 9);
  return q;
}

LoopedGraph two_triangles() {
  LoopedGraph g(6);
  for (VertexId b : {0u, 3u}) {
    g.add_edge(b, b + 1);
    g.add_edge(b + 1, b + 2);
    g.add_edge(b, b + 2);
  }
  return g;
}

}  // namespace

TEST_SUITE("linecon") {

TEST_CASE("admissibility examples") {
  LoopedGraph loop(1);
  loop.add_loop(0);
  const LoopedGraph l1 = add_uniform_loops(loop, 1);
  RationalMatrix q(2, 2);
  q << 1, 0, 0, 1;
  CHECK(line_admissible(l1, 2, q));

  const LoopedGraph c3 = add_uniform_loops(cycle_graph(3), 1);
  RationalMatrix flat = RationalMatrix::Zero(3, 2);
  for (Index i = 0; i < 3; ++i) flat(i, 0) = i + 1;
  CHECK_FALSE(line_admissible(c3, 2, flat));

  Rng rng(41);
  CHECK(line_admissible(c3, 2, random_normals(rng, 3, 2)));
  CHECK(normal_span_dimension(c3, 2, flat, 1) == 1);
}

TEST_CASE("theorem check") {
  Rng rng(42);
  const LoopedGraph g = two_triangles();
  const LineCheck c = line_theorem_check(g, 2, random_normals(rng, 6, 2));
  CHECK(c.verdict == LineVerdict::holds);
  CHECK(c.components.size() == 2);
  CHECK(c.witnesses[0].has_value());
  CHECK(c.witnesses[1].has_value());

  LoopedGraph tree(3);
  tree.add_edge(0, 1);
  tree.add_edge(1, 2);
  CHECK(line_theorem_check(tree, 2, random_normals(rng, 3, 2)).verdict == LineVerdict::fails);

  LoopedGraph one(1);
  one.add_loop(0);
  CHECK(line_theorem_check(one, 1, RationalMatrix::Zero(1, 1)).verdict == LineVerdict::fails);
  RationalMatrix nz(1, 1);
  nz << 2;
  CHECK(line_theorem_check(one, 1, nz).verdict == LineVerdict::holds);
}

TEST_CASE("hypothesis violation") {
  const LoopedGraph g = cycle_graph(3);
  CHECK_THROWS_AS(line_theorem_check(g, 3, RationalMatrix::Zero(6, 3)), HypothesisError);
}

TEST_CASE("parallel pair is never a witness") {
  LoopedGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  Rng rng(43);
  const LineCheck c = line_theorem_check(g, 2, random_normals(rng, 2, 2));
  CHECK(c.verdict == LineVerdict::fails);
}

TEST_CASE("realizations") {
  Rng rng(44);
  {
    LoopedGraph g(1);
    for (int i = 0; i < 3; ++i) g.add_loop(0);
    const auto f = realize_line(g, 3, random_normals(rng, 3 + 2, 3), 1);
    REQUIRE(f.has_value());
    CHECK(rigidity_rank(*f) == 3);
  }
  {
    LoopedGraph g(4);
    g.add_loop(0);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    const auto f = realize_line(g, 2, random_normals(rng, 1 + 4, 2), 2);
    REQUIRE(f.has_value());
    CHECK(rigidity_rank(*f) == 8);
  }
  {
    const auto f = realize_line(cycle_graph(3), 3, random_normals(rng, 6, 3), 3);
    REQUIRE(f.has_value());
    CHECK(rigidity_rank(*f) == 9);
  }
  {
    const auto f = realize_line(two_triangles(), 2, random_normals(rng, 6, 2), 4);
    REQUIRE(f.has_value());
    CHECK(rigidity_rank(*f) == 12);
  }
  LoopedGraph tree(2);
  tree.add_edge(0, 1);
  CHECK_FALSE(realize_line(tree, 2, random_normals(rng, 2, 2), 5).has_value());
}

TEST_CASE("pendant trees and longer cycles") {
  Rng rng(45);
  for (int trial = 0; trial < 10; ++trial) {
    LoopedGraph g = cycle_graph(5);
    g.add_vertex();
    g.add_edge(2, 5);
    g.add_vertex();
    g.add_edge(5, 6);
    for (Index d = 1; d <= 3; ++d) {
      const LoopedGraph lifted = add_uniform_loops(g, static_cast<std::size_t>(d - 1));
      const RationalMatrix q = random_normals(rng, lifted.loop_count(), d);
      const LineCheck c = line_theorem_check(g, d, q);
      const auto f = realize_line(g, d, q, static_cast<std::uint64_t>(trial));
      CHECK(f.has_value() == (c.verdict == LineVerdict::holds));
      if (f) CHECK(rigidity_rank(*f) == d * 7);
    }
  }
}

TEST_CASE("unknown verdict on truncation") {
  LoopedGraph g = complete_graph(5);
  for (VertexId v = 0; v < 5; ++v) g.add_vertex();
  for (VertexId v = 5; v < 10; ++v) g.add_edge(v - 5, v);
  RationalMatrix q = RationalMatrix::Zero(10, 2);
  for (Index i = 0; i < 10; ++i) q(i, 0) = 1;
  const LineCheck c = line_theorem_check(g, 2, q, 3);
  CHECK(c.truncated);
  CHECK(c.verdict == LineVerdict::unknown);
}

}
