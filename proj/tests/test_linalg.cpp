#include "oracles.hpp"

#include "rigor/linalg.hpp"
#include "rigor/random.hpp"

#include <doctest.h>

using namespace rigor;

namespace {

RationalMatrix random_matrix(Rng& rng, Index r, Index c, std::int64_t lo = -9, std::int64_t hi = 9) {
  RationalMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = rng.integer(lo, hi);
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-8, 4)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("mod p field") {
  const ModP a = ModP::from_i64(-1);
  CHECK(a.value() == ModP::kModulus - 1);
  CHECK((a * a) == ModP(1));
  const ModP b = ModP::from_u64(123456789);
  CHECK((b * b.inverse()) == ModP(1));
  CHECK_THROWS_AS(ModP().inverse(), std::domain_error);
  CHECK(ModP::from_rational(Rational(1, 2)) * ModP(2) == ModP(1));
}

TEST_CASE("rank examples") {
  CHECK(rank_exact(RationalMatrix::Identity(4, 4)) == 4);
  CHECK(rank_exact(RationalMatrix::Zero(3, 5)) == 0);
  Rng rng(3);
  RationalMatrix m = random_matrix(rng, 6, 6);
  m.row(5) = m.row(2);
  CHECK(rank_exact(m) == 5);
}

TEST_CASE("exact rank agrees with naive elimination and mod p") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Index r = 1 + rng.uniform(0, 11), c = 1 + rng.uniform(0, 11);
    RationalMatrix m = random_matrix(rng, r, c);
    // force some dependencies
    if (r > 2 && trial % 2 == 0) m.row(r - 1) = m.row(0) * Rational(3, 7) - m.row(1);
    for (Index i = 0; i < r; ++i) m(i, 0) /= Rational(1 + rng.uniform(0, 4));
    const Index expect = static_cast<Index>(oracle::naive_rank(m));
    CHECK(rank_exact(m) == expect);
    CHECK(rank_by_elimination(m) == expect);
    CHECK(rank_modp(to_modp(m)) == expect);
  }
}

TEST_CASE("kernels") {
  CHECK(nullspace(RationalMatrix::Identity(3, 3)).empty());
  CHECK(cokernel(RationalMatrix::Identity(3, 3)).empty());
  CHECK(nullspace(RationalMatrix::Zero(2, 3)).size() == 3);
  CHECK(cokernel(RationalMatrix::Zero(2, 3)).size() == 2);
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    RationalMatrix m = random_matrix(rng, 4, 6);
    m.row(3) = m.row(0) + m.row(1);
    const auto ns = nullspace(m);
    CHECK(static_cast<Index>(ns.size()) == 6 - rank_exact(m));
    for (const auto& x : ns) CHECK(is_zero_vector(m * x));
    const auto ck = cokernel(m);
    CHECK(ck.size() == 1);
    for (const auto& w : ck) CHECK(is_zero_vector(m.transpose() * w));
  }
}

TEST_CASE("linear systems") {
  RationalMatrix a(2, 3);
  a << 1, 1, 0, 0, 1, 1;
  RationalVector b(2);
  b << 2, 3;
  const auto s = solve_linear_system(a, b);
  REQUIRE(s.has_value());
  CHECK(s->dimension() == 1);
  CHECK(a * s->particular == b);
  for (const auto& dir : s->directions) CHECK(is_zero_vector(a * dir));

  RationalMatrix c(2, 1);
  c << 1, 1;
  RationalVector e(2);
  e << 1, 2;
  CHECK_FALSE(solve_linear_system(c, e).has_value());
}

TEST_CASE("span dimension") {
  std::vector<RationalVector> v(3, RationalVector::Zero(3));
  v[0](0) = 1;
  v[1](0) = 2;
  v[2](2) = 5;
  CHECK(span_dimension(v, 3) == 2);
  CHECK(span_dimension({}, 3) == 0);
  CHECK(stack_rows({}, 4).cols() == 4);
}

TEST_CASE("denominators cleared row by row") {
  RationalMatrix m(1, 2);
  m << Rational(1, 2), Rational(1, 3);
  const IntegerMatrix i = clear_denominators(m);
  CHECK(i(0, 0) == 3);
  CHECK(i(0, 1) == 2);
}

}
