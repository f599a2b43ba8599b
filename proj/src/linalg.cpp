#include "rigor/linalg.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cassert>

namespace rigor {

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(m(i, j)));
    }
    for (Index j = 0; j < m.cols(); ++j) {
      out(i, j) = boost::multiprecision::numerator(m(i, j)) *
                  (scale / boost::multiprecision::denominator(m(i, j)));
    }
  }
  return out;
}

Index fraction_free_rank(IntegerMatrix m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Integer previous = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      if (pivot < 0 || abs(m(i, c)) < abs(m(pivot, c))) pivot = i;
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Integer& p = m(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) {
        Integer t = p * m(i, j) - m(i, c) * m(r, j);
        assert(t % previous == 0);
        m(i, j) = t / previous;
      }
      m(i, c) = 0;
    }
    previous = m(r, c);
    ++r;
  }
  return r;
}

Index rank_exact(const RationalMatrix& m) { return fraction_free_rank(clear_denominators(m)); }

Index rank_modp(const Matrix<ModP>& m) { return rank_by_elimination(m); }

Matrix<ModP> to_modp(const RationalMatrix& m) {
  Matrix<ModP> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = ModP::from_rational(m(i, j));
  return out;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const auto ech = reduced_row_echelon<Rational>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RationalVector> basis;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RationalVector v = RationalVector::Zero(m.cols());
    v(free) = 1;
    for (Index r = 0; r < ech.rank(); ++r) v(ech.pivots[static_cast<std::size_t>(r)]) = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> cokernel(const RationalMatrix& m) {
  return nullspace(m.transpose());
}

std::optional<AffineSolutionSet> solve_linear_system(const RationalMatrix& a,
                                                     const RationalVector& b) {
  RationalMatrix augmented(a.rows(), a.cols() + 1);
  augmented.leftCols(a.cols()) = a;
  augmented.col(a.cols()) = b;
  const auto ech = reduced_row_echelon<Rational>(augmented);
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  AffineSolutionSet out;
  out.particular = RationalVector::Zero(a.cols());
  for (Index r = 0; r < ech.rank(); ++r)
    out.particular(ech.pivots[static_cast<std::size_t>(r)]) = ech.reduced(r, a.cols());
  out.directions = nullspace(a);
  return out;
}

RationalMatrix stack_rows(std::span<const RationalVector> vectors, Index dim) {
  RationalMatrix out(static_cast<Index>(vectors.size()), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    assert(vectors[i].size() == dim);
    out.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return out;
}

Index span_dimension(std::span<const RationalVector> vectors, Index dim) {
  if (vectors.empty()) return 0;
  return rank_by_elimination<Rational>(stack_rows(vectors, dim));
}

}  // namespace rigor
