#pragma once

// Exact and randomized linear algebra over Q and F_P.

#include "rigor/scalar.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rigor {

using Index = Eigen::Index;

template <typename Field>
struct EchelonForm {
  Matrix<Field> reduced;       // reduced row echelon form
  std::vector<Index> pivots;   // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

// Gauss-Jordan elimination over a field. The first nonzero entry of the
// column is taken as pivot, so the result is deterministic.
template <typename Field>
EchelonForm<Field> reduced_row_echelon(Matrix<Field> m) {
  EchelonForm<Field> out;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (!is_zero(m(i, c))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Field inv = Field(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Field factor = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Field>
Index rank_by_elimination(const Matrix<Field>& m) {
  return reduced_row_echelon<Field>(m).rank();
}

// Scales every row by the lcm of its denominators.
IntegerMatrix clear_denominators(const RationalMatrix& m);

// Rank of an integer matrix by fraction-free (Bareiss) elimination. The pivot
// in each column is the candidate of least absolute value, ties broken by
// row index.
Index fraction_free_rank(IntegerMatrix m);

// Rank over Q via fraction_free_rank.
Index rank_exact(const RationalMatrix& m);

Index rank_modp(const Matrix<ModP>& m);

// Entrywise reduction. Throws std::domain_error if a denominator is
// divisible by P.
Matrix<ModP> to_modp(const RationalMatrix& m);

// Bases of {x : M x = 0} and {w : w^T M = 0}. One vector per free column,
// with a 1 in that column.
std::vector<RationalVector> nullspace(const RationalMatrix& m);
std::vector<RationalVector> cokernel(const RationalMatrix& m);

struct AffineSolutionSet {
  RationalVector particular;
  std::vector<RationalVector> directions;
  Index dimension() const { return static_cast<Index>(directions.size()); }
};

// Solution set of A x = b, or nullopt when inconsistent.
std::optional<AffineSolutionSet> solve_linear_system(const RationalMatrix& a,
                                                     const RationalVector& b);

// Rows of the result are the given vectors; `dim` fixes the column count
// when the list is empty.
RationalMatrix stack_rows(std::span<const RationalVector> vectors, Index dim);

// Dimension of the linear span.
Index span_dimension(std::span<const RationalVector> vectors, Index dim);

inline bool is_zero_vector(const RationalVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

}  // namespace rigor
