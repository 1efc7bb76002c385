#pragma once

#include <cstddef>
#include <vector>

#include "groupoidkit/scalar.hpp"

namespace gk {

using Vector = std::vector<GaussianRational>;
/// Row-major: a list of rows of equal length.
using Matrix = std::vector<Vector>;

/// An exact basis in reduced row echelon form, grown one vector at a time.
///
/// Every row has a leading 1 in its pivot column and zeros in the pivot
/// columns of all other rows, so reduction against the basis is one pass.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const Matrix& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection onto the span along the pivot columns.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Adds v if it is outside the span; returns whether the rank grew.
  bool insert(const Vector& v);

 private:
  std::size_t dim_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form. Among the candidate rows for a pivot the one
/// with the simplest (lowest-height) entry is chosen.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Basis of {x | m x = 0}; `cols` is needed when m has no rows.
Matrix nullspace(const Matrix& m, std::size_t cols);

EchelonBasis span_of(const Matrix& rows, std::size_t dim);

/// dim(span a ∩ span b) computed as dim a + dim b - dim(a + b).
std::size_t intersection_dim(const Matrix& a, const Matrix& b, std::size_t dim);

bool same_span(const Matrix& a, const Matrix& b, std::size_t dim);

Vector mat_vec(const Matrix& m, const Vector& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);

bool is_zero(const Vector& v);

}  // namespace gk
