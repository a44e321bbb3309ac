#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "christol/finite_field.hpp"

namespace christol {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

/// Row vector times matrix over F_p. Throws DimensionMismatch.
std::vector<Residue> row_times(Prime p, std::span<const Residue> v, const Matrix& m);
Residue dot(Prime p, std::span<const Residue> a, std::span<const Residue> b);

/// Incremental Gaussian elimination over F_p.
///
/// Vectors are added one at a time. Each accepted vector becomes generator
/// number rank()-1; for any query vector the tracker reports either its
/// coordinates in terms of the accepted generators or that it is
/// independent of them.
class SpanTracker {
 public:
  SpanTracker(Prime p, std::size_t dim) : p_(p), dim_(dim) {}

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t dim() const noexcept { return dim_; }

  /// Coordinates of v in the accepted generators, or nullopt if v is not in
  /// their span.
  std::optional<std::vector<Residue>> coordinates(std::span<const Residue> v) const;

  /// Returns the coordinates if v is in the span; otherwise accepts v as a
  /// new generator and returns nullopt.
  std::optional<std::vector<Residue>> insert(std::span<const Residue> v);

 private:
  struct Reduced {
    std::vector<Residue> residual;
    std::vector<Residue> coords;
    std::optional<std::size_t> pivot;
  };
  Reduced reduce(std::span<const Residue> v) const;

  Prime p_;
  std::size_t dim_;
  // Echelon rows (pivot entry 1, zero at earlier pivots) and, for each, its
  // expression as a combination of the accepted generators.
  std::vector<std::vector<Residue>> echelon_;
  std::vector<std::vector<Residue>> combo_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a list of equal-length vectors.
std::size_t rank_of(Prime p, const std::vector<std::vector<Residue>>& vectors);

}  // namespace christol
