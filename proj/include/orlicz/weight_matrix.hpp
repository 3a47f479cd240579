#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace orlicz {

/// n x N matrix with positive, nonincreasing rows (n <= N).
class WeightMatrix {
 public:
  /// Throws ConstructionError carrying the offending row index.
  WeightMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  static WeightMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static WeightMatrix constant(std::size_t n, double value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const double> entries() const { return entries_; }

  /// Sum_{j < m} a(i, j) for m = 0..cols.
  std::vector<double> prefix_sums(std::size_t i) const;

  /// Rows permuted by `order` (new row r is old row order[r]).
  WeightMatrix permuted_rows(std::span<const std::size_t> order) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

/// Cubic array a(i, j, k), i, j, k < n, of arbitrary sign.
class Array3 {
 public:
  Array3(std::size_t n, std::vector<double> entries);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * n_ + j) * n_ + k];
  }
  std::span<const double> entries() const { return entries_; }

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

}  // namespace orlicz
