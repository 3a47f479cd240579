#include "orlicz/weight_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "orlicz/errors.hpp"

namespace orlicz {

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0)
    throw ConstructionError("weight matrix: empty");
  if (rows_ > cols_)
    throw ConstructionError("weight matrix: more rows than columns");
  if (entries_.size() != rows_ * cols_)
    throw ConstructionError("weight matrix: entry count does not match shape");
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const double v = (*this)(i, j);
      if (!std::isfinite(v) || !(v > 0.0))
        throw ConstructionError("weight matrix: row " + std::to_string(i) +
                                    " has a non-positive entry at column " +
                                    std::to_string(j),
                                i);
      if (j > 0 && v > (*this)(i, j - 1))
        throw ConstructionError("weight matrix: row " + std::to_string(i) +
                                    " increases at column " + std::to_string(j),
                                i);
    }
  }
}

WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ConstructionError("weight matrix: empty");
  const std::size_t cols = rows.front().size();
  std::vector<double> entries;
  entries.reserve(rows.size() * cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw ConstructionError("weight matrix: ragged row " + std::to_string(i), i);
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return WeightMatrix(rows.size(), cols, std::move(entries));
}

WeightMatrix WeightMatrix::constant(std::size_t n, double value) {
  return WeightMatrix(n, n, std::vector<double>(n * n, value));
}

std::vector<double> WeightMatrix::prefix_sums(std::size_t i) const {
  std::vector<double> sums(cols_ + 1, 0.0);
  for (std::size_t j = 0; j < cols_; ++j) sums[j + 1] = sums[j] + (*this)(i, j);
  return sums;
}

WeightMatrix WeightMatrix::permuted_rows(std::span<const std::size_t> order) const {
  if (order.size() != rows_) throw std::invalid_argument("permuted_rows: wrong length");
  std::vector<double> out;
  out.reserve(entries_.size());
  for (std::size_t r : order) {
    const auto src = row(r);
    out.insert(out.end(), src.begin(), src.end());
  }
  return WeightMatrix(rows_, cols_, std::move(out));
}

Array3::Array3(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw ConstructionError("cubic array: empty");
  if (entries_.size() != n_ * n_ * n_)
    throw ConstructionError("cubic array: entry count is not n^3");
}

}  // namespace orlicz
