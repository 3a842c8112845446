#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "zsg/error.hpp"

namespace zsg {

// Dense row-major matrix. Just storage and indexing; the algorithms live
// in free functions.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<T>& data() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  // Copy with row `skip_row` and column `skip_col` removed.
  Matrix minor(std::size_t skip_row, std::size_t skip_col) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == skip_row) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == skip_col) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  Matrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
    Matrix m(row_ids.size(), col_ids.size());
    for (std::size_t a = 0; a < row_ids.size(); ++a)
      for (std::size_t b = 0; b < col_ids.size(); ++b) m(a, b) = (*this)(row_ids[a], col_ids[b]);
    return m;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace zsg
