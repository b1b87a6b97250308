#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ihc/ring.hpp"

namespace ihc {

// Dense row-major matrix of arbitrary-precision integers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  Matrix transpose() const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix hstack(const Matrix& other) const;

  bool is_zero() const;
  void reduce(const Ring& r);
  Matrix negated() const;
  Matrix scaled(const Integer& c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += c * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& c);
  void add_col(std::size_t dst, std::size_t src, const Integer& c);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

bool equal_mod(const Matrix& a, const Matrix& b, const Ring& r);
bool is_zero_mod(const Matrix& a, const Ring& r);
bool is_zero_mod(const Vector& v, const Ring& r);

// Sparse triplet text: first line "rows cols", then "row col value" for each nonzero.
std::string to_triplets(const Matrix& m);
Matrix from_triplets(const std::string& text);

}  // namespace ihc
