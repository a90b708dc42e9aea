#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ktheta {

using Integer = mpz_class;
using IntegerVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  /// Row-major literal; the number of values must be rows * cols.
  IntegerMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows, std::size_t cols);
  static IntegerMatrix from_columns(const std::vector<IntegerVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntegerVector row(std::size_t i) const;
  IntegerVector column(std::size_t j) const;
  IntegerMatrix transpose() const;

  IntegerVector operator*(const IntegerVector& v) const;
  IntegerMatrix operator*(const IntegerMatrix& other) const;
  IntegerMatrix operator+(const IntegerMatrix& other) const;
  IntegerMatrix operator-(const IntegerMatrix& other) const;
  IntegerMatrix operator-() const;
  IntegerMatrix scaled(const Integer& factor) const;

  bool operator==(const IntegerMatrix& other) const;
  bool is_zero() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerVector operator+(const IntegerVector& a, const IntegerVector& b);
IntegerVector operator-(const IntegerVector& a, const IntegerVector& b);
IntegerVector operator-(const IntegerVector& a);
IntegerVector scaled(const IntegerVector& v, const Integer& factor);
bool is_zero(const IntegerVector& v);
Integer content(const IntegerVector& v);  // gcd of entries, 0 for the zero vector
bool is_primitive(const IntegerVector& v);
IntegerVector to_integer_vector(const std::vector<long>& v);

/// Bilinear form value xᵗ M y.
Integer bilinear(const IntegerMatrix& m, const IntegerVector& x, const IntegerVector& y);

/// Exact conversion; throws std::overflow_error when an entry does not fit.
std::vector<std::int64_t> to_int64(const IntegerVector& v);
std::int64_t to_int64(const Integer& v);

}  // namespace ktheta
