#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lclab {

/// Dense integer matrix; holds exponent matrices (rows = exponents of x_1..x_i).
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<std::int64_t> row(std::size_t r) const;

  IntegerMatrix transpose() const;
  /// Throws std::overflow_error if an entry leaves the int64 range.
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  /// Square matrices only.
  mpz_class determinant() const;
  std::string to_string() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// left * m * right is diagonal with entries invariant_factors followed by zeros.
struct SmithForm {
  std::vector<std::int64_t> invariant_factors;  // positive, d1 | d2 | ...
  IntegerMatrix left;                           // rows x rows, unimodular
  IntegerMatrix right;                          // cols x cols, unimodular
};

/// Smith normal form with unimodular transforms. Arithmetic is overflow-checked.
SmithForm smith_normal_form(const IntegerMatrix& m);

}  // namespace lclab
