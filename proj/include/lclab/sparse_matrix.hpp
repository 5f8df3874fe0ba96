#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lclab/field.hpp"

namespace lclab {

using Vector = std::vector<FieldScalar>;

/// Sparse matrix over a Field. Stored entries are never zero.
class SparseMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  SparseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols) {}

  /// Dense integer data, row major, mapped into the field.
  static SparseMatrix from_integers(Field field, std::size_t rows, std::size_t cols,
                                    const std::vector<std::int64_t>& row_major);

  void set(std::size_t r, std::size_t c, const FieldScalar& v);
  void set(std::size_t r, std::size_t c, std::int64_t v) { set(r, c, FieldScalar(field_, v)); }
  FieldScalar at(std::size_t r, std::size_t c) const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  const std::map<Index, FieldScalar>& entries() const { return entries_; }

  SparseMatrix transpose() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::map<Index, FieldScalar> entries_;
};

/// Rank over the matrix's field. Rational matrices use fraction-free (Bareiss)
/// elimination on row-scaled integer copies; pivots are chosen column by column,
/// smallest eligible row first.
std::size_t rank(const SparseMatrix& m);

/// Basis of the right kernel, one vector per non-pivot column in increasing column order.
std::vector<Vector> kernel_basis(const SparseMatrix& m);

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const SparseMatrix& m, const Vector& rhs);

Vector multiply(const SparseMatrix& m, const Vector& x);

}  // namespace lclab
