#include "lclab/integer_matrix.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lclab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
  return out;
}

std::int64_t abs64(std::int64_t v) {
  if (v == INT64_MIN) throw std::overflow_error("integer overflow");
  return v < 0 ? -v : v;
}

/// Elementary operations applied simultaneously to the working matrix and its transforms.
struct SmithState {
  IntegerMatrix a, left, right;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, j));
  }
  // row_dst += f * row_src
  void add_row(std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) = checked_add(a(dst, c), checked_mul(f, a(src, c)));
    for (std::size_t c = 0; c < left.cols(); ++c)
      left(dst, c) = checked_add(left(dst, c), checked_mul(f, left(src, c)));
  }
  // col_dst += f * col_src
  void add_col(std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) = checked_add(a(r, dst), checked_mul(f, a(r, src)));
    for (std::size_t r = 0; r < right.rows(); ++r)
      right(r, dst) = checked_add(right(r, dst), checked_mul(f, right(r, src)));
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = -a(r, c);
    for (std::size_t c = 0; c < left.cols(); ++c) left(r, c) = -left(r, c);
  }
};

}  // namespace

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::int64_t> IntegerMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in product");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a(i, k), b(k, j)));
    }
  return out;
}

mpz_class IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>((*this)(i, j));
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : ",[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c == 0 ? "" : ",") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithState s{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::vector<std::int64_t> factors;

  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      // smallest nonzero magnitude in the trailing block, first in row-major order
      std::size_t pr = 0, pc = 0;
      std::int64_t best = 0;
      for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c) {
          const auto v = abs64(s.a(r, c));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (best == 0) break;
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);
      const std::int64_t piv = s.a(t, t);

      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (s.a(r, t) == 0) continue;
        s.add_row(r, t, -(s.a(r, t) / piv));
        clean = clean && s.a(r, t) == 0;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (s.a(t, c) == 0) continue;
        s.add_col(c, t, -(s.a(t, c) / piv));
        clean = clean && s.a(t, c) == 0;
      }
      if (!clean) continue;

      // divisibility of the trailing block by the pivot
      bool divides = true;
      for (std::size_t r = t + 1; r < m.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (s.a(r, c) % piv != 0) {
            s.add_row(t, r, 1);
            divides = false;
            break;
          }
      if (!divides) continue;

      if (piv < 0) s.negate_row(t);
      factors.push_back(s.a(t, t));
      break;
    }
    if (factors.size() != t + 1) break;
  }
  return SmithForm{std::move(factors), std::move(s.left), std::move(s.right)};
}

}  // namespace lclab
