#include "lclab/sparse_matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace lclab {

namespace {

using Dense = std::vector<std::vector<FieldScalar>>;

Dense to_dense(const SparseMatrix& m) {
  Dense d(m.rows(), std::vector<FieldScalar>(m.cols(), FieldScalar::zero(m.field())));
  for (const auto& [idx, v] : m.entries()) d[idx.first][idx.second] = v;
  return d;
}

/// In-place reduced row echelon form. Returns pivot columns.
std::vector<std::size_t> rref(Dense& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const FieldScalar inv = FieldScalar::one(a[r][c].field()) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const FieldScalar f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_mod_p(const SparseMatrix& m) {
  const std::uint64_t p = m.field().characteristic();
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols(), 0));
  for (const auto& [idx, v] : m.entries()) {
    a[idx.first][idx.second] = v.to_rational().get_num().get_ui();
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    // inverse by Fermat
    std::uint64_t inv = 1, base = a[r][c], e = p - 2;
    while (e > 0) {
      if (e & 1U) inv = inv * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c] * inv % p;
      for (std::size_t j = c; j < m.cols(); ++j) {
        a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
      }
    }
    ++r;
  }
  return r;
}

/// Fraction-free elimination. Entries stay integral because every intermediate value
/// is a minor of the input; a nonzero remainder therefore means overflow upstream.
template <class Int, class MulSub, class Div>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<Int>> a, std::size_t cols,
                                        MulSub mul_sub, Div exact_div) {
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        auto v = mul_sub(a[r][c], a[i][j], a[i][c], a[r][j]);
        if (!v) return std::nullopt;
        auto q = exact_div(*v, prev);
        if (!q) return std::nullopt;
        a[i][j] = *q;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_rational(const SparseMatrix& m) {
  // Scale each row by the lcm of its denominators.
  std::vector<std::vector<mpz_class>> big(m.rows(), std::vector<mpz_class>(m.cols(), 0));
  std::vector<mpz_class> row_lcm(m.rows(), 1);
  for (const auto& [idx, v] : m.entries()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), row_lcm[idx.first].get_mpz_t(), v.to_rational().get_den_mpz_t());
    row_lcm[idx.first] = l;
  }
  bool fits = true;
  for (const auto& [idx, v] : m.entries()) {
    const mpq_class q = v.to_rational();
    mpz_class z = q.get_num() * (row_lcm[idx.first] / q.get_den());
    fits = fits && z.fits_slong_p();
    big[idx.first][idx.second] = z;
  }

  if (fits) {
    std::vector<std::vector<std::int64_t>> small(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) small[i][j] = big[i][j].get_si();
    auto mul_sub = [](std::int64_t a, std::int64_t b, std::int64_t c,
                      std::int64_t d) -> std::optional<std::int64_t> {
      std::int64_t x = 0, y = 0, z = 0;
      if (__builtin_mul_overflow(a, b, &x) || __builtin_mul_overflow(c, d, &y) ||
          __builtin_sub_overflow(x, y, &z)) {
        return std::nullopt;
      }
      return z;
    };
    auto div = [](std::int64_t a, std::int64_t b) -> std::optional<std::int64_t> {
      if (b == 0 || a % b != 0) return std::nullopt;
      return a / b;
    };
    if (auto r = bareiss_rank(std::move(small), m.cols(), mul_sub, div)) return *r;
  }

  auto mul_sub = [](const mpz_class& a, const mpz_class& b, const mpz_class& c,
                    const mpz_class& d) -> std::optional<mpz_class> { return mpz_class(a * b - c * d); };
  auto div = [](const mpz_class& a, const mpz_class& b) -> std::optional<mpz_class> {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  };
  return *bareiss_rank(std::move(big), m.cols(), mul_sub, div);
}

}  // namespace

SparseMatrix SparseMatrix::from_integers(Field field, std::size_t rows, std::size_t cols,
                                         const std::vector<std::int64_t>& row_major) {
  if (row_major.size() != rows * cols) throw std::invalid_argument("dense data has wrong size");
  SparseMatrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (row_major[r * cols + c] != 0) m.set(r, c, row_major[r * cols + c]);
  return m;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const FieldScalar& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (v.is_zero()) {
    entries_.erase({r, c});
  } else {
    if (v.field() != field_) throw std::invalid_argument("field mismatch");
    entries_.insert_or_assign({r, c}, v);
  }
}

FieldScalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? FieldScalar::zero(field_) : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, cols_, rows_);
  for (const auto& [idx, v] : entries_) t.entries_.emplace(Index{idx.second, idx.first}, v);
  return t;
}

std::size_t rank(const SparseMatrix& m) {
  if (m.entries().empty()) return 0;
  return m.field().is_rational() ? rank_rational(m) : rank_mod_p(m);
}

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  Dense a = to_dense(m);
  const auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), FieldScalar::zero(m.field()));
    v[f] = FieldScalar::one(m.field());
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const SparseMatrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs has wrong length");
  Dense a = to_dense(m);
  for (std::size_t r = 0; r < m.rows(); ++r) a[r].push_back(rhs[r]);
  const auto pivots = rref(a, m.cols() + 1);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), FieldScalar::zero(m.field()));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][m.cols()];
  return x;
}

Vector multiply(const SparseMatrix& m, const Vector& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("vector has wrong length");
  Vector y(m.rows(), FieldScalar::zero(m.field()));
  for (const auto& [idx, v] : m.entries()) y[idx.first] += v * x[idx.second];
  return y;
}

}  // namespace lclab
