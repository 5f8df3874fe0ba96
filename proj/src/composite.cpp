#include <algorithm>
#include <bit>

#include "lclab/cech.hpp"
#include "parallel.hpp"

namespace lclab {

namespace {

SparseMatrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns) {
  SparseMatrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  return m;
}

int outer_sign(std::uint32_t subset, std::size_t j) {
  return std::popcount(subset & ((1U << j) - 1U)) % 2 == 0 ? 1 : -1;
}

}  // namespace

CohomologyModuleHandle::CohomologyModuleHandle(const CechComplex& complex, std::size_t q, Field field)
    : complex_(complex), q_(q), field_(field) {
  if (q > complex.length()) throw std::invalid_argument("cohomological index exceeds sequence length");
}

CohomologyModuleHandle::Piece CohomologyModuleHandle::piece(const Degree& a) const {
  Piece out{complex_.cochain_basis(q_, a), {}, SparseMatrix(field_, 0, 0)};
  const std::size_t dim = out.basis.size();
  if (dim == 0) {
    out.span = SparseMatrix(field_, 0, 0);
    return out;
  }
  const auto cocycles = kernel_basis(complex_.differential(q_, a, field_));
  std::vector<Vector> boundaries;
  if (q_ > 0) {
    const auto d = complex_.differential(q_ - 1, a, field_);
    for (std::size_t c = 0; c < d.cols(); ++c) {
      Vector col(dim, FieldScalar::zero(field_));
      for (std::size_t r = 0; r < dim; ++r) col[r] = d.at(r, c);
      boundaries.push_back(std::move(col));
    }
  }
  std::vector<Vector> spanning = boundaries;
  std::size_t current = rank(from_columns(field_, dim, spanning));
  for (const auto& z : cocycles) {
    spanning.push_back(z);
    const std::size_t next = rank(from_columns(field_, dim, spanning));
    if (next > current) {
      out.classes.push_back(z);
      current = next;
    } else {
      spanning.pop_back();
    }
  }
  std::vector<Vector> columns = out.classes;
  columns.insert(columns.end(), boundaries.begin(), boundaries.end());
  out.span = from_columns(field_, dim, columns);
  return out;
}

SparseMatrix CohomologyModuleHandle::multiplication(const ExponentVector& u, const Degree& a) const {
  if (!u.is_nonnegative()) throw std::invalid_argument("multiplier must be a monomial");
  const Piece src = piece(a);
  const Piece dst = piece(a + u);
  SparseMatrix out(field_, dst.classes.size(), src.classes.size());
  if (dst.classes.empty()) return out;

  std::vector<std::int64_t> position(std::size_t{1} << complex_.length(), -1);
  for (std::size_t m = 0; m < dst.basis.size(); ++m) position[dst.basis[m]] = static_cast<std::int64_t>(m);

  for (std::size_t k = 0; k < src.classes.size(); ++k) {
    Vector image(dst.basis.size(), FieldScalar::zero(field_));
    for (std::size_t idx = 0; idx < src.basis.size(); ++idx) {
      const auto m = position[src.basis[idx]];
      if (m >= 0) image[static_cast<std::size_t>(m)] = src.classes[k][idx];
    }
    const auto coords = solve(dst.span, image);
    if (!coords) throw std::logic_error("image of a cocycle is not a cocycle");
    for (std::size_t r = 0; r < dst.classes.size(); ++r) out.set(r, k, (*coords)[r]);
  }
  return out;
}

bool composite_check(const MonomialIdeal& ideal, const MonomialSequence& inner,
                     const std::vector<Monomial>& outer, std::int64_t radius, const EngineOptions& options) {
  const std::size_t n = ideal.ambient();
  const std::size_t i = inner.length();
  const std::size_t m = outer.size();
  const CechComplex inner_complex(ideal, inner);
  const CohomologyModuleHandle handle(inner_complex, i, options.field);
  const auto degrees = box_degrees(n, radius);
  if (degrees.size() > options.box_cap) throw InstanceTooLarge("instance too large: box exceeds cap");
  std::vector<char> agree(degrees.size(), 0);

  if (m == 0) {
    detail::for_each_index(degrees.size(), options.execution, [&](std::size_t k) {
      const auto h = inner_complex.cohomology_at(degrees[k], options.field, options.signs);
      agree[k] = static_cast<char>(h[i] == static_cast<std::int64_t>(handle.dim(degrees[k])));
    });
    return std::all_of(agree.begin(), agree.end(), [](char v) { return v != 0; });
  }

  const MonomialSequence outer_seq(n, outer);
  const CechComplex concat(ideal, inner.concat(outer_seq));
  const std::int64_t power = inner_complex.max_threshold_magnitude() + radius + 1;
  const std::uint32_t all = (1U << m) - 1U;

  detail::for_each_index(degrees.size(), options.execution, [&](std::size_t k) {
    const Degree& a = degrees[k];
    const std::int64_t lhs = concat.cohomology_at(a, options.field, options.signs)[i + m];

    // (N_{z_T})_a is represented by N at a + power * deg(z_T); check that this is the colimit.
    std::vector<Degree> at(std::size_t{1} << m);
    std::vector<std::size_t> dims(at.size());
    for (std::uint32_t t = 0; t <= all; ++t) {
      const auto deg_t = outer_seq.subset_degree(t);
      at[t] = a + power * deg_t;
      dims[t] = handle.dim(at[t]);
      if (t == 0) continue;
      const auto step = handle.multiplication(deg_t, at[t]);
      if (step.rows() != dims[t] || rank(step) != dims[t]) {
        throw StabilizationFailure("stabilization failure at degree " + a.to_string() +
                                   ": localization colimit not reached, increase box radius");
      }
    }

    // top outer cohomology = C^m / image(d^{m-1})
    std::vector<std::size_t> offset(at.size(), 0);
    std::size_t cols = 0;
    for (std::uint32_t t = 0; t < all; ++t) {
      if (static_cast<std::size_t>(std::popcount(t)) != m - 1) continue;
      offset[t] = cols;
      cols += dims[t];
    }
    SparseMatrix d(options.field, dims[all], cols);
    for (std::uint32_t t = 0; t < all; ++t) {
      if (static_cast<std::size_t>(std::popcount(t)) != m - 1 || dims[t] == 0) continue;
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(all & ~t));
      const auto block = handle.multiplication(power * outer[j].exponent(), at[t]);
      const FieldScalar sign(options.field, outer_sign(t, j));
      for (const auto& [idx, v] : block.entries()) d.set(idx.first, offset[t] + idx.second, sign * v);
    }
    const auto rhs = static_cast<std::int64_t>(dims[all]) - static_cast<std::int64_t>(rank(d));
    agree[k] = static_cast<char>(lhs == rhs);
  });
  return std::all_of(agree.begin(), agree.end(), [](char v) { return v != 0; });
}

}  // namespace lclab
