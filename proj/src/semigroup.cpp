#include "lclab/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "lclab/linear_program.hpp"
#include "lclab/sparse_matrix.hpp"
#include "parallel.hpp"

namespace lclab {

namespace {

void require_nonnegative_rows(const IntegerMatrix& a) {
  for (std::size_t j = 0; j < a.rows(); ++j) {
    bool nonzero = false;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(j, c) < 0) throw std::invalid_argument("exponent rows must be nonnegative");
      nonzero = nonzero || a(j, c) != 0;
    }
    if (!nonzero) throw std::invalid_argument("exponent rows must be nonzero");
  }
}

bool degree_then_lex(const ExponentVector& a, const ExponentVector& b) {
  const auto da = a.total_degree(), db = b.total_degree();
  return da != db ? da < db : a < b;
}

/// Primitive integer vector on the ray through x, or nullopt if x has mixed signs.
std::optional<ExponentVector> primitive_ray(const std::vector<mpq_class>& x) {
  mpz_class den = 1;
  for (const auto& v : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  int sign = 0;
  for (const auto& v : x) {
    mpz_class e = v.get_num() * (den / v.get_den());
    if (sgn(e) != 0) {
      if (sign == 0) sign = sgn(e);
      if (sgn(e) != sign) return std::nullopt;
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    z.push_back(e);
  }
  if (g == 0) return std::nullopt;
  ExponentVector out(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) {
    mpz_class q = z[c] / g;
    if (sign < 0) q = -q;
    if (!q.fits_slong_p()) throw std::overflow_error("ray generator overflows");
    out[c] = q.get_si();
  }
  return out;
}

/// Primitive generators of the extreme rays of span(A) ∩ R^n_+, found as the
/// one-dimensional intersections of span(A) with coordinate subspaces.
std::vector<ExponentVector> extreme_ray_directions(const IntegerMatrix& a) {
  const std::size_t i = a.rows(), n = a.cols();
  const Field q = Field::rational();
  std::set<ExponentVector> rays;
  for (std::uint32_t zero_mask = 0; zero_mask < (1U << n); ++zero_mask) {
    // lambda with (lambda A)_c = 0 for c in zero_mask
    std::vector<std::size_t> zero_cols;
    for (std::size_t c = 0; c < n; ++c)
      if (zero_mask & (1U << c)) zero_cols.push_back(c);
    SparseMatrix constraint(q, zero_cols.size(), i);
    for (std::size_t r = 0; r < zero_cols.size(); ++r)
      for (std::size_t j = 0; j < i; ++j) constraint.set(r, j, a(j, zero_cols[r]));
    const auto lambdas = kernel_basis(constraint);

    SparseMatrix images(q, lambdas.size(), n);
    std::vector<std::vector<mpq_class>> points;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
      std::vector<mpq_class> x(n, 0);
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t j = 0; j < i; ++j) x[c] += lambdas[k][j].to_rational() * a(j, c);
        images.set(k, c, FieldScalar(q, x[c]));
      }
      points.push_back(std::move(x));
    }
    if (rank(images) != 1) continue;
    for (const auto& x : points) {
      if (std::all_of(x.begin(), x.end(), [](const mpq_class& v) { return sgn(v) == 0; })) continue;
      if (auto ray = primitive_ray(x)) rays.insert(*ray);
      break;
    }
  }
  return {rays.begin(), rays.end()};
}

bool in_cone(const IntegerMatrix& a, const ExponentVector& d) {
  std::vector<LinearConstraint> constraints;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    LinearConstraint row;
    row.relation = Relation::Equal;
    row.rhs = mpq_class(static_cast<long>(d[c]));
    for (std::size_t j = 0; j < a.rows(); ++j) row.coefficients.emplace_back(static_cast<long>(a(j, c)));
    constraints.push_back(std::move(row));
  }
  return find_nonnegative_solution(a.rows(), constraints).has_value();
}

bool semigroup_search(const ExponentVector& rest, std::size_t start, const std::vector<ExponentVector>& rows,
                      std::set<std::pair<ExponentVector, std::size_t>>& dead) {
  if (rest.is_zero()) return true;
  if (dead.count({rest, start}) != 0) return false;
  for (std::size_t j = start; j < rows.size(); ++j) {
    if (rows[j].divides(rest) && semigroup_search(rest - rows[j], j, rows, dead)) return true;
  }
  dead.insert({rest, start});
  return false;
}

}  // namespace

std::size_t exponent_rank(const IntegerMatrix& exponents) {
  SparseMatrix m(Field::rational(), exponents.rows(), exponents.cols());
  for (std::size_t r = 0; r < exponents.rows(); ++r)
    for (std::size_t c = 0; c < exponents.cols(); ++c) m.set(r, c, exponents(r, c));
  return rank(m);
}

Lattice::Lattice(const IntegerMatrix& generators) : n_(generators.cols()) {
  auto snf = smith_normal_form(generators.transpose());
  left_ = std::move(snf.left);
  factors_ = std::move(snf.invariant_factors);
}

bool Lattice::contains(const ExponentVector& b) const {
  if (b.size() != n_) throw std::invalid_argument("vector has wrong length");
  for (std::size_t k = 0; k < n_; ++k) {
    std::int64_t y = 0;
    for (std::size_t c = 0; c < n_; ++c) y += left_(k, c) * b[c];
    if (k < factors_.size() ? y % factors_[k] != 0 : y != 0) return false;
  }
  return true;
}

bool lattice_membership(const ExponentVector& b, const IntegerMatrix& exponents) {
  return Lattice(exponents).contains(b);
}

bool semigroup_membership(const ExponentVector& b, const IntegerMatrix& exponents) {
  if (b.size() != exponents.cols()) throw std::invalid_argument("vector has wrong length");
  if (!b.is_nonnegative()) throw std::invalid_argument("semigroup membership needs a nonnegative vector");
  require_nonnegative_rows(exponents);
  std::vector<ExponentVector> rows;
  for (std::size_t j = 0; j < exponents.rows(); ++j) rows.emplace_back(exponents.row(j));
  std::set<std::pair<ExponentVector, std::size_t>> dead;
  return semigroup_search(b, 0, rows, dead);
}

SemigroupReport saturation_check(const IntegerMatrix& exponents, std::size_t hilbert_cap) {
  require_nonnegative_rows(exponents);
  const std::size_t n = exponents.cols();
  const Lattice lattice(exponents);
  SemigroupReport report;
  report.rank = exponent_rank(exponents);
  report.subring_dimension = report.rank;

  // Cone stage.
  for (const auto& direction : extreme_ray_directions(exponents)) {
    ExponentVector generator = direction;
    for (std::int64_t k = 2; !lattice.contains(generator); ++k) {
      if (k > 1'000'000) throw InstanceTooLarge("instance too large: lattice index along a ray");
      generator = k * direction;
    }
    report.extreme_rays.push_back(generator);
  }
  std::sort(report.extreme_rays.begin(), report.extreme_rays.end(), degree_then_lex);
  for (const auto& ray : report.extreme_rays) {
    if (!in_cone(exponents, ray)) {
      report.witness = ray;
      break;
    }
  }

  // Lattice stage: every irreducible element of ZA ∩ N^n sits in a half-open
  // parallelepiped over linearly independent ray generators, or is one of them.
  std::vector<std::int64_t> bound(n, 0);
  for (const auto& ray : report.extreme_rays)
    for (std::size_t c = 0; c < n; ++c) bound[c] += ray[c];
  double volume = 1;
  for (auto b : bound) volume *= static_cast<double>(b + 1);
  if (volume > 5e7) throw InstanceTooLarge("instance too large: Hilbert basis search box");

  std::vector<ExponentVector> members;
  ExponentVector b(n);
  for (;;) {
    if (!b.is_zero() && lattice.contains(b)) members.push_back(b);
    std::size_t c = n;
    while (c > 0 && b[c - 1] == bound[c - 1]) b[--c] = 0;
    if (c == 0) break;
    ++b[c - 1];
  }
  std::sort(members.begin(), members.end(), degree_then_lex);
  for (const auto& x : members) {
    const bool reducible = std::any_of(report.hilbert_basis.begin(), report.hilbert_basis.end(),
                                       [&](const ExponentVector& h) { return h.divides(x); });
    if (reducible) continue;
    report.hilbert_basis.push_back(x);
    if (report.hilbert_basis.size() > hilbert_cap) {
      throw InstanceTooLarge("instance too large: Hilbert basis exceeds cap " + std::to_string(hilbert_cap));
    }
  }
  if (!report.witness) {
    for (const auto& h : report.hilbert_basis) {
      if (!semigroup_membership(h, exponents)) {
        report.witness = h;
        break;
      }
    }
  }
  report.saturated = !report.witness.has_value();
  return report;
}

FractionFieldResult fraction_field_membership(const Polynomial& p, const IntegerMatrix& exponents,
                                              std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  require_nonnegative_rows(exponents);
  const std::size_t i = exponents.rows(), n = exponents.cols();
  for (const auto& [coef, m] : p.terms)
    if (m.ambient() != n) throw std::invalid_argument("polynomial has wrong ambient variable count");

  FractionFieldResult result;
  if (p.terms.empty()) {
    result.verdict = FractionFieldVerdict::Yes;
    result.multiplier_exponents = ExponentVector(i);
    result.multiplier = Monomial::one(n);
    return result;
  }
  for (std::int64_t degree = 0; degree <= bound; ++degree) {
    // compositions of degree into i parts, first coordinate largest first
    ExponentVector alpha(i);
    std::function<bool(std::size_t, std::int64_t)> visit = [&](std::size_t j, std::int64_t left) -> bool {
      if (j + 1 == i) {
        alpha[j] = left;
        ExponentVector g(n);
        for (std::size_t r = 0; r < i; ++r) g = g + alpha[r] * ExponentVector(exponents.row(r));
        const bool all_in = std::all_of(p.terms.begin(), p.terms.end(), [&](const auto& term) {
          return term.first == 0 || semigroup_membership(term.second.exponent() + g, exponents);
        });
        if (all_in) {
          result.verdict = FractionFieldVerdict::Yes;
          result.multiplier_exponents = alpha;
          result.multiplier = Monomial(g);
        }
        return all_in;
      }
      for (std::int64_t v = left; v >= 0; --v) {
        alpha[j] = v;
        if (visit(j + 1, left - v)) return true;
      }
      return false;
    };
    if (visit(0, degree)) return result;
  }
  return result;
}

SubringCriterionReport subring_criterion_check(const MonomialSequence& s, const EngineOptions& options) {
  SubringCriterionReport r;
  const std::size_t i = s.length();
  r.h_nonzero = local_cohomology_report(MonomialIdeal(s.ambient()), s, options).indices[i].nonzero;
  r.rank = exponent_rank(s.exponent_matrix());
  r.rank_ok = r.rank == i;
  const auto sat = saturation_check(s.exponent_matrix());
  r.saturated = sat.saturated;
  r.witness = sat.witness;
  r.implication_holds = !r.h_nonzero || (r.rank_ok && r.saturated);
  return r;
}

std::vector<Monomial> monomials_up_to(std::size_t n, std::int64_t max_degree) {
  std::vector<Monomial> out;
  if (n == 0 || max_degree < 1) return out;
  ExponentVector e(n);
  for (;;) {
    const auto d = e.total_degree();
    if (d >= 1 && d <= max_degree) out.emplace_back(e);
    std::size_t c = n;
    while (c > 0 && e[c - 1] == max_degree) e[--c] = 0;
    if (c == 0) break;
    ++e[c - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConverseSearchResult converse_search(std::size_t n, std::int64_t max_degree, std::size_t max_i,
                                     const EngineOptions& options, std::size_t candidate_cap) {
  const auto monos = monomials_up_to(n, max_degree);
  std::vector<std::vector<std::size_t>> picks;
  for (std::size_t i = 1; i <= max_i && i <= monos.size(); ++i) {
    std::vector<std::size_t> idx(i);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      picks.push_back(idx);
      if (picks.size() > candidate_cap) {
        throw InstanceTooLarge("instance too large: more than " + std::to_string(candidate_cap) + " sequences");
      }
      std::size_t k = i;
      while (k > 0 && idx[k - 1] == monos.size() - i + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t m = k; m < i; ++m) idx[m] = idx[m - 1] + 1;
    }
  }

  EngineOptions inner = options;
  inner.execution = Execution::Serial;
  std::vector<std::optional<SubringCriterionReport>> reports(picks.size());
  detail::for_each_index(picks.size(), options.execution, [&](std::size_t k) {
    std::vector<Monomial> items;
    for (auto j : picks[k]) items.push_back(monos[j]);
    reports[k] = subring_criterion_check(MonomialSequence(n, std::move(items)), inner);
  });

  ConverseSearchResult out;
  out.examined = picks.size();
  for (std::size_t k = 0; k < picks.size(); ++k) {
    const auto& r = *reports[k];
    if (r.rank_ok && r.saturated && !r.h_nonzero) {
      std::vector<Monomial> items;
      for (auto j : picks[k]) items.push_back(monos[j]);
      out.sequences.emplace_back(n, std::move(items));
      out.reports.push_back(r);
    }
  }
  return out;
}

}  // namespace lclab
