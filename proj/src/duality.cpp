#include "lclab/duality.hpp"

#include <algorithm>

#include "lclab/linear_program.hpp"
#include "lclab/semigroup.hpp"

namespace lclab {

GradedPieceTable matlis_dual(const GradedPieceTable& table) {
  GradedPieceTable out;
  out.sequence_length = table.sequence_length;
  for (const auto& [a, dims] : table.dims) out.dims.emplace(-a, dims);
  return out;
}

std::int64_t matlis_dual_piece(const GradedPieceTable& table, std::size_t j, const Degree& a) {
  if (j > table.sequence_length) throw std::out_of_range("cohomological index out of range");
  auto it = table.dims.find(-a);
  if (it == table.dims.end()) {
    throw OutsideComputedRegion("outside computed region: degree " + (-a).to_string() + " not in table");
  }
  return it->second[j];
}

bool check_injective_hull_support(std::size_t i, std::int64_t radius, const EngineOptions& options) {
  if (i < 1 || i > 4) throw std::invalid_argument("injective hull check supports 1 <= i <= 4");
  std::vector<Monomial> vars;
  for (std::size_t c = 0; c < i; ++c) {
    ExponentVector e(i);
    e[c] = 1;
    vars.emplace_back(std::move(e));
  }
  const MonomialIdeal zero(i);
  const MonomialSequence s(i, vars);
  auto expected = [&](const Degree& a, std::size_t j) -> std::int64_t {
    if (j != i) return 0;
    return std::all_of(a.coords().begin(), a.coords().end(), [](auto v) { return v <= -1; }) ? 1 : 0;
  };

  const auto chambers = chamber_decomposition(zero, s, options);
  for (const auto& ch : chambers.chambers)
    for (std::size_t j = 0; j <= i; ++j)
      if (ch.dims[j] != expected(ch.representative, j)) return false;

  const auto box = brute_force_box(zero, s, radius, options);
  for (const auto& [a, dims] : box.dims)
    for (std::size_t j = 0; j <= i; ++j)
      if (dims[j] != expected(a, j)) return false;
  return true;
}

bool module_finite_over_subring(const MonomialIdeal& ideal, const MonomialSequence& s) {
  if (ideal.is_unit()) throw ZeroModuleError("zero module: the ideal is the unit ideal");
  const auto total = sum(ideal, MonomialIdeal(s.ambient(), s.items()));
  for (std::size_t c = 0; c < s.ambient(); ++c) {
    const bool pure_power = std::any_of(total.generators().begin(), total.generators().end(),
                                        [&](const Monomial& g) { return (g.support() & ~(1U << c)) == 0; });
    if (!pure_power) return false;
  }
  return true;
}

bool annihilator_exponent_feasible(const IntegerMatrix& exponents, const ExponentVector& g) {
  const std::size_t i = exponents.rows();
  const std::size_t n = exponents.cols();
  if (g.size() != n) throw std::invalid_argument("generator has wrong length");
  std::vector<LinearConstraint> constraints;
  for (std::size_t c = 0; c < n; ++c) {
    LinearConstraint row;
    row.relation = Relation::GreaterEqual;
    row.rhs = mpq_class(static_cast<long>(g[c]));
    for (std::size_t j = 0; j < i; ++j) row.coefficients.emplace_back(static_cast<long>(exponents(j, c)));
    constraints.push_back(std::move(row));
  }
  return find_nonnegative_solution(i, constraints).has_value();
}

bool hom_nonzero(const MonomialIdeal& ideal, const MonomialSequence& s) {
  if (exponent_rank(s.exponent_matrix()) != s.length()) {
    throw NotApplicable("not applicable: the monomials are algebraically dependent");
  }
  if (!module_finite_over_subring(ideal, s)) {
    throw NotApplicable("not applicable: R/I is not module-finite over the subring");
  }
  // g != 0 for every generator here, so a feasible alpha is automatically nonzero.
  return std::none_of(ideal.generators().begin(), ideal.generators().end(), [&](const Monomial& g) {
    return annihilator_exponent_feasible(s.exponent_matrix(), g.exponent());
  });
}

TopNonvanishingReport top_nonvanishing_check(const MonomialIdeal& ideal, const MonomialSequence& s,
                                             const EngineOptions& options) {
  TopNonvanishingReport r;
  const std::size_t i = s.length();
  r.applicable = module_finite_over_subring(ideal, s);
  r.rank = exponent_rank(s.exponent_matrix());
  r.rank_ok = r.rank == i;
  r.h_nonzero = local_cohomology_report(ideal, s, options).indices[i].nonzero;
  if (!r.rank_ok) {
    r.equivalence_holds = !r.h_nonzero;
  } else if (r.applicable) {
    r.hom_nonzero = hom_nonzero(ideal, s);
    r.equivalence_holds = r.h_nonzero == *r.hom_nonzero;
  } else {
    r.equivalence_holds = true;
  }
  return r;
}

}  // namespace lclab
