#include "lclab/linear_program.hpp"

#include <stdexcept>

namespace lclab {

std::optional<std::vector<mpq_class>> find_nonnegative_solution(
    std::size_t num_vars, const std::vector<LinearConstraint>& constraints) {
  const std::size_t m = constraints.size();
  std::size_t num_slack = 0;
  for (const auto& c : constraints) {
    if (c.coefficients.size() != num_vars) throw std::invalid_argument("constraint has wrong width");
    if (c.relation != Relation::Equal) ++num_slack;
  }
  // columns: structural | slack | artificial | rhs
  const std::size_t art0 = num_vars + num_slack;
  const std::size_t width = art0 + m + 1;
  const std::size_t rhs = width - 1;
  std::vector<std::vector<mpq_class>> t(m + 1, std::vector<mpq_class>(width, 0));
  std::vector<std::size_t> basis(m);

  std::size_t slack = num_vars;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    for (std::size_t j = 0; j < num_vars; ++j) t[i][j] = c.coefficients[j];
    if (c.relation == Relation::LessEqual) t[i][slack++] = 1;
    if (c.relation == Relation::GreaterEqual) t[i][slack++] = -1;
    t[i][rhs] = c.rhs;
    if (sgn(c.rhs) < 0) {
      for (std::size_t j = 0; j < art0; ++j) t[i][j] = -t[i][j];
      t[i][rhs] = -t[i][rhs];
    }
    t[i][art0 + i] = 1;
    basis[i] = art0 + i;
  }
  // objective: minimise the sum of artificials, expressed in non-basic columns
  auto& obj = t[m];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < art0; ++j) obj[j] -= t[i][j];
    obj[rhs] -= t[i][rhs];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (sgn(obj[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    mpq_class best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      mpq_class ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot occur for a bounded-below objective

    const mpq_class piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const mpq_class f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  if (sgn(obj[rhs]) != 0) return std::nullopt;
  std::vector<mpq_class> x(num_vars, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < num_vars) x[basis[i]] = t[i][rhs];
  }
  return x;
}

}  // namespace lclab
