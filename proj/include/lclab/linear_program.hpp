#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace lclab {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::vector<mpq_class> coefficients;
  Relation relation = Relation::Equal;
  mpq_class rhs = 0;
};

/// Exact phase-one simplex (Bland's rule): returns some x >= 0 meeting every
/// constraint, or nullopt if the system is infeasible.
std::optional<std::vector<mpq_class>> find_nonnegative_solution(
    std::size_t num_vars, const std::vector<LinearConstraint>& constraints);

}  // namespace lclab
