#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "lclab/cech.hpp"
#include "lclab/integer_matrix.hpp"
#include "lclab/monomial.hpp"

namespace lclab {

class OutsideComputedRegion : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graded Matlis dual of a table: D(M)_a = M_{-a} on the negated degree set.
GradedPieceTable matlis_dual(const GradedPieceTable& table);

/// dim D(H^j)_a = dim H^j_{-a}; throws OutsideComputedRegion if -a was not computed.
std::int64_t matlis_dual_piece(const GradedPieceTable& table, std::size_t j, const Degree& a);

/// On k[X_1..X_i] with the sequence X_1..X_i: H^j vanishes for j != i, and H^i is
/// one-dimensional exactly in degrees with every coordinate <= -1, i.e. the graded
/// injective hull of k. Checked on every chamber and on the box [-r, r]^i.
bool check_injective_hull_support(std::size_t i, std::int64_t radius, const EngineOptions& options = {});

/// I + (x_1..x_i) contains a power of every variable, i.e. R/I is module-finite over k[x].
bool module_finite_over_subring(const MonomialIdeal& ideal, const MonomialSequence& s);

/// Is there alpha >= 0 (rational) with A^T alpha >= g? Rounding alpha up gives an integer
/// solution because A >= 0, so this also decides the integer question.
bool annihilator_exponent_feasible(const IntegerMatrix& exponents, const ExponentVector& g);

/// Hom_{k[x]}(R/I, k[x]) != 0, decided as Ann_{k[x]}(R/I) = 0: no monomial x^alpha lies in I.
/// Requires independent monomials and module-finiteness, otherwise throws NotApplicable.
bool hom_nonzero(const MonomialIdeal& ideal, const MonomialSequence& s);

struct TopNonvanishingReport {
  bool applicable = false;  // R/I module-finite over k[x]
  bool h_nonzero = false;   // H^i_{(x)}(R/I) != 0
  std::size_t rank = 0;     // rank of the exponent matrix = dim k[x]
  bool rank_ok = false;     // rank == i
  std::optional<bool> hom_nonzero;  // evaluated only when applicable and rank_ok
  bool equivalence_holds = false;
};

/// H^i_{(x)}(R/I) != 0  <=>  dim k[x] = i and Hom_{k[x]}(R/I, k[x]) != 0.
/// When rank < i the report asserts h^i = 0 outright; when rank = i but R/I is not
/// module-finite over k[x] the instance is marked not applicable and passes vacuously.
TopNonvanishingReport top_nonvanishing_check(const MonomialIdeal& ideal, const MonomialSequence& s,
                                             const EngineOptions& options = {});

}  // namespace lclab
