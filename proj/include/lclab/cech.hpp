#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lclab/execution.hpp"
#include "lclab/field.hpp"
#include "lclab/monomial.hpp"
#include "lclab/sparse_matrix.hpp"

namespace lclab {

/// Cohomology dimensions h^0..h^i at one degree. Signed so that a broken
/// differential (d∘d != 0) shows up as a mismatch instead of wrapping around.
using DimVector = std::vector<std::int64_t>;

/// Alternating is the only correct convention; Uniform exists for fault-injection tests.
enum class SignConvention { Alternating, Uniform };

struct EngineOptions {
  Field field = Field::rational();
  std::size_t chamber_cap = 1'000'000;
  std::size_t box_cap = 2'000'000;
  Execution execution = Execution::Parallel;
  SignConvention signs = SignConvention::Alternating;
};

class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A direct-limit or colimit computation failed to settle where theory says it must.
class StabilizationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degreewise Čech complex of the sequence s on R/I. Every localization
/// (R/I)[x_S^-1] is precomputed as the saturation J_S = I : (prod_{j in S} x_j)^inf,
/// so each graded piece is a staircase test.
class CechComplex {
 public:
  /// Throws ZeroModuleError when I is the unit ideal.
  CechComplex(MonomialIdeal ideal, MonomialSequence sequence);

  const MonomialIdeal& ideal() const { return ideal_; }
  const MonomialSequence& sequence() const { return sequence_; }
  std::size_t length() const { return sequence_.length(); }
  std::size_t ambient() const { return ideal_.ambient(); }

  /// dim_k ((R/I)[x_S^-1])_a, which is 0 or 1.
  int localized_piece(std::uint32_t subset, const Degree& a) const;

  /// Subsets of size p (increasing bitmask order) whose piece at a is nonzero.
  std::vector<std::uint32_t> cochain_basis(std::size_t p, const Degree& a) const;
  /// C^p_a -> C^{p+1}_a in the cochain bases above.
  SparseMatrix differential(std::size_t p, const Degree& a, const Field& field,
                            SignConvention signs = SignConvention::Alternating) const;
  DimVector cohomology_at(const Degree& a, const Field& field,
                          SignConvention signs = SignConvention::Alternating) const;

  /// Per coordinate: 0 and every coordinate of every generator of every J_S, sorted.
  const std::vector<std::vector<std::int64_t>>& thresholds() const { return thresholds_; }
  std::int64_t max_threshold_magnitude() const;

 private:
  MonomialIdeal ideal_;
  MonomialSequence sequence_;
  std::vector<std::uint32_t> supports_;                  // supp(sigma_S) per subset
  std::vector<std::vector<ExponentVector>> saturated_;  // generators of J_S per subset
  std::vector<std::vector<std::int64_t>> thresholds_;
};

/// Degree-indexed cohomology dimensions on a finite set of degrees.
struct GradedPieceTable {
  std::size_t sequence_length = 0;
  std::map<Degree, DimVector> dims;

  friend bool operator==(const GradedPieceTable&, const GradedPieceTable&) = default;
};

struct Chamber {
  std::vector<std::size_t> intervals;  // interval index per coordinate
  Degree representative;
  DimVector dims;
};

/// Finite partition of Z^n into products of threshold intervals
/// (-inf,t_1), [t_1,t_2), ..., [t_last,inf) on which the cohomology is constant.
struct ChamberDecomposition {
  std::size_t sequence_length = 0;
  std::vector<std::vector<std::int64_t>> thresholds;
  std::vector<Chamber> chambers;  // mixed-radix order, last coordinate fastest

  std::size_t locate(const Degree& a) const;
  const DimVector& dims_at(const Degree& a) const { return chambers[locate(a)].dims; }
};

struct CohomologyVerdict {
  std::size_t index = 0;
  bool nonzero = false;
  std::optional<Degree> witness;
};

struct LocalCohomologyReport {
  std::vector<CohomologyVerdict> indices;  // j = 0..i
  std::optional<std::int64_t> cd;          // empty when every H^j vanishes
  std::size_t chamber_count = 0;
};

struct CdVsDim {
  std::int64_t cd = 0;
  std::int64_t dim = 0;
  bool equal = false;
};

/// Degrees of the box [-r, r]^n in lexicographic order.
std::vector<Degree> box_degrees(std::size_t n, std::int64_t radius);

int localized_piece(const MonomialIdeal& ideal, const MonomialSequence& s, std::uint32_t subset,
                    const Degree& a);

DimVector cech_at_degree(const MonomialIdeal& ideal, const MonomialSequence& s, const Degree& a,
                         const Field& field = Field::rational());

/// Throws InstanceTooLarge past options.chamber_cap.
ChamberDecomposition chamber_decomposition(const MonomialIdeal& ideal, const MonomialSequence& s,
                                           const EngineOptions& options = {});

LocalCohomologyReport local_cohomology_report(const MonomialIdeal& ideal, const MonomialSequence& s,
                                              const EngineOptions& options = {});
LocalCohomologyReport local_cohomology_report(const ChamberDecomposition& chambers);

/// cd(m, R/I) against dim R/I, where m is generated by all variables.
CdVsDim cd_vs_dim(const MonomialIdeal& ideal, const EngineOptions& options = {});

/// Independent oracle: every degree of the box, Čech complex rebuilt from scratch
/// per degree with its own saturation and sign bookkeeping. Throws InstanceTooLarge
/// past options.box_cap.
GradedPieceTable brute_force_box(const MonomialIdeal& ideal, const MonomialSequence& s,
                                 std::int64_t radius, const EngineOptions& options = {});

/// Koszul cohomology of x_1^t..x_i^t on R/I at internal degree a; the summand for S
/// sits in degree a + t*sigma_S so the differentials are degree preserving.
DimVector koszul_at_degree(const MonomialIdeal& ideal, const MonomialSequence& s, std::int64_t t,
                           const Degree& a, const Field& field = Field::rational());

/// Stabilized Koszul cohomology agrees with Čech cohomology on [-r, r]^n.
/// Throws StabilizationFailure if two consecutive powers past the bound disagree.
bool koszul_limit_check(const MonomialIdeal& ideal, const MonomialSequence& s, std::int64_t radius,
                        const EngineOptions& options = {});

/// H^q of the inner sequence on R/I as a Z^n-graded module: a basis of classes
/// per degree and the action of monomials between degrees.
class CohomologyModuleHandle {
 public:
  CohomologyModuleHandle(const CechComplex& complex, std::size_t q, Field field);

  std::size_t index() const { return q_; }
  std::size_t dim(const Degree& a) const { return piece(a).classes.size(); }
  /// Multiplication by y^u from degree a to a + u, as a dim(a+u) x dim(a) matrix.
  SparseMatrix multiplication(const ExponentVector& u, const Degree& a) const;

 private:
  struct Piece {
    std::vector<std::uint32_t> basis;  // cochain basis of C^q_a
    std::vector<Vector> classes;       // representatives of a basis of H^q_a
    SparseMatrix span;                 // columns: classes then boundaries
  };
  Piece piece(const Degree& a) const;

  const CechComplex& complex_;
  std::size_t q_;
  Field field_;
};

/// Compares dim H^d(concat)_a with dim H^{d-i}_outer(H^i_inner(R/I))_a on [-r, r]^n,
/// i = |inner|, d = i + |outer|. An empty outer sequence compares H^i with itself.
bool composite_check(const MonomialIdeal& ideal, const MonomialSequence& inner,
                     const std::vector<Monomial>& outer, std::int64_t radius,
                     const EngineOptions& options = {});

}  // namespace lclab
