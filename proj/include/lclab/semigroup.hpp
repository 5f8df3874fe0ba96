#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lclab/cech.hpp"
#include "lclab/integer_matrix.hpp"
#include "lclab/monomial.hpp"

namespace lclab {

/// Rank of the exponent matrix over Q, which is the Krull dimension of k[x_1..x_i].
std::size_t exponent_rank(const IntegerMatrix& exponents);

/// The lattice ZA spanned by the rows of A. Membership is decided through the Smith
/// form U A^T V = D: b is in ZA iff (U b)_k is divisible by d_k for k < rank and
/// vanishes beyond.
class Lattice {
 public:
  explicit Lattice(const IntegerMatrix& generators);
  bool contains(const ExponentVector& b) const;
  std::size_t rank() const { return factors_.size(); }

 private:
  std::size_t n_;
  IntegerMatrix left_;
  std::vector<std::int64_t> factors_;
};

bool lattice_membership(const ExponentVector& b, const IntegerMatrix& exponents);

/// b in NA: a nonnegative integer combination of the rows. b must be nonnegative and
/// every row nonzero and nonnegative, which bounds the search.
bool semigroup_membership(const ExponentVector& b, const IntegerMatrix& exponents);

struct SemigroupReport {
  std::size_t rank = 0;
  std::size_t subring_dimension = 0;        // equals rank
  bool saturated = false;                   // NA == ZA ∩ N^n
  std::optional<ExponentVector> witness;    // some element of (ZA ∩ N^n) \ NA
  std::vector<ExponentVector> extreme_rays; // lattice generators of the rays of span(A) ∩ R^n_+
  std::vector<ExponentVector> hilbert_basis;
};

/// Decides NA == ZA ∩ N^n. Cone stage: each extreme ray of span(A) ∩ R^n_+ must lie in
/// cone(A) (exact LP). Lattice stage: the Hilbert basis of ZA ∩ N^n is completed inside
/// the box bounded by the sum of the ray generators, then each element is tested in NA.
/// Throws InstanceTooLarge when the Hilbert basis exceeds hilbert_cap.
SemigroupReport saturation_check(const IntegerMatrix& exponents, std::size_t hilbert_cap = 10'000);

/// A polynomial of R given by its terms; only the support matters for membership in
/// monomial subrings.
struct Polynomial {
  std::vector<std::pair<std::int64_t, Monomial>> terms;
};

enum class FractionFieldVerdict { Yes, NoWithinBound };

struct FractionFieldResult {
  FractionFieldVerdict verdict = FractionFieldVerdict::NoWithinBound;
  std::optional<ExponentVector> multiplier_exponents;  // alpha with g = x^alpha
  std::optional<Monomial> multiplier;                  // g written in the variables y
};

/// Searches x^alpha with |alpha| <= bound such that x^alpha * p lies in k[x]. Degree
/// first, then lexicographically largest alpha first. A monomial multiplier is enough:
/// if p lies in the fraction field at all, every term exponent lies in ZA = NA - NA.
FractionFieldResult fraction_field_membership(const Polynomial& p, const IntegerMatrix& exponents,
                                              std::int64_t bound);

struct SubringCriterionReport {
  bool h_nonzero = false;  // H^i_{(x)}(R) != 0 with R the polynomial ring
  std::size_t rank = 0;
  bool rank_ok = false;
  bool saturated = false;
  std::optional<ExponentVector> witness;
  bool implication_holds = false;  // !h_nonzero || (rank_ok && saturated)
};

/// H^i_{(x)}(R) != 0  =>  dim k[x] = i and R ∩ Q(k[x]) = k[x], on the polynomial ring.
SubringCriterionReport subring_criterion_check(const MonomialSequence& s, const EngineOptions& options = {});

struct ConverseSearchResult {
  std::size_t examined = 0;
  std::vector<MonomialSequence> sequences;        // converse-violating candidates
  std::vector<SubringCriterionReport> reports;  // parallel to sequences
};

/// Enumerates sequences of 1..max_i distinct monomials of degree 1..max_degree in n
/// variables and keeps those with rank = i and a saturated semigroup but H^i = 0.
/// Exploration only. Throws InstanceTooLarge beyond candidate_cap sequences.
ConverseSearchResult converse_search(std::size_t n, std::int64_t max_degree, std::size_t max_i,
                                     const EngineOptions& options = {}, std::size_t candidate_cap = 200'000);

/// All monomials of total degree 1..max_degree in n variables, lexicographically.
std::vector<Monomial> monomials_up_to(std::size_t n, std::int64_t max_degree);

}  // namespace lclab
