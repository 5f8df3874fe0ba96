#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "lclab/integer_matrix.hpp"

namespace lclab {

/// Largest number of variables accepted by the subset-enumerating algorithms.
inline constexpr std::size_t kMaxVariables = 12;

/// A point of Z^n: a grading degree, or the exponent of a monomial when nonnegative.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : coords_(n, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  ExponentVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t c) const { return coords_[c]; }
  std::int64_t& operator[](std::size_t c) { return coords_[c]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  bool is_nonnegative() const;
  bool is_zero() const;
  std::int64_t total_degree() const;
  /// Bitmask of coordinates with nonzero entry.
  std::uint32_t support() const;
  /// Componentwise <=.
  bool divides(const ExponentVector& other) const;
  ExponentVector operator-() const;
  std::string to_string() const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector operator*(std::int64_t k, const ExponentVector& a);
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

using Degree = ExponentVector;

/// A monomial y^e of k[y_1..y_n]; e is nonnegative.
class Monomial {
 public:
  explicit Monomial(ExponentVector e);
  Monomial(std::initializer_list<std::int64_t> e) : Monomial(ExponentVector(e)) {}
  static Monomial one(std::size_t n) { return Monomial(ExponentVector(n)); }

  const ExponentVector& exponent() const { return exponent_; }
  std::size_t ambient() const { return exponent_.size(); }
  bool is_one() const { return exponent_.is_zero(); }
  bool divides(const Monomial& other) const { return exponent_.divides(other.exponent_); }
  std::uint32_t support() const { return exponent_.support(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  ExponentVector exponent_;
};

/// A monomial ideal of k[y_1..y_n] stored by its minimal generators, sorted.
/// No generators encodes the zero ideal; the single generator 1 encodes the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n) : n_(n) {}
  MonomialIdeal(std::size_t n, std::vector<Monomial> generators);
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial::one(n)}); }

  std::size_t ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_.front().is_one(); }
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<Monomial> generators_;
};

/// The sequence x_1..x_i of nonunit monomials; row j of the exponent matrix is exp(x_j).
class MonomialSequence {
 public:
  MonomialSequence(std::size_t n, std::vector<Monomial> items);

  std::size_t ambient() const { return n_; }
  std::size_t length() const { return items_.size(); }
  const std::vector<Monomial>& items() const { return items_; }
  const Monomial& operator[](std::size_t j) const { return items_[j]; }
  const IntegerMatrix& exponent_matrix() const { return matrix_; }
  /// Sum of exponents of the items selected by the bitmask.
  ExponentVector subset_degree(std::uint32_t subset) const;
  MonomialSequence concat(const MonomialSequence& tail) const;

  friend bool operator==(const MonomialSequence& a, const MonomialSequence& b) {
    return a.n_ == b.n_ && a.items_ == b.items_;
  }

 private:
  std::size_t n_;
  std::vector<Monomial> items_;
  IntegerMatrix matrix_;
};

/// Raised when an entry point receives the zero module R/I with I the unit ideal.
class ZeroModuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool contains(const MonomialIdeal& ideal, const Monomial& u);

/// I : w^infinity. Generators get their coordinates on supp(w) cleared.
MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& w);

/// I : u for a single monomial u.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal radical(const MonomialIdeal& ideal);

/// dim k[y]/I; throws ZeroModuleError for the unit ideal, std::invalid_argument for n > 12.
int krull_dim(const MonomialIdeal& ideal);

bool is_regular_sequence(const MonomialSequence& s, const MonomialIdeal& ideal);

}  // namespace lclab
