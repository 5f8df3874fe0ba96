#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lclab/field.hpp"
#include "lclab/monomial.hpp"

namespace lclab {

/// Malformed or invalid problem text. Line and column are 1-based.
class ProblemError : public std::runtime_error {
 public:
  ProblemError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

using PolynomialTerms = std::vector<std::pair<std::int64_t, Monomial>>;

struct ProblemOptions {
  std::optional<std::size_t> split;             // composite: items before the split are inner
  std::optional<PolynomialTerms> polynomial;    // fraction_field
  std::optional<std::int64_t> degree_bound;     // fraction_field, default 4
  std::optional<std::size_t> a2_index;          // a2_check, default the variable count
  std::optional<std::int64_t> max_degree;       // converse_search, default 2
  std::optional<std::size_t> max_i;             // converse_search, default 2
  std::optional<std::size_t> chamber_cap;
  std::optional<std::size_t> box_cap;
  std::optional<std::size_t> hilbert_cap;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

struct Problem {
  std::vector<std::string> variables;
  Field field = Field::rational();
  std::vector<Monomial> ideal;     // as written; empty is the zero ideal
  std::vector<Monomial> sequence;  // as written; may be empty for tasks that ignore it
  std::vector<std::string> tasks;
  std::int64_t box_radius = 5;
  ProblemOptions options;

  friend bool operator==(const Problem&, const Problem&) = default;
};

const std::vector<std::string>& task_vocabulary();

/// Parses a monomial against declared variables. Errors carry the column inside the text.
Monomial parse_monomial(std::string_view text, const std::vector<std::string>& variables);
std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables);

Problem parse_problem(std::string_view text);
/// Canonical JSON text; parse_problem(serialize_problem(p)) == p.
std::string serialize_problem(const Problem& p);

}  // namespace lclab
