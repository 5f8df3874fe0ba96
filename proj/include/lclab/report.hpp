#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lclab/cech.hpp"
#include "lclab/problem.hpp"

namespace lclab {

using ReportJson = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "0.1.0";

enum ExitCode : int {
  kExitPass = 0,
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitInternal = 4,
};

struct Outcome {
  ReportJson report;
  int exit_code = kExitPass;
};

struct RunSettings {
  std::optional<std::uint64_t> seed;       // overrides the problem's; recorded in the report
  std::optional<std::int64_t> box_radius;  // overrides the problem's
  Execution execution = Execution::Parallel;
};

/// Executes the problem's tasks in order. Each task records "pass", "error" (a module
/// precondition, exit 3) or "fail" (a violated invariant or engine error, exit 4).
Outcome run_problem(const Problem& problem, const RunSettings& settings = {});

/// One verified claim: a fixture or a corpus invariant.
struct CheckResult {
  std::string name;
  std::string claim;
  bool passed = true;
  std::size_t instances = 0;
  ReportJson details = ReportJson::object();
  std::optional<ReportJson> counterexample;
};

struct VerifySettings {
  std::uint64_t seed = 0;
  Field field = Field::rational();
  Execution execution = Execution::Parallel;
  /// Mutation testing: the chamber engine uses uniform signs while the oracle does not.
  bool inject_sign_fault = false;
  std::size_t ideal_corpus_size = 200;
  std::size_t instance_corpus_size = 200;
  std::size_t sequence_corpus_size = 500;
  std::size_t koszul_corpus_size = 60;
  std::size_t oracle_corpus_size = 120;
};

CheckResult check_injective_hull(const std::vector<Field>& fields, std::int64_t radius, Execution execution);
CheckResult check_cd_equals_dim(std::uint64_t seed, std::size_t count, const std::vector<Field>& fields,
                                Execution execution);
CheckResult check_non_regular_pair();
CheckResult check_unsaturated_pair();
CheckResult check_koszul_limit(std::uint64_t seed, std::size_t count, std::int64_t radius, const Field& field,
                               Execution execution);
CheckResult check_chamber_oracle(std::uint64_t seed, std::size_t count, const EngineOptions& options);
CheckResult check_composite_fixtures(const Field& field);
CheckResult check_top_nonvanishing(std::uint64_t seed, std::size_t count, const Field& field, Execution execution);
CheckResult check_dimension_bound(std::uint64_t seed, std::size_t count, const Field& field, Execution execution);
CheckResult check_subring_criterion(std::uint64_t seed, std::size_t count, const Field& field, Execution execution);
CheckResult check_single_monomial_converse(std::size_t max_n, std::int64_t max_degree, Execution execution);

ReportJson check_to_json(const CheckResult& check);

/// Runs every fixture and corpus invariant; exit 4 if any check fails.
Outcome verify_paper(const VerifySettings& settings = {});

/// Exploration only: sequences with rank = i and a saturated semigroup but H^i = 0.
Outcome search_converse(std::size_t n, std::int64_t max_degree, std::size_t max_i, const Field& field);

std::string render_markdown(const ReportJson& report);
std::string render_json(const ReportJson& report);

/// The lclab command line. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lclab
