#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lclab/report.hpp"

namespace lclab {

namespace {

void emit(const Outcome& outcome, const std::string& format, std::ostream& out) {
  out << (format == "md" ? render_markdown(outcome.report) : render_json(outcome.report));
}

Field parse_field_flag(const std::string& text) {
  if (text == "rational") return Field::rational();
  if (!text.starts_with("p:")) throw std::invalid_argument("bad field '" + text + "', expected rational or p:<prime>");
  return Field::parse(text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z^n-graded local cohomology of monomial quotients", "lclab"};
  app.require_subcommand(1);

  std::string format = "json";
  bool serial = false;

  std::string problem_path;
  std::optional<std::uint64_t> run_seed;
  std::optional<std::int64_t> run_box;
  auto* run = app.add_subcommand("run", "Execute the tasks of a problem file");
  run->add_option("problem", problem_path, "Problem JSON file")->required();
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "md"}));
  run->add_option("--seed", run_seed, "Seed recorded in the report and used by randomized tasks");
  run->add_option("--box", run_box, "Box radius for oracle cross-checks")->check(CLI::Range(0, 1000));
  run->add_flag("--serial", serial, "Use the serial reference kernels");

  std::uint64_t verify_seed = 0;
  std::string field_text = "rational";
  bool inject = false;
  auto* verify = app.add_subcommand("verify-paper", "Run every fixture and corpus check");
  verify->add_option("--seed", verify_seed, "Corpus seed");
  verify->add_option("--field", field_text, "rational or p:<prime>");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "md"}));
  verify->add_flag("--serial", serial, "Use the serial reference kernels");
  verify->add_flag("--inject-sign-fault", inject, "Run the chamber engine with uniform signs (mutation test)");

  std::size_t n = 0;
  std::int64_t max_degree = 0;
  std::size_t max_i = 0;
  std::string search_field = "rational";
  auto* search = app.add_subcommand("search-converse", "Search for sequences that would refute the converse");
  search->add_option("--n", n, "Number of variables")->required();
  search->add_option("--max-degree", max_degree, "Largest total degree of an item")->required();
  search->add_option("--max-i", max_i, "Largest sequence length")->required();
  search->add_option("--field", search_field, "rational or p:<prime>");
  search->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "md"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  const Execution execution = serial ? Execution::Serial : Execution::Parallel;

  if (*run) {
    std::ifstream in(problem_path, std::ios::binary);
    if (!in) {
      err << problem_path << ": error: cannot read file\n";
      return kExitParse;
    }
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Problem problem;
    try {
      problem = parse_problem(text);
    } catch (const ProblemError& e) {
      err << problem_path << ":" << e.line() << ":" << e.column() << ": error: " << e.detail() << "\n";
      return kExitParse;
    }
    RunSettings settings;
    settings.seed = run_seed;
    settings.box_radius = run_box;
    settings.execution = execution;
    const auto outcome = run_problem(problem, settings);
    emit(outcome, format, out);
    return outcome.exit_code;
  }

  if (*verify) {
    VerifySettings settings;
    try {
      settings.field = parse_field_flag(field_text);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kExitParse;
    }
    settings.seed = verify_seed;
    settings.execution = execution;
    settings.inject_sign_fault = inject;
    const auto outcome = verify_paper(settings);
    emit(outcome, format, out);
    return outcome.exit_code;
  }

  Field field = Field::rational();
  try {
    field = parse_field_flag(search_field);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  const auto outcome = search_converse(n, max_degree, max_i, field);
  emit(outcome, format, out);
  return outcome.exit_code;
}

}  // namespace lclab
