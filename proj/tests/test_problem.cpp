#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lclab/report.hpp"
#include "random_instances.hpp"

using namespace lclab;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::filesystem::path> fixture_files(const std::string& sub = "") {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(std::filesystem::path(LCLAB_FIXTURE_DIR) / sub))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kNonRegularPair =
    R"({"ring":{"variables":["y1","y2","y3"],"field":{"kind":"rational"}},"module":{"ideal":[]},)"
    R"("sequence":["y1*y2","y1*y3"],"tasks":["local_cohomology","theorem2"],"box_radius":5})";

ProblemError parse_error(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ProblemError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ProblemError(0, 0, "");
}

Problem random_problem(std::mt19937_64& rng) {
  Problem p;
  const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
  for (std::size_t c = 0; c < n; ++c) p.variables.push_back(std::string(1, static_cast<char>('a' + c)) + "_" + std::to_string(c));
  p.field = testing::uniform(rng, 0, 1) ? Field::rational() : Field::prime(7);
  const auto gens = testing::uniform(rng, 0, 3);
  for (std::int64_t k = 0; k < gens; ++k) p.ideal.push_back(testing::random_monomial(rng, n, 4));
  const auto len = testing::uniform(rng, 0, 3);
  for (std::int64_t k = 0; k < len; ++k) p.sequence.push_back(testing::random_monomial(rng, n, 4));
  const auto& vocab = task_vocabulary();
  const auto tasks = testing::uniform(rng, 1, 4);
  for (std::int64_t k = 0; k < tasks; ++k)
    p.tasks.push_back(vocab[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<std::int64_t>(vocab.size()) - 1))]);
  p.box_radius = testing::uniform(rng, 0, 9);
  if (testing::uniform(rng, 0, 1)) p.options.split = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
  if (testing::uniform(rng, 0, 1)) p.options.seed = rng();
  if (testing::uniform(rng, 0, 1)) p.options.degree_bound = testing::uniform(rng, 1, 6);
  if (testing::uniform(rng, 0, 1)) {
    PolynomialTerms terms;
    terms.emplace_back(testing::uniform(rng, 1, 5), testing::random_monomial(rng, n, 3));
    terms.emplace_back(-testing::uniform(rng, 1, 5), Monomial(ExponentVector(n)));
    p.options.polynomial = terms;
  }
  return p;
}

}  // namespace

TEST_CASE("parse the non-regular pair problem") {
  const auto p = parse_problem(kNonRegularPair);
  CHECK(p.variables == std::vector<std::string>{"y1", "y2", "y3"});
  CHECK(p.field == Field::rational());
  CHECK(p.ideal.empty());
  CHECK(p.sequence == std::vector<Monomial>{Monomial{1, 1, 0}, Monomial{1, 0, 1}});
  CHECK(p.tasks == std::vector<std::string>{"local_cohomology", "theorem2"});
  CHECK(p.box_radius == 5);
}

TEST_CASE("monomial grammar") {
  const std::vector<std::string> vars = {"y1", "y2", "y3"};
  CHECK(parse_monomial("y1^2*y1", vars) == Monomial{3, 0, 0});
  CHECK(parse_monomial("y3 * y2^10", vars) == Monomial{0, 10, 1});
  CHECK(parse_monomial("1", vars) == Monomial{0, 0, 0});
  CHECK(format_monomial(Monomial{2, 0, 1}, vars) == "y1^2*y3");
  CHECK(format_monomial(Monomial{0, 0, 0}, vars) == "1");
  CHECK_THROWS_AS(parse_monomial("y1**y2", vars), ProblemError);
  CHECK_THROWS_AS(parse_monomial("", vars), ProblemError);
  CHECK_THROWS_AS(parse_monomial("y1^", vars), ProblemError);
  CHECK_THROWS_AS(parse_monomial("1*y1", vars), ProblemError);
  try {
    parse_monomial("y1*y4", vars);
    FAIL("expected an error");
  } catch (const ProblemError& e) {
    CHECK(e.column() == 4);
    CHECK(e.detail().find("unknown variable 'y4'") != std::string::npos);
  }
}

TEST_CASE("errors carry line and column") {
  const auto unknown = parse_error("{\"ring\":{\"variables\":[\"y1\",\"y2\",\"y3\"]},\n\"sequence\":[\"y4\"],\"tasks\":[]}");
  CHECK(unknown.line() == 2);
  CHECK(unknown.column() == 14);
  CHECK(unknown.detail().find("unknown variable") != std::string::npos);

  const auto syntax = parse_error("{\n  \"ring\": {\"variables\": [\"y1\"]}\n  \"tasks\": []\n}");
  CHECK(syntax.line() == 3);
  CHECK(syntax.detail().find("syntax error") != std::string::npos);

  const auto task = parse_error(R"({"ring":{"variables":["y1"]},"tasks":["local_cohomology","nope"]})");
  CHECK(task.line() == 1);
  CHECK(task.column() == 58);
  CHECK(task.detail() == "unknown task 'nope'");

  CHECK(parse_error(R"({"ring":{"variables":["y1","y1"]},"tasks":[]})").detail() == "duplicate variable 'y1'");
  CHECK(parse_error(R"({"ring":{"variables":["y1"]},"tasks":[],"extra":1})").detail() == "unknown key 'extra'");
  CHECK(parse_error(R"({"ring":{"variables":["y1"]},"tasks":[],"box_radius":-1})").detail().find("box_radius") !=
        std::string::npos);
  CHECK(parse_error(R"({"ring":{"variables":["y1"]},"sequence":["1"],"tasks":[]})").detail() ==
        "sequence items must not be 1");
  CHECK(parse_error(R"({"ring":{"variables":["y1"]},"tasks":[],"tasks":[]})").line() == 1);
  CHECK(parse_error("").line() == 1);
}

TEST_CASE("round trip on every shipped fixture") {
  const auto files = fixture_files();
  REQUIRE(files.size() >= 8);
  for (const auto& f : files) {
    CAPTURE(f.string());
    const auto p = parse_problem(read_file(f));
    const auto text = serialize_problem(p);
    CHECK(parse_problem(text) == p);
    CHECK(serialize_problem(parse_problem(text)) == text);
  }
}

TEST_CASE("round trip on random problems") {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_problem(rng);
    const auto text = serialize_problem(p);
    CAPTURE(text);
    CHECK(parse_problem(text) == p);
  }
}

TEST_CASE("malformed fixtures exit 2 with a location") {
  const auto files = fixture_files("malformed");
  REQUIRE(files.size() >= 5);
  for (const auto& f : files) {
    CAPTURE(f.string());
    const auto r = cli({"run", f.string()});
    CHECK(r.code == kExitParse);
    CHECK(r.out.empty());
    const std::string prefix = f.string() + ":";
    REQUIRE(r.err.starts_with(prefix));
    std::size_t line = 0, column = 0;
    CHECK(std::sscanf(r.err.c_str() + prefix.size(), "%zu:%zu: error:", &line, &column) == 2);
    CHECK(line >= 1);
    CHECK(column >= 1);
  }
}

TEST_CASE("exit codes of the run command") {
  const std::string dir = LCLAB_FIXTURE_DIR;
  CHECK(cli({"run", dir + "/non_regular_pair.json"}).code == kExitPass);
  CHECK(cli({"run", dir + "/unsaturated_pair.json", "--format", "md"}).code == kExitPass);
  const auto pre = cli({"run", dir + "/precondition_missing_split.json"});
  CHECK(pre.code == kExitPrecondition);
  const auto report = ReportJson::parse(pre.out);
  CHECK(report["status"] == "error");
  CHECK(report["tasks"][0]["error"]["kind"] == "precondition");
  CHECK(cli({"run", dir + "/does_not_exist.json"}).code == kExitParse);
  CHECK(cli({"run"}).code == kExitParse);
  CHECK(cli({"run", dir + "/non_regular_pair.json", "--format", "xml"}).code == kExitParse);
  CHECK(cli({"verify-paper", "--field", "p:4"}).code == kExitParse);
  CHECK(cli({"search-converse", "--n", "0", "--max-degree", "2", "--max-i", "1"}).code == kExitPrecondition);
  CHECK(cli({"search-converse", "--n", "2", "--max-degree", "2", "--max-i", "2"}).code == kExitPass);
}

TEST_CASE("pair fixtures through the runner") {
  const auto first = run_problem(parse_problem(read_file(std::string(LCLAB_FIXTURE_DIR) + "/non_regular_pair.json")));
  REQUIRE(first.exit_code == kExitPass);
  const auto& tasks = first.report["tasks"];
  CHECK(tasks[0]["indices"][2]["nonzero"] == true);
  CHECK(tasks[0]["cd"] == 2);
  CHECK(tasks[1]["saturated"] == true);
  CHECK(tasks[2]["regular"] == false);

  const auto second = run_problem(parse_problem(read_file(std::string(LCLAB_FIXTURE_DIR) + "/unsaturated_pair.json")));
  REQUIRE(second.exit_code == kExitPass);
  CHECK(second.report["tasks"][0]["saturated"] == false);
  CHECK(second.report["tasks"][0]["witness"]["exponent"] == ReportJson::array({0, 1}));
  CHECK(second.report["tasks"][1]["multiplier"] == "y1*y2");
  CHECK(second.report["tasks"][2]["indices"][2]["nonzero"] == false);
}

TEST_CASE("reports are byte-identical for identical seeds") {
  for (const auto& f : fixture_files()) {
    CAPTURE(f.string());
    const auto p = parse_problem(read_file(f));
    RunSettings parallel;
    parallel.seed = 17;
    RunSettings serial = parallel;
    serial.execution = Execution::Serial;
    const auto a = render_json(run_problem(p, parallel).report);
    CHECK(a == render_json(run_problem(p, parallel).report));
    CHECK(a == render_json(run_problem(p, serial).report));
  }
  VerifySettings s;
  s.seed = 42;
  const auto a = render_json(verify_paper(s).report);
  CHECK(a == render_json(verify_paper(s).report));
  s.execution = Execution::Serial;
  CHECK(a == render_json(verify_paper(s).report));
}

TEST_CASE("verify-paper passes for several seeds and fields") {
  for (std::uint64_t seed : {0ULL, 42ULL, 43ULL}) {
    VerifySettings s;
    s.seed = seed;
    const auto outcome = verify_paper(s);
    CAPTURE(outcome.report.dump());
    CHECK(outcome.exit_code == kExitPass);
    CHECK(outcome.report["checks"].size() == 11);
  }
  VerifySettings s;
  s.field = Field::prime(3);
  CHECK(verify_paper(s).exit_code == kExitPass);

  VerifySettings a, b;
  a.seed = 42;
  b.seed = 43;
  const auto ca = verify_paper(a).report["checks"][8]["details"];
  const auto cb = verify_paper(b).report["checks"][8]["details"];
  CHECK(ca["relevant"] != cb["relevant"]);
}

TEST_CASE("sign fault is reported with a witness degree") {
  const auto r = cli({"verify-paper", "--inject-sign-fault"});
  CHECK(r.code == kExitInternal);
  const auto report = ReportJson::parse(r.out);
  CHECK(report["status"] == "fail");
  bool found = false;
  for (const auto& c : report["checks"]) {
    if (c["name"] != "chamber_oracle_agreement") {
      CHECK(c["status"] == "pass");
      continue;
    }
    found = true;
    CHECK(c["status"] == "fail");
    CHECK(c["counterexample"].contains("degree"));
    const auto replay = parse_problem(c["counterexample"]["input"].dump());
    CHECK(replay.sequence.size() == 3);
  }
  CHECK(found);
}

TEST_CASE("markdown report") {
  const auto outcome = run_problem(parse_problem(kNonRegularPair));
  const auto md = render_markdown(outcome.report);
  CHECK(md.starts_with("# lclab run\n"));
  CHECK(md.find("| region | representative | dims |") != std::string::npos);
  CHECK(md.find("| local_cohomology | pass |") != std::string::npos);
  CHECK(md.find("\xE2\x80\x94") == std::string::npos);
  const auto verify = render_markdown(verify_paper().report);
  CHECK(verify.find("| subring_criterion | pass |") != std::string::npos);
}
