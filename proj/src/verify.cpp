#include <algorithm>

#include "lclab/corpus.hpp"
#include "lclab/duality.hpp"
#include "lclab/report.hpp"
#include "lclab/semigroup.hpp"
#include "parallel.hpp"
#include "report_util.hpp"

namespace lclab {

namespace {

using detail::default_variables;
using detail::vector_json;

/// The instance as a problem document, so a counterexample can be replayed with `lclab run`.
ReportJson instance_json(const MonomialIdeal& ideal, const std::vector<Monomial>& sequence, const Field& field,
                         std::vector<std::string> tasks) {
  Problem p;
  p.variables = default_variables(ideal.ambient());
  p.field = field;
  p.ideal = ideal.generators();
  p.sequence = sequence;
  p.tasks = std::move(tasks);
  p.box_radius = 3;
  return ReportJson::parse(serialize_problem(p));
}

EngineOptions serial_options(const Field& field) {
  EngineOptions o;
  o.field = field;
  o.execution = Execution::Serial;
  return o;
}

/// Evaluates fn on every item (in parallel when asked) and keeps the first failure
/// in corpus order. fn returns a counterexample, or nullopt when the item passes.
template <class Item, class Fn>
void run_corpus(CheckResult& check, const std::vector<Item>& items, Execution execution, Fn fn) {
  std::vector<std::optional<ReportJson>> failures(items.size());
  detail::for_each_index(items.size(), execution, [&](std::size_t k) {
    try {
      failures[k] = fn(items[k]);
    } catch (const std::exception& e) {
      failures[k] = ReportJson{{"error", e.what()}};
    }
  });
  check.instances += items.size();
  std::size_t failed = 0;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!failures[k]) continue;
    ++failed;
    if (check.passed) {
      check.passed = false;
      ReportJson c = *failures[k];
      c["corpus_index"] = k;
      check.counterexample = c;
    }
  }
  check.details["failures"] = check.details.value("failures", std::size_t{0}) + failed;
}

}  // namespace

ReportJson check_to_json(const CheckResult& check) {
  ReportJson out;
  out["name"] = check.name;
  out["claim"] = check.claim;
  out["status"] = check.passed ? "pass" : "fail";
  out["instances"] = check.instances;
  out["details"] = check.details;
  if (check.counterexample) out["counterexample"] = *check.counterexample;
  return out;
}

CheckResult check_injective_hull(const std::vector<Field>& fields, std::int64_t radius, Execution execution) {
  CheckResult r;
  r.name = "injective_hull_support";
  r.claim = "For k[X_1..X_i] and the sequence X_1..X_i, H^j vanishes for j != i and H^i is one-dimensional "
            "exactly in the degrees with every coordinate <= -1, the graded form of k[X_1^-1..X_i^-1]";
  r.details["box_radius"] = radius;
  r.details["fields"] = ReportJson::array();
  for (const auto& f : fields) r.details["fields"].push_back(f.name());
  for (const auto& f : fields) {
    EngineOptions o;
    o.field = f;
    o.execution = execution;
    for (std::size_t i = 1; i <= 3; ++i) {
      ++r.instances;
      if (!check_injective_hull_support(i, radius, o) && r.passed) {
        r.passed = false;
        r.counterexample = ReportJson{{"i", i}, {"field", f.name()}};
      }
    }
  }
  return r;
}

CheckResult check_cd_equals_dim(std::uint64_t seed, std::size_t count, const std::vector<Field>& fields,
                                Execution execution) {
  CheckResult r;
  r.name = "cd_equals_dim";
  r.claim = "The cohomological dimension of R/I with respect to the maximal ideal equals dim R/I";
  r.details["corpus"] = {{"seed", seed}, {"size", count}};
  r.details["fields"] = ReportJson::array();
  for (const auto& f : fields) r.details["fields"].push_back(f.name());
  const auto corpus = ideal_corpus(seed, count);
  for (const auto& f : fields) {
    run_corpus(r, corpus, execution, [&](const MonomialIdeal& ideal) -> std::optional<ReportJson> {
      const auto v = cd_vs_dim(ideal, serial_options(f));
      if (v.equal) return std::nullopt;
      return ReportJson{{"input", instance_json(ideal, {}, f, {"cd_vs_dim"})}, {"cd", v.cd}, {"dim", v.dim}};
    });
  }
  return r;
}

CheckResult check_non_regular_pair() {
  CheckResult r;
  r.name = "non_regular_pair_fixture";
  r.claim = "For y1*y2, y1*y3 in k[y1,y2,y3]: not a regular sequence, yet H^2 is nonzero, cd = 2, the "
            "subring has dimension 2 and is saturated";
  r.instances = 1;
  const MonomialIdeal zero(3);
  const MonomialSequence s(3, {{1, 1, 0}, {1, 0, 1}});
  const bool regular = is_regular_sequence(s, zero);
  const auto lc = local_cohomology_report(zero, s);
  const auto sat = saturation_check(s.exponent_matrix());
  r.details["input"] = instance_json(zero, s.items(), Field::rational(), {"regular_sequence", "local_cohomology", "theorem2"});
  r.details["regular_sequence"] = regular;
  r.details["h2_nonzero"] = lc.indices[2].nonzero;
  r.details["h2_witness"] = lc.indices[2].witness ? vector_json(*lc.indices[2].witness) : ReportJson(nullptr);
  r.details["cd"] = lc.cd ? ReportJson(*lc.cd) : ReportJson("undefined");
  r.details["rank"] = sat.rank;
  r.details["saturated"] = sat.saturated;
  r.passed = !regular && lc.indices[2].nonzero && lc.cd == 2 && sat.rank == 2 && sat.saturated;
  if (!r.passed) r.counterexample = r.details;
  return r;
}

CheckResult check_unsaturated_pair() {
  CheckResult r;
  r.name = "unsaturated_pair_fixture";
  r.claim = "For y1*y2, y1*y2^2 in k[y1,y2]: y2 lies in R and in the fraction field of the subring but not "
            "in the subring, and H^2 vanishes as the subring criterion requires";
  r.instances = 1;
  const MonomialIdeal zero(2);
  const MonomialSequence s(2, {{1, 1}, {1, 2}});
  const auto a = s.exponent_matrix();
  const auto sat = saturation_check(a);
  const auto ff = fraction_field_membership(Polynomial{{{1, Monomial{0, 1}}}}, a, 2);
  const auto lc = local_cohomology_report(zero, s);
  const auto names = default_variables(2);
  r.details["input"] = instance_json(zero, s.items(), Field::rational(), {"saturation", "fraction_field", "local_cohomology"});
  r.details["saturated"] = sat.saturated;
  r.details["witness"] = sat.witness ? vector_json(*sat.witness) : ReportJson(nullptr);
  r.details["fraction_field_verdict"] = ff.verdict == FractionFieldVerdict::Yes ? "yes" : "no_within_bound";
  r.details["denominator"] = ff.multiplier ? ReportJson(format_monomial(*ff.multiplier, names)) : ReportJson(nullptr);
  r.details["h2_nonzero"] = lc.indices[2].nonzero;
  r.passed = !sat.saturated && sat.witness == ExponentVector{0, 1} && ff.verdict == FractionFieldVerdict::Yes &&
             ff.multiplier == Monomial{1, 1} && !lc.indices[2].nonzero;
  if (!r.passed) r.counterexample = r.details;
  return r;
}

CheckResult check_koszul_limit(std::uint64_t seed, std::size_t count, std::int64_t radius, const Field& field,
                               Execution execution) {
  CheckResult r;
  r.name = "koszul_direct_limit";
  r.claim = "Koszul cohomology of x_1^t..x_i^t on R/I stabilizes in t to the Čech cohomology at every degree";
  r.details["corpus"] = {{"seed", seed}, {"size", count}};
  r.details["box_radius"] = radius;
  run_corpus(r, instance_corpus(seed, count), execution, [&](const CorpusInstance& c) -> std::optional<ReportJson> {
    if (koszul_limit_check(c.ideal, c.sequence, radius, serial_options(field))) return std::nullopt;
    return ReportJson{{"input", instance_json(c.ideal, c.sequence.items(), field, {"koszul_limit"})}};
  });
  return r;
}

CheckResult check_chamber_oracle(std::uint64_t seed, std::size_t count, const EngineOptions& options) {
  CheckResult r;
  r.name = "chamber_oracle_agreement";
  r.claim = "The chamber decomposition and the brute-force box oracle give the same cohomology at every "
            "degree of [-3,3]^n";
  r.details["corpus"] = {{"seed", seed}, {"size", count}};
  r.details["sign_convention"] = options.signs == SignConvention::Alternating ? "alternating" : "uniform (fault injected)";
  EngineOptions inner = options;
  inner.execution = Execution::Serial;
  run_corpus(r, instance_corpus(seed, count), options.execution, [&](const CorpusInstance& c) -> std::optional<ReportJson> {
    const auto chambers = chamber_decomposition(c.ideal, c.sequence, inner);
    const auto box = brute_force_box(c.ideal, c.sequence, 3, inner);
    for (const auto& [a, dims] : box.dims) {
      const auto& expected = chambers.dims_at(a);
      if (expected == dims) continue;
      return ReportJson{{"input", instance_json(c.ideal, c.sequence.items(), options.field, {"local_cohomology"})},
                        {"degree", vector_json(a)},
                        {"chamber_dims", expected},
                        {"oracle_dims", dims}};
    }
    return std::nullopt;
  });
  return r;
}

CheckResult check_composite_fixtures(const Field& field) {
  CheckResult r;
  r.name = "composite_identity";
  r.claim = "H^d of the concatenated sequence equals H^{d-i} of the outer sequence applied to H^i of the "
            "inner sequence, degree by degree";
  EngineOptions o;
  o.field = field;
  struct Fixture {
    MonomialIdeal ideal;
    MonomialSequence inner;
    std::vector<Monomial> outer;
  };
  const std::vector<Fixture> fixtures = {
      {MonomialIdeal(3), MonomialSequence(3, {{1, 0, 0}, {0, 1, 0}}), {Monomial{0, 0, 1}}},
      {MonomialIdeal(2, {{1, 1}}), MonomialSequence(2, {{1, 0}}), {Monomial{0, 1}}},
      {MonomialIdeal(1), MonomialSequence(1, {{1}}), {}},
  };
  r.details["box_radius"] = 4;
  for (const auto& f : fixtures) {
    ++r.instances;
    bool ok = false;
    std::string error;
    try {
      ok = composite_check(f.ideal, f.inner, f.outer, 4, o);
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (!ok && r.passed) {
      r.passed = false;
      auto items = f.inner.items();
      items.insert(items.end(), f.outer.begin(), f.outer.end());
      r.counterexample = ReportJson{{"input", instance_json(f.ideal, items, field, {"composite"})},
                                    {"split", f.inner.length()}};
      if (!error.empty()) (*r.counterexample)["error"] = error;
    }
  }
  return r;
}

CheckResult check_top_nonvanishing(std::uint64_t seed, std::size_t count, const Field& field, Execution execution) {
  CheckResult r;
  r.name = "top_nonvanishing_equivalence";
  r.claim = "When R/I is module-finite over k[x_1..x_i]: H^i is nonzero iff dim k[x_1..x_i] = i and "
            "Hom(R/I, k[x_1..x_i]) is nonzero";
  r.details["corpus"] = {{"seed", seed}, {"size", count}};
  const auto corpus = module_finite_corpus(seed, count);
  std::vector<char> applicable(corpus.size(), 0);
  std::vector<std::size_t> index(corpus.size());
  for (std::size_t k = 0; k < index.size(); ++k) index[k] = k;
  run_corpus(r, index, execution, [&](std::size_t k) -> std::optional<ReportJson> {
    const auto& c = corpus[k];
    const auto t = top_nonvanishing_check(c.ideal, c.sequence, serial_options(field));
    applicable[k] = static_cast<char>(t.applicable);
    if (t.equivalence_holds) return std::nullopt;
    return ReportJson{{"input", instance_json(c.ideal, c.sequence.items(), field, {"lemma1"})},
                      {"h_nonzero", t.h_nonzero},
                      {"rank", t.rank},
                      {"hom_nonzero", t.hom_nonzero ? ReportJson(*t.hom_nonzero) : ReportJson(nullptr)}};
  });
  r.details["applicable"] = static_cast<std::size_t>(std::count(applicable.begin(), applicable.end(), 1));
  return r;
}

CheckResult check_dimension_bound(std::uint64_t seed, std::size_t count, const Field& field, Execution execution) {
  CheckResult r;
  r.name = "dimension_bound_vanishing";
  r.claim = "If dim R/I < i then H^i of any i elements on R/I vanishes";
  r.details["corpus"] = {{"seed", seed}, {"size", count}};
  const auto corpus = instance_corpus(seed ^ 0xd1aULL, count);
  std::vector<char> relevant(corpus.size(), 0);
  std::vector<std::size_t> index(corpus.size());
  for (std::size_t k = 0; k < index.size(); ++k) index[k] = k;
  run_corpus(r, index, execution, [&](std::size_t k) -> std::optional<ReportJson> {
    const auto& c = corpus[k];
    if (krull_dim(c.ideal) >= static_cast<std::int64_t>(c.sequence.length())) return std::nullopt;
    relevant[k] = 1;
    const auto lc = local_cohomology_report(c.ideal, c.sequence, serial_options(field));
    if (!lc.indices.back().nonzero) return std::nullopt;
    return ReportJson{{"input", instance_json(c.ideal, c.sequence.items(), field, {"local_cohomology"})},
                      {"witness", vector_json(*lc.indices.back().witness)}};
  });
  r.details["relevant"] = static_cast<std::size_t>(std::count(relevant.begin(), relevant.end(), 1));
  return r;
}

CheckResult check_subring_criterion(std::uint64_t seed, std::size_t count, const Field& field, Execution execution) {
  CheckResult r;
  r.name = "subring_criterion";
  r.claim = "On the polynomial ring R: if H^i of x_1..x_i is nonzero then dim k[x_1..x_i] = i and "
            "R ∩ Q(k[x_1..x_i]) = k[x_1..x_i]";
  r.details["corpus"] = {{"seed", seed}, {"size", count}};
  const auto corpus = sequence_corpus(seed, count);
  std::vector<char> nonzero(corpus.size(), 0);
  std::vector<std::size_t> index(corpus.size());
  for (std::size_t k = 0; k < index.size(); ++k) index[k] = k;
  run_corpus(r, index, execution, [&](std::size_t k) -> std::optional<ReportJson> {
    const auto& s = corpus[k];
    const auto t = subring_criterion_check(s, serial_options(field));
    nonzero[k] = static_cast<char>(t.h_nonzero);
    if (t.implication_holds) return std::nullopt;
    return ReportJson{{"input", instance_json(MonomialIdeal(s.ambient()), s.items(), field, {"theorem2"})},
                      {"rank", t.rank},
                      {"saturated", t.saturated}};
  });
  r.details["h_nonzero_instances"] = static_cast<std::size_t>(std::count(nonzero.begin(), nonzero.end(), 1));
  return r;
}

CheckResult check_single_monomial_converse(std::size_t max_n, std::int64_t max_degree, Execution execution) {
  CheckResult r;
  r.name = "single_monomial_converse";
  r.claim = "Every single nonunit monomial has rank 1, a saturated semigroup and nonzero H^1";
  r.details["max_variables"] = max_n;
  r.details["max_degree"] = max_degree;
  std::vector<MonomialSequence> all;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (const auto& m : monomials_up_to(n, max_degree)) all.emplace_back(n, std::vector<Monomial>{m});
  run_corpus(r, all, execution, [&](const MonomialSequence& s) -> std::optional<ReportJson> {
    const auto t = subring_criterion_check(s, serial_options(Field::rational()));
    if (t.rank == 1 && t.saturated && t.h_nonzero) return std::nullopt;
    return ReportJson{{"input", instance_json(MonomialIdeal(s.ambient()), s.items(), Field::rational(), {"theorem2"})}};
  });
  return r;
}

Outcome verify_paper(const VerifySettings& settings) {
  const Field& field = settings.field;
  const auto exec = settings.execution;
  std::vector<Field> hull_fields = {Field::rational(), Field::prime(2), Field::prime(3)};
  if (std::find(hull_fields.begin(), hull_fields.end(), field) == hull_fields.end()) hull_fields.push_back(field);
  const std::vector<Field> cd_fields = {field, field == Field::prime(2) ? Field::rational() : Field::prime(2)};

  EngineOptions oracle_options;
  oracle_options.field = field;
  oracle_options.execution = exec;
  if (settings.inject_sign_fault) oracle_options.signs = SignConvention::Uniform;

  std::vector<CheckResult> checks;
  checks.push_back(check_injective_hull(hull_fields, 3, exec));
  checks.push_back(check_cd_equals_dim(settings.seed, settings.ideal_corpus_size, cd_fields, exec));
  checks.push_back(check_non_regular_pair());
  checks.push_back(check_unsaturated_pair());
  checks.push_back(check_koszul_limit(settings.seed, settings.koszul_corpus_size, 3, field, exec));
  checks.push_back(check_chamber_oracle(settings.seed, settings.oracle_corpus_size, oracle_options));
  checks.push_back(check_composite_fixtures(field));
  checks.push_back(check_top_nonvanishing(settings.seed, settings.instance_corpus_size, field, exec));
  checks.push_back(check_dimension_bound(settings.seed, settings.instance_corpus_size, field, exec));
  checks.push_back(check_subring_criterion(settings.seed, settings.sequence_corpus_size, field, exec));
  checks.push_back(check_single_monomial_converse(3, 4, exec));

  Outcome outcome;
  auto& r = outcome.report;
  r["engine"] = detail::engine_json();
  r["command"] = "verify-paper";
  r["field"] = field.name();
  r["seed"] = settings.seed;
  r["fault_injection"] = settings.inject_sign_fault;
  r["checks"] = ReportJson::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    r["checks"].push_back(check_to_json(c));
    passed += c.passed ? 1 : 0;
  }
  r["summary"] = {{"passed", passed}, {"failed", checks.size() - passed}};
  outcome.exit_code = passed == checks.size() ? kExitPass : kExitInternal;
  r["status"] = outcome.exit_code == kExitPass ? "pass" : "fail";
  r["exit_code"] = outcome.exit_code;
  return outcome;
}

Outcome search_converse(std::size_t n, std::int64_t max_degree, std::size_t max_i, const Field& field) {
  Outcome outcome;
  auto& r = outcome.report;
  r["engine"] = detail::engine_json();
  r["command"] = "search-converse";
  r["field"] = field.name();
  r["n"] = n;
  r["max_degree"] = max_degree;
  r["max_i"] = max_i;
  try {
    if (n < 1 || n > kMaxVariables) throw std::invalid_argument("n must lie in [1, " + std::to_string(kMaxVariables) + "]");
    EngineOptions o;
    o.field = field;
    const auto found = converse_search(n, max_degree, max_i, o);
    const auto names = default_variables(n);
    r["examined"] = found.examined;
    r["candidates"] = ReportJson::array();
    for (std::size_t k = 0; k < found.sequences.size(); ++k) {
      ReportJson items = ReportJson::array();
      for (const auto& m : found.sequences[k].items()) items.push_back(format_monomial(m, names));
      r["candidates"].push_back({{"sequence", items},
                                 {"rank", found.reports[k].rank},
                                 {"saturated", found.reports[k].saturated},
                                 {"h_nonzero", found.reports[k].h_nonzero}});
    }
    r["note"] = "exploration only; candidates are data, not claims";
    r["status"] = "pass";
  } catch (const std::invalid_argument& e) {
    r["status"] = "error";
    r["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    outcome.exit_code = kExitPrecondition;
  } catch (const InstanceTooLarge& e) {
    r["status"] = "error";
    r["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    outcome.exit_code = kExitPrecondition;
  }
  r["exit_code"] = outcome.exit_code;
  return outcome;
}

}  // namespace lclab
