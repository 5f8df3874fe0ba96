#include <algorithm>

#include "lclab/duality.hpp"
#include "lclab/report.hpp"
#include "lclab/semigroup.hpp"
#include "report_util.hpp"

using lclab::detail::engine_json;
using lclab::detail::vector_json;
using lclab::detail::witness_json;

namespace lclab {

namespace {

/// A task result contradicts an invariant the engine must satisfy.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TaskContext {
 public:
  TaskContext(const Problem& problem, std::int64_t radius, Execution execution)
      : problem_(problem), radius_(radius) {
    options_.field = problem.field;
    options_.execution = execution;
    if (problem.options.chamber_cap) options_.chamber_cap = *problem.options.chamber_cap;
    if (problem.options.box_cap) options_.box_cap = *problem.options.box_cap;
  }

  std::size_t n() const { return problem_.variables.size(); }
  std::int64_t radius() const { return radius_; }
  const EngineOptions& options() const { return options_; }
  const Problem& problem() const { return problem_; }

  MonomialIdeal ideal() const { return MonomialIdeal(n(), problem_.ideal); }
  MonomialSequence sequence() const {
    if (problem_.sequence.empty()) throw std::invalid_argument("this task needs a nonempty sequence");
    return MonomialSequence(n(), problem_.sequence);
  }
  std::string name(const Monomial& m) const { return format_monomial(m, problem_.variables); }
  ReportJson names(const std::vector<Monomial>& ms) const {
    ReportJson out = ReportJson::array();
    for (const auto& m : ms) out.push_back(name(m));
    return out;
  }

 private:
  const Problem& problem_;
  std::int64_t radius_;
  EngineOptions options_;
};

std::string interval_text(const std::vector<std::int64_t>& t, std::size_t k) {
  if (k == 0) return "(-inf," + std::to_string(t.front()) + ")";
  if (k == t.size()) return "[" + std::to_string(t.back()) + ",inf)";
  return "[" + std::to_string(t[k - 1]) + "," + std::to_string(t[k]) + ")";
}

constexpr std::size_t kListedChambers = 256;

void local_cohomology_task(const TaskContext& ctx, ReportJson& out) {
  const auto ideal = ctx.ideal();
  const auto seq = ctx.sequence();
  const auto chambers = chamber_decomposition(ideal, seq, ctx.options());
  const auto report = local_cohomology_report(chambers);
  out["sequence_length"] = seq.length();
  out["indices"] = ReportJson::array();
  for (const auto& v : report.indices) {
    out["indices"].push_back({{"j", v.index},
                              {"nonzero", v.nonzero},
                              {"witness", v.witness ? vector_json(*v.witness) : ReportJson(nullptr)}});
  }
  out["cd"] = report.cd ? ReportJson(*report.cd) : ReportJson("undefined");
  out["chamber_count"] = report.chamber_count;
  out["thresholds"] = chambers.thresholds;
  if (chambers.chambers.size() <= kListedChambers) {
    out["chambers"] = ReportJson::array();
    for (const auto& ch : chambers.chambers) {
      std::string region;
      for (std::size_t c = 0; c < ch.intervals.size(); ++c) {
        if (c > 0) region += " x ";
        region += interval_text(chambers.thresholds[c], ch.intervals[c]);
      }
      out["chambers"].push_back(
          {{"region", region}, {"representative", vector_json(ch.representative)}, {"dims", ch.dims}});
    }
  } else {
    out["chambers"] = "omitted: more than " + std::to_string(kListedChambers) + " chambers";
  }

  double volume = 1;
  for (std::size_t c = 0; c < ctx.n(); ++c) volume *= static_cast<double>(2 * ctx.radius() + 1);
  if (volume > static_cast<double>(ctx.options().box_cap)) {
    out["oracle"] = {{"box_radius", ctx.radius()}, {"skipped", "box volume exceeds box_cap"}};
    return;
  }
  const auto box = brute_force_box(ideal, seq, ctx.radius(), ctx.options());
  for (const auto& [a, dims] : box.dims) {
    if (chambers.dims_at(a) != dims) {
      throw InvariantViolation("chamber decomposition disagrees with the box oracle at degree " + a.to_string());
    }
  }
  out["oracle"] = {{"box_radius", ctx.radius()}, {"degrees", box.dims.size()}, {"agrees", true}};
}

void cd_vs_dim_task(const TaskContext& ctx, ReportJson& out) {
  const auto r = cd_vs_dim(ctx.ideal(), ctx.options());
  out["cd"] = r.cd < 0 ? ReportJson("undefined") : ReportJson(r.cd);
  out["dim"] = r.dim;
  out["equal"] = r.equal;
  if (!r.equal) throw InvariantViolation("cohomological dimension differs from Krull dimension");
}

void koszul_limit_task(const TaskContext& ctx, ReportJson& out) {
  const bool agrees = koszul_limit_check(ctx.ideal(), ctx.sequence(), ctx.radius(), ctx.options());
  out["box_radius"] = ctx.radius();
  out["agrees"] = agrees;
  if (!agrees) throw InvariantViolation("stabilized Koszul cohomology differs from Čech cohomology");
}

void composite_task(const TaskContext& ctx, ReportJson& out) {
  const auto seq = ctx.sequence();
  const auto split = ctx.problem().options.split;
  if (!split || *split < 1 || *split > seq.length()) {
    throw std::invalid_argument("composite needs options.split with 1 <= split <= " + std::to_string(seq.length()));
  }
  const std::vector<Monomial> inner(seq.items().begin(), seq.items().begin() + static_cast<std::ptrdiff_t>(*split));
  const std::vector<Monomial> outer(seq.items().begin() + static_cast<std::ptrdiff_t>(*split), seq.items().end());
  const bool agrees = composite_check(ctx.ideal(), MonomialSequence(ctx.n(), inner), outer, ctx.radius(), ctx.options());
  out["split"] = *split;
  out["inner"] = ctx.names(inner);
  out["outer"] = ctx.names(outer);
  out["box_radius"] = ctx.radius();
  out["agrees"] = agrees;
  if (!agrees) throw InvariantViolation("top cohomology of the concatenation differs from the iterated cohomology");
}

void top_nonvanishing_task(const TaskContext& ctx, ReportJson& out) {
  const auto r = top_nonvanishing_check(ctx.ideal(), ctx.sequence(), ctx.options());
  out["applicable"] = r.applicable;
  out["h_nonzero"] = r.h_nonzero;
  out["rank"] = r.rank;
  out["rank_ok"] = r.rank_ok;
  out["hom_nonzero"] = r.hom_nonzero ? ReportJson(*r.hom_nonzero) : ReportJson(nullptr);
  out["equivalence_holds"] = r.equivalence_holds;
  if (!r.equivalence_holds) throw InvariantViolation("top nonvanishing equivalence fails");
}

void subring_criterion_task(const TaskContext& ctx, ReportJson& out) {
  const auto r = subring_criterion_check(ctx.sequence(), ctx.options());
  out["module"] = "polynomial ring";
  out["h_nonzero"] = r.h_nonzero;
  out["rank"] = r.rank;
  out["rank_ok"] = r.rank_ok;
  out["saturated"] = r.saturated;
  out["witness"] = r.witness ? witness_json(*r.witness, ctx.problem().variables) : ReportJson(nullptr);
  out["implication_holds"] = r.implication_holds;
  if (!r.implication_holds) throw InvariantViolation("nonvanishing top cohomology without a saturated subring");
}

void saturation_task(const TaskContext& ctx, ReportJson& out) {
  const auto a = ctx.sequence().exponent_matrix();
  const auto r = saturation_check(a, ctx.problem().options.hilbert_cap.value_or(10'000));
  out["rank"] = r.rank;
  out["subring_dimension"] = r.subring_dimension;
  out["saturated"] = r.saturated;
  out["witness"] = r.witness ? witness_json(*r.witness, ctx.problem().variables) : ReportJson(nullptr);
  out["extreme_rays"] = ReportJson::array();
  for (const auto& v : r.extreme_rays) out["extreme_rays"].push_back(vector_json(v));
  out["hilbert_basis"] = ReportJson::array();
  for (const auto& v : r.hilbert_basis) out["hilbert_basis"].push_back(vector_json(v));
  if (r.witness) {
    if (!lattice_membership(*r.witness, a) || semigroup_membership(*r.witness, a)) {
      throw InvariantViolation("saturation witness is not in the lattice minus the semigroup");
    }
    const auto ff = fraction_field_membership(Polynomial{{{1, Monomial(*r.witness)}}}, a, 8);
    out["witness_denominator"] = ff.multiplier ? ReportJson(ctx.name(*ff.multiplier)) : ReportJson("none within degree 8");
  }
}

void regular_sequence_task(const TaskContext& ctx, ReportJson& out) {
  out["regular"] = is_regular_sequence(ctx.sequence(), ctx.ideal());
}

void fraction_field_task(const TaskContext& ctx, ReportJson& out) {
  const auto& opt = ctx.problem().options;
  if (!opt.polynomial || opt.polynomial->empty()) throw std::invalid_argument("fraction_field needs options.polynomial");
  const auto a = ctx.sequence().exponent_matrix();
  const auto bound = opt.degree_bound.value_or(4);
  Polynomial p{*opt.polynomial};
  const auto r = fraction_field_membership(p, a, bound);
  out["polynomial"] = ReportJson::array();
  for (const auto& [c, m] : p.terms) out["polynomial"].push_back({{"coefficient", c}, {"monomial", ctx.name(m)}});
  out["degree_bound"] = bound;
  out["verdict"] = r.verdict == FractionFieldVerdict::Yes ? "yes" : "no_within_bound";
  out["multiplier_exponents"] = r.multiplier_exponents ? vector_json(*r.multiplier_exponents) : ReportJson(nullptr);
  out["multiplier"] = r.multiplier ? ReportJson(ctx.name(*r.multiplier)) : ReportJson(nullptr);
  if (r.verdict == FractionFieldVerdict::Yes) {
    for (const auto& [c, m] : p.terms) {
      if (!lattice_membership(m.exponent(), a)) {
        throw InvariantViolation("fraction field hit for a term outside the exponent lattice");
      }
    }
  }
}

void a2_task(const TaskContext& ctx, ReportJson& out) {
  const std::size_t i = ctx.problem().options.a2_index.value_or(ctx.n());
  if (i < 1 || i > 4) throw std::invalid_argument("a2_check needs 1 <= i <= 4; set options.a2_index");
  const bool holds = check_injective_hull_support(i, ctx.radius(), ctx.options());
  out["i"] = i;
  out["box_radius"] = ctx.radius();
  out["holds"] = holds;
  if (!holds) throw InvariantViolation("top local cohomology of the polynomial ring has the wrong support");
}

void converse_task(const TaskContext& ctx, ReportJson& out) {
  const auto& opt = ctx.problem().options;
  const auto max_degree = opt.max_degree.value_or(2);
  const auto max_i = opt.max_i.value_or(2);
  const auto r = converse_search(ctx.n(), max_degree, max_i, ctx.options());
  out["n"] = ctx.n();
  out["max_degree"] = max_degree;
  out["max_i"] = max_i;
  out["examined"] = r.examined;
  out["candidates"] = ReportJson::array();
  for (std::size_t k = 0; k < r.sequences.size(); ++k) {
    out["candidates"].push_back({{"sequence", ctx.names(r.sequences[k].items())},
                                 {"rank", r.reports[k].rank},
                                 {"saturated", r.reports[k].saturated},
                                 {"h_nonzero", r.reports[k].h_nonzero}});
  }
  out["note"] = "exploration only; candidates are data, not claims";
}

int run_task(const std::string& task, const TaskContext& ctx, ReportJson& out) {
  try {
    if (task == "local_cohomology") local_cohomology_task(ctx, out);
    else if (task == "cd_vs_dim") cd_vs_dim_task(ctx, out);
    else if (task == "koszul_limit") koszul_limit_task(ctx, out);
    else if (task == "composite") composite_task(ctx, out);
    else if (task == "lemma1") top_nonvanishing_task(ctx, out);
    else if (task == "theorem2") subring_criterion_task(ctx, out);
    else if (task == "saturation") saturation_task(ctx, out);
    else if (task == "regular_sequence") regular_sequence_task(ctx, out);
    else if (task == "fraction_field") fraction_field_task(ctx, out);
    else if (task == "a2_check") a2_task(ctx, out);
    else if (task == "converse_search") converse_task(ctx, out);
    else throw std::logic_error("task '" + task + "' has no runner");
    out["status"] = "pass";
    return kExitPass;
  } catch (const InvariantViolation& e) {
    out["status"] = "fail";
    out["error"] = {{"kind", "internal_consistency"}, {"message", e.what()}};
    return kExitInternal;
  } catch (const StabilizationFailure& e) {
    out["status"] = "fail";
    out["error"] = {{"kind", "internal_consistency"}, {"message", e.what()}};
    return kExitInternal;
  } catch (const InstanceTooLarge& e) {
    out["status"] = "error";
    out["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    out["status"] = "error";
    out["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    return kExitPrecondition;
  } catch (const std::out_of_range& e) {
    out["status"] = "error";
    out["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    return kExitPrecondition;
  } catch (const std::exception& e) {
    out["status"] = "fail";
    out["error"] = {{"kind", "internal_consistency"}, {"message", e.what()}};
    return kExitInternal;
  }
}

}  // namespace

Outcome run_problem(const Problem& problem, const RunSettings& settings) {
  const std::int64_t radius = settings.box_radius.value_or(problem.box_radius);
  if (radius < 0) throw std::invalid_argument("box radius must be nonnegative");
  const std::uint64_t seed = settings.seed.value_or(problem.options.seed.value_or(0));
  const TaskContext ctx(problem, radius, settings.execution);

  Outcome outcome;
  auto& r = outcome.report;
  r["engine"] = engine_json();
  r["command"] = "run";
  r["field"] = problem.field.name();
  r["seed"] = seed;
  r["box_radius"] = radius;
  r["problem"] = ReportJson::parse(serialize_problem(problem));
  r["tasks"] = ReportJson::array();
  int code = kExitPass;
  for (const auto& task : problem.tasks) {
    ReportJson out;
    out["task"] = task;
    out["status"] = nullptr;
    const int c = run_task(task, ctx, out);
    r["tasks"].push_back(std::move(out));
    code = std::max(code, c);
  }
  r["status"] = code == kExitPass ? "pass" : code == kExitPrecondition ? "error" : "fail";
  r["exit_code"] = code;
  outcome.exit_code = code;
  return outcome;
}

}  // namespace lclab
