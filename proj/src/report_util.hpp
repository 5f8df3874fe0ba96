#pragma once

#include <string>
#include <vector>

#include "lclab/problem.hpp"
#include "lclab/report.hpp"

namespace lclab::detail {

inline ReportJson vector_json(const ExponentVector& v) { return ReportJson(v.coords()); }

inline ReportJson witness_json(const ExponentVector& v, const std::vector<std::string>& variables) {
  ReportJson out;
  out["exponent"] = vector_json(v);
  out["monomial"] = format_monomial(Monomial(v), variables);
  return out;
}

inline ReportJson engine_json() { return {{"name", "lclab"}, {"version", kEngineVersion}}; }

inline std::vector<std::string> default_variables(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t c = 1; c <= n; ++c) out.push_back("y" + std::to_string(c));
  return out;
}

}  // namespace lclab::detail
