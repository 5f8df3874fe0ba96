#include "lclab/cech.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "parallel.hpp"

namespace lclab {

namespace {

int insertion_sign(std::uint32_t subset, std::size_t j, SignConvention signs) {
  if (signs == SignConvention::Uniform) return 1;
  return std::popcount(subset & ((1U << j) - 1U)) % 2 == 0 ? 1 : -1;
}

std::vector<std::uint32_t> subsets_of_size(std::size_t length, std::size_t p,
                                           const std::vector<char>& pieces) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1U << length); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == p && pieces[mask]) out.push_back(mask);
  return out;
}

/// Differential between two levels of a complex whose pieces are 0/1-dimensional
/// and indexed by subsets; the entry is the sign exactly when both pieces are 1.
SparseMatrix subset_differential(std::size_t length, const std::vector<std::uint32_t>& source,
                                 const std::vector<std::uint32_t>& target, const Field& field,
                                 SignConvention signs) {
  std::vector<std::int64_t> row_of(std::size_t{1} << length, -1);
  for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r]] = static_cast<std::int64_t>(r);
  SparseMatrix d(field, target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    for (std::size_t j = 0; j < length; ++j) {
      if (source[c] & (1U << j)) continue;
      const auto r = row_of[source[c] | (1U << j)];
      if (r >= 0) d.set(static_cast<std::size_t>(r), c, insertion_sign(source[c], j, signs));
    }
  }
  return d;
}

DimVector cohomology_of_pieces(std::size_t length, const std::vector<char>& pieces, const Field& field,
                               SignConvention signs) {
  std::vector<std::vector<std::uint32_t>> levels(length + 1);
  for (std::size_t p = 0; p <= length; ++p) levels[p] = subsets_of_size(length, p, pieces);
  std::vector<std::int64_t> ranks(length + 1, 0);  // ranks[p] = rank of d^p : C^p -> C^{p+1}
  for (std::size_t p = 0; p < length; ++p) {
    if (levels[p].empty() || levels[p + 1].empty()) continue;
    ranks[p] = static_cast<std::int64_t>(rank(subset_differential(length, levels[p], levels[p + 1], field, signs)));
  }
  DimVector h(length + 1, 0);
  for (std::size_t p = 0; p <= length; ++p) {
    h[p] = static_cast<std::int64_t>(levels[p].size()) - ranks[p] - (p == 0 ? 0 : ranks[p - 1]);
  }
  return h;
}

}  // namespace

CechComplex::CechComplex(MonomialIdeal ideal, MonomialSequence sequence)
    : ideal_(std::move(ideal)), sequence_(std::move(sequence)) {
  if (ideal_.ambient() != sequence_.ambient()) throw std::invalid_argument("ambient variable counts differ");
  if (ideal_.is_unit()) throw ZeroModuleError("zero module: the ideal is the unit ideal");
  const std::size_t n = ambient();
  const std::size_t subsets = std::size_t{1} << length();
  supports_.resize(subsets);
  saturated_.resize(subsets);
  std::vector<std::set<std::int64_t>> thr(n, std::set<std::int64_t>{0});
  for (std::uint32_t s = 0; s < subsets; ++s) {
    supports_[s] = sequence_.subset_degree(s).support();
    const auto js = saturate(ideal_, Monomial(sequence_.subset_degree(s)));
    for (const auto& g : js.generators()) {
      saturated_[s].push_back(g.exponent());
      for (std::size_t c = 0; c < n; ++c) thr[c].insert(g.exponent()[c]);
    }
  }
  for (const auto& t : thr) thresholds_.emplace_back(t.begin(), t.end());
}

int CechComplex::localized_piece(std::uint32_t subset, const Degree& a) const {
  const std::uint32_t w = supports_[subset];
  for (std::size_t c = 0; c < a.size(); ++c)
    if (!(w & (1U << c)) && a[c] < 0) return 0;
  for (const auto& g : saturated_[subset]) {
    bool divides = true;
    for (std::size_t c = 0; c < a.size() && divides; ++c)
      if (!(w & (1U << c)) && g[c] > a[c]) divides = false;
    if (divides) return 0;
  }
  return 1;
}

std::vector<std::uint32_t> CechComplex::cochain_basis(std::size_t p, const Degree& a) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1U << length()); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == p && localized_piece(mask, a)) out.push_back(mask);
  return out;
}

SparseMatrix CechComplex::differential(std::size_t p, const Degree& a, const Field& field,
                                       SignConvention signs) const {
  return subset_differential(length(), cochain_basis(p, a), cochain_basis(p + 1, a), field, signs);
}

DimVector CechComplex::cohomology_at(const Degree& a, const Field& field, SignConvention signs) const {
  if (a.size() != ambient()) throw std::invalid_argument("degree has wrong length");
  std::vector<char> pieces(std::size_t{1} << length());
  for (std::uint32_t s = 0; s < pieces.size(); ++s) pieces[s] = static_cast<char>(localized_piece(s, a));
  return cohomology_of_pieces(length(), pieces, field, signs);
}

std::int64_t CechComplex::max_threshold_magnitude() const {
  std::int64_t m = 0;
  for (const auto& t : thresholds_)
    for (auto v : t) m = std::max(m, v < 0 ? -v : v);
  return m;
}

std::size_t ChamberDecomposition::locate(const Degree& a) const {
  std::size_t index = 0;
  for (std::size_t c = 0; c < thresholds.size(); ++c) {
    const auto& t = thresholds[c];
    const auto k = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), a[c]) - t.begin());
    index = index * (t.size() + 1) + k;
  }
  return index;
}

std::vector<Degree> box_degrees(std::size_t n, std::int64_t radius) {
  if (radius < 0) throw std::invalid_argument("box radius must be nonnegative");
  std::vector<Degree> out;
  Degree a(std::vector<std::int64_t>(n, -radius));
  for (;;) {
    out.push_back(a);
    std::size_t c = n;
    while (c > 0) {
      --c;
      if (a[c] < radius) {
        ++a[c];
        break;
      }
      a[c] = -radius;
      if (c == 0) return out;
    }
    if (n == 0) return out;
  }
}

int localized_piece(const MonomialIdeal& ideal, const MonomialSequence& s, std::uint32_t subset,
                    const Degree& a) {
  if (subset >= (1U << s.length())) throw std::invalid_argument("subset out of range");
  return CechComplex(ideal, s).localized_piece(subset, a);
}

DimVector cech_at_degree(const MonomialIdeal& ideal, const MonomialSequence& s, const Degree& a,
                         const Field& field) {
  return CechComplex(ideal, s).cohomology_at(a, field);
}

ChamberDecomposition chamber_decomposition(const MonomialIdeal& ideal, const MonomialSequence& s,
                                           const EngineOptions& options) {
  const CechComplex complex(ideal, s);
  ChamberDecomposition out;
  out.sequence_length = s.length();
  out.thresholds = complex.thresholds();

  std::size_t count = 1;
  for (const auto& t : out.thresholds) {
    if (count > options.chamber_cap / (t.size() + 1)) {
      throw InstanceTooLarge("instance too large: chamber count exceeds cap " +
                             std::to_string(options.chamber_cap));
    }
    count *= t.size() + 1;
  }
  if (count > options.chamber_cap) {
    throw InstanceTooLarge("instance too large: chamber count exceeds cap " + std::to_string(options.chamber_cap));
  }

  out.chambers.resize(count);
  detail::for_each_index(count, options.execution, [&](std::size_t index) {
    Chamber& ch = out.chambers[index];
    const std::size_t n = out.thresholds.size();
    ch.intervals.assign(n, 0);
    ch.representative = Degree(n);
    std::size_t rest = index;
    for (std::size_t c = n; c-- > 0;) {
      const auto& t = out.thresholds[c];
      const std::size_t k = rest % (t.size() + 1);
      rest /= t.size() + 1;
      ch.intervals[c] = k;
      ch.representative[c] = k == 0 ? t.front() - 1 : t[k - 1];
    }
    ch.dims = complex.cohomology_at(ch.representative, options.field, options.signs);
  });
  return out;
}

LocalCohomologyReport local_cohomology_report(const ChamberDecomposition& chambers) {
  LocalCohomologyReport report;
  report.chamber_count = chambers.chambers.size();
  for (std::size_t j = 0; j <= chambers.sequence_length; ++j) {
    CohomologyVerdict v;
    v.index = j;
    for (const auto& ch : chambers.chambers) {
      if (ch.dims[j] != 0) {
        v.nonzero = true;
        v.witness = ch.representative;
        break;
      }
    }
    if (v.nonzero) report.cd = static_cast<std::int64_t>(j);
    report.indices.push_back(std::move(v));
  }
  return report;
}

LocalCohomologyReport local_cohomology_report(const MonomialIdeal& ideal, const MonomialSequence& s,
                                              const EngineOptions& options) {
  return local_cohomology_report(chamber_decomposition(ideal, s, options));
}

CdVsDim cd_vs_dim(const MonomialIdeal& ideal, const EngineOptions& options) {
  const std::size_t n = ideal.ambient();
  if (n == 0) throw std::invalid_argument("cd_vs_dim needs at least one variable");
  std::vector<Monomial> vars;
  for (std::size_t c = 0; c < n; ++c) {
    ExponentVector e(n);
    e[c] = 1;
    vars.emplace_back(std::move(e));
  }
  const auto report = local_cohomology_report(ideal, MonomialSequence(n, std::move(vars)), options);
  CdVsDim out;
  out.dim = krull_dim(ideal);
  out.cd = report.cd.value_or(-1);
  out.equal = report.cd.has_value() && out.cd == out.dim;
  return out;
}

DimVector koszul_at_degree(const MonomialIdeal& ideal, const MonomialSequence& s, std::int64_t t,
                           const Degree& a, const Field& field) {
  if (t < 1) throw std::invalid_argument("Koszul power must be at least 1");
  if (ideal.ambient() != s.ambient() || a.size() != s.ambient())
    throw std::invalid_argument("ambient variable counts differ");
  if (ideal.is_unit()) throw ZeroModuleError("zero module: the ideal is the unit ideal");
  std::vector<char> pieces(std::size_t{1} << s.length());
  for (std::uint32_t mask = 0; mask < pieces.size(); ++mask) {
    const Degree b = a + t * s.subset_degree(mask);
    pieces[mask] = static_cast<char>(b.is_nonnegative() && !contains(ideal, Monomial(b)));
  }
  return cohomology_of_pieces(s.length(), pieces, field, SignConvention::Alternating);
}

bool koszul_limit_check(const MonomialIdeal& ideal, const MonomialSequence& s, std::int64_t radius,
                        const EngineOptions& options) {
  const CechComplex complex(ideal, s);
  const std::int64_t t0 = complex.max_threshold_magnitude() + radius + 1;
  const auto degrees = box_degrees(ideal.ambient(), radius);
  if (degrees.size() > options.box_cap) throw InstanceTooLarge("instance too large: box exceeds cap");
  std::vector<char> agree(degrees.size(), 0);
  detail::for_each_index(degrees.size(), options.execution, [&](std::size_t k) {
    const auto& a = degrees[k];
    const auto first = koszul_at_degree(ideal, s, t0, a, options.field);
    const auto second = koszul_at_degree(ideal, s, t0 + 1, a, options.field);
    if (first != second) {
      throw StabilizationFailure("stabilization failure: Koszul cohomology at " + a.to_string() +
                                 " changes between powers " + std::to_string(t0) + " and " +
                                 std::to_string(t0 + 1));
    }
    agree[k] = static_cast<char>(first == complex.cohomology_at(a, options.field, options.signs));
  });
  return std::all_of(agree.begin(), agree.end(), [](char v) { return v != 0; });
}

}  // namespace lclab
