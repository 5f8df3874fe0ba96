// Brute-force box oracle. Shares nothing with CechComplex beyond the monomial
// primitives and the rank routine: saturations are recomputed for every degree,
// subsets are enumerated as sorted index lists, and signs come from the position
// of the inserted index in the target list.

#include <algorithm>

#include "lclab/cech.hpp"
#include "parallel.hpp"

namespace lclab {

namespace {

using IndexList = std::vector<std::size_t>;

void combinations(std::size_t length, std::size_t p, std::size_t start, IndexList& current,
                  std::vector<IndexList>& out) {
  if (current.size() == p) {
    out.push_back(current);
    return;
  }
  for (std::size_t j = start; j < length; ++j) {
    current.push_back(j);
    combinations(length, p, j + 1, current, out);
    current.pop_back();
  }
}

bool naive_piece(const MonomialIdeal& ideal, const MonomialSequence& s, const IndexList& subset,
                 const Degree& a) {
  Monomial denominator = Monomial::one(s.ambient());
  for (auto j : subset) denominator = denominator * s[j];
  const auto inverted = denominator.support();
  ExponentVector clipped(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (inverted & (1U << c)) continue;
    if (a[c] < 0) return false;
    clipped[c] = a[c];
  }
  return !contains(saturate(ideal, denominator), Monomial(clipped));
}

DimVector naive_cech(const MonomialIdeal& ideal, const MonomialSequence& s, const Degree& a,
                     const Field& field) {
  const std::size_t len = s.length();
  std::vector<std::vector<IndexList>> level(len + 1);
  for (std::size_t p = 0; p <= len; ++p) {
    std::vector<IndexList> all;
    IndexList scratch;
    combinations(len, p, 0, scratch, all);
    for (auto& subset : all)
      if (naive_piece(ideal, s, subset, a)) level[p].push_back(std::move(subset));
  }
  std::vector<std::int64_t> rk(len + 1, 0);
  for (std::size_t p = 0; p < len; ++p) {
    SparseMatrix d(field, level[p + 1].size(), level[p].size());
    for (std::size_t r = 0; r < level[p + 1].size(); ++r) {
      const auto& target = level[p + 1][r];
      for (std::size_t c = 0; c < level[p].size(); ++c) {
        const auto& source = level[p][c];
        if (!std::includes(target.begin(), target.end(), source.begin(), source.end())) continue;
        std::size_t pos = 0;
        while (pos < source.size() && source[pos] == target[pos]) ++pos;
        d.set(r, c, pos % 2 == 0 ? 1 : -1);
      }
    }
    rk[p] = static_cast<std::int64_t>(rank(d));
  }
  DimVector h(len + 1, 0);
  for (std::size_t p = 0; p <= len; ++p)
    h[p] = static_cast<std::int64_t>(level[p].size()) - rk[p] - (p == 0 ? 0 : rk[p - 1]);
  return h;
}

}  // namespace

GradedPieceTable brute_force_box(const MonomialIdeal& ideal, const MonomialSequence& s, std::int64_t radius,
                                 const EngineOptions& options) {
  if (ideal.ambient() != s.ambient()) throw std::invalid_argument("ambient variable counts differ");
  if (ideal.is_unit()) throw ZeroModuleError("zero module: the ideal is the unit ideal");
  if (radius < 0) throw std::invalid_argument("box radius must be nonnegative");
  double volume = 1;
  for (std::size_t c = 0; c < ideal.ambient(); ++c) volume *= static_cast<double>(2 * radius + 1);
  if (volume > static_cast<double>(options.box_cap)) {
    throw InstanceTooLarge("instance too large: box volume exceeds cap " + std::to_string(options.box_cap));
  }
  const auto degrees = box_degrees(ideal.ambient(), radius);
  std::vector<DimVector> dims(degrees.size());
  detail::for_each_index(degrees.size(), options.execution, [&](std::size_t k) {
    dims[k] = naive_cech(ideal, s, degrees[k], options.field);
  });
  GradedPieceTable table;
  table.sequence_length = s.length();
  for (std::size_t k = 0; k < degrees.size(); ++k) table.dims.emplace(degrees[k], std::move(dims[k]));
  return table;
}

}  // namespace lclab
