#include "lclab/monomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace lclab {

namespace {

void check_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("ambient variable counts differ");
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.exponent().total_degree(), db = b.exponent().total_degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

bool ExponentVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto v) { return v >= 0; });
}

bool ExponentVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto v) { return v == 0; });
}

std::int64_t ExponentVector::total_degree() const {
  std::int64_t d = 0;
  for (auto v : coords_) d += v;
  return d;
}

std::uint32_t ExponentVector::support() const {
  std::uint32_t mask = 0;
  for (std::size_t c = 0; c < coords_.size(); ++c)
    if (coords_[c] != 0) mask |= 1U << c;
  return mask;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  check_same_ambient(size(), other.size());
  for (std::size_t c = 0; c < coords_.size(); ++c)
    if (coords_[c] > other.coords_[c]) return false;
  return true;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector out = *this;
  for (auto& v : out.coords_) v = -v;
  return out;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t c = 0; c < coords_.size(); ++c) os << (c == 0 ? "" : ",") << coords_[c];
  os << ')';
  return os.str();
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  check_same_ambient(a.size(), b.size());
  ExponentVector out = a;
  for (std::size_t c = 0; c < a.size(); ++c) out[c] += b[c];
  return out;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) { return a + (-b); }

ExponentVector operator*(std::int64_t k, const ExponentVector& a) {
  ExponentVector out = a;
  for (std::size_t c = 0; c < a.size(); ++c) out[c] *= k;
  return out;
}

Monomial::Monomial(ExponentVector e) : exponent_(std::move(e)) {
  if (!exponent_.is_nonnegative()) throw std::invalid_argument("monomial exponents must be nonnegative");
}

Monomial operator*(const Monomial& a, const Monomial& b) { return Monomial(a.exponent_ + b.exponent_); }

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> generators) : n_(n) {
  for (const auto& g : generators) check_same_ambient(g.ambient(), n);
  generators_ = minimalize(std::move(generators));
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < generators_.size(); ++k)
    os << (k == 0 ? "" : ",") << generators_[k].exponent().to_string();
  os << ')';
  return os.str();
}

MonomialSequence::MonomialSequence(std::size_t n, std::vector<Monomial> items)
    : n_(n), items_(std::move(items)), matrix_(items_.size(), n) {
  if (items_.empty()) throw std::invalid_argument("a monomial sequence needs at least one item");
  if (items_.size() > 31) throw std::invalid_argument("monomial sequence too long");
  for (std::size_t j = 0; j < items_.size(); ++j) {
    check_same_ambient(items_[j].ambient(), n);
    if (items_[j].is_one()) throw std::invalid_argument("sequence items must not be the unit monomial");
    for (std::size_t c = 0; c < n; ++c) matrix_(j, c) = items_[j].exponent()[c];
  }
}

ExponentVector MonomialSequence::subset_degree(std::uint32_t subset) const {
  ExponentVector d(n_);
  for (std::size_t j = 0; j < items_.size(); ++j)
    if (subset & (1U << j)) d = d + items_[j].exponent();
  return d;
}

MonomialSequence MonomialSequence::concat(const MonomialSequence& tail) const {
  check_same_ambient(n_, tail.n_);
  auto all = items_;
  all.insert(all.end(), tail.items_.begin(), tail.items_.end());
  return MonomialSequence(n_, std::move(all));
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) {
  check_same_ambient(ideal.ambient(), u.ambient());
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return g.divides(u); });
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& w) {
  check_same_ambient(ideal.ambient(), w.ambient());
  const auto supp = w.support();
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    ExponentVector e = g.exponent();
    for (std::size_t c = 0; c < e.size(); ++c)
      if (supp & (1U << c)) e[c] = 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  check_same_ambient(ideal.ambient(), u.ambient());
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    ExponentVector e = g.exponent();
    for (std::size_t c = 0; c < e.size(); ++c) e[c] = std::max<std::int64_t>(0, e[c] - u.exponent()[c]);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a.ambient(), b.ambient());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    ExponentVector e = g.exponent();
    for (auto c = 0U; c < e.size(); ++c) e[c] = e[c] > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

int krull_dim(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  if (n > kMaxVariables) throw std::invalid_argument("krull_dim supports at most 12 variables");
  if (ideal.is_unit()) throw ZeroModuleError("zero module: the ideal is the unit ideal");
  // A coordinate subspace W survives iff no generator is supported inside W.
  int best = 0;
  for (std::uint32_t w = 0; w < (1U << n); ++w) {
    const int size = std::popcount(w);
    if (size <= best) continue;
    bool survives = std::none_of(ideal.generators().begin(), ideal.generators().end(),
                                 [&](const Monomial& g) { return (g.support() & ~w) == 0; });
    if (survives) best = size;
  }
  return best;
}

bool is_regular_sequence(const MonomialSequence& s, const MonomialIdeal& ideal) {
  check_same_ambient(s.ambient(), ideal.ambient());
  if (ideal.is_unit()) throw ZeroModuleError("zero module: the ideal is the unit ideal");
  MonomialIdeal current = ideal;
  for (const auto& x : s.items()) {
    if (colon(current, x) != current) return false;
    current = sum(current, MonomialIdeal(ideal.ambient(), {x}));
  }
  return !current.is_unit();
}

}  // namespace lclab
