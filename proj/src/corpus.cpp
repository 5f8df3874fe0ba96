#include "lclab/corpus.hpp"

#include <bit>
#include <random>

namespace lclab {

namespace {

// Draws by plain modulo so the corpora do not depend on the standard library's
// distribution implementations.
class Draw {
 public:
  Draw(std::uint64_t seed, std::uint64_t salt) : rng_(seed * 0x9e3779b97f4a7c15ULL ^ salt) {}

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Monomial monomial(std::size_t n, std::int64_t max_degree) {
    ExponentVector e(n);
    const auto degree = between(1, max_degree);
    for (std::int64_t k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(n) - 1))];
    return Monomial(e);
  }

  MonomialIdeal ideal(std::size_t n, const CorpusBounds& b) {
    std::vector<Monomial> gens;
    const auto count = between(0, static_cast<std::int64_t>(b.max_generators));
    for (std::int64_t k = 0; k < count; ++k) gens.push_back(monomial(n, b.max_degree));
    return MonomialIdeal(n, gens);
  }

  MonomialSequence sequence(std::size_t n, const CorpusBounds& b) {
    std::vector<Monomial> items;
    const auto len = between(1, static_cast<std::int64_t>(b.max_length));
    for (std::int64_t k = 0; k < len; ++k) items.push_back(monomial(n, b.max_degree));
    return MonomialSequence(n, items);
  }

  std::size_t variables(const CorpusBounds& b) {
    return static_cast<std::size_t>(between(1, static_cast<std::int64_t>(b.max_variables)));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<MonomialIdeal> ideal_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& bounds) {
  Draw draw(seed, 0x1dea1);
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    const auto n = draw.variables(bounds);
    auto ideal = draw.ideal(n, bounds);
    if (!ideal.is_unit()) out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<CorpusInstance> instance_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& bounds) {
  Draw draw(seed, 0x5e9);
  std::vector<CorpusInstance> out;
  while (out.size() < count) {
    const auto n = draw.variables(bounds);
    auto ideal = draw.ideal(n, bounds);
    auto seq = draw.sequence(n, bounds);
    if (!ideal.is_unit()) out.push_back({std::move(ideal), std::move(seq)});
  }
  return out;
}

std::vector<CorpusInstance> module_finite_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& bounds) {
  Draw draw(seed, 0xf1417e);
  std::vector<CorpusInstance> out;
  while (out.size() < count) {
    const auto n = draw.variables(bounds);
    auto seq = draw.sequence(n, bounds);
    auto gens = draw.ideal(n, bounds).generators();
    if (draw.between(0, 1) == 1) {
      std::uint32_t covered = 0;
      for (const auto& x : seq.items())
        if (x.exponent().total_degree() == x.exponent()[static_cast<std::size_t>(std::countr_zero(x.support()))])
          covered |= x.support();
      for (std::size_t c = 0; c < n; ++c) {
        if (covered & (1U << c)) continue;
        ExponentVector e(n);
        e[c] = draw.between(1, bounds.max_degree);
        gens.emplace_back(e);
      }
    }
    MonomialIdeal ideal(n, gens);
    if (!ideal.is_unit()) out.push_back({std::move(ideal), std::move(seq)});
  }
  return out;
}

std::vector<MonomialSequence> sequence_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& bounds) {
  Draw draw(seed, 0x5ec);
  std::vector<MonomialSequence> out;
  while (out.size() < count) out.push_back(draw.sequence(draw.variables(bounds), bounds));
  return out;
}

}  // namespace lclab
