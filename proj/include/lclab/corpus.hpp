#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lclab/monomial.hpp"

namespace lclab {

/// Bounds of the seeded random corpora. Every monomial has total degree 1..max_degree.
struct CorpusBounds {
  std::size_t max_variables = 4;
  std::size_t max_generators = 4;
  std::int64_t max_degree = 3;
  std::size_t max_length = 3;
};

struct CorpusInstance {
  MonomialIdeal ideal;
  MonomialSequence sequence;
};

/// Proper monomial ideals (never the unit ideal), possibly zero.
std::vector<MonomialIdeal> ideal_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& bounds = {});

/// Pairs (I, s) with R/I nonzero.
std::vector<CorpusInstance> instance_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& bounds = {});

/// Like instance_corpus, but roughly half of the ideals receive pure powers of the
/// variables missed by the sequence so that R/I is often module-finite over k[s].
std::vector<CorpusInstance> module_finite_corpus(std::uint64_t seed, std::size_t count,
                                                 const CorpusBounds& bounds = {});

/// Sequences on the polynomial ring.
std::vector<MonomialSequence> sequence_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& bounds = {});

}  // namespace lclab
