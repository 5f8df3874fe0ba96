#include <algorithm>

#include "doctest.h"
#include "lclab/semigroup.hpp"
#include "random_instances.hpp"

using namespace lclab;

namespace {

// Every b in ZA ∩ N^n with coordinates up to the bound, tested directly in NA.
std::optional<ExponentVector> naive_gap(const IntegerMatrix& a, std::int64_t bound) {
  const std::size_t n = a.cols();
  ExponentVector b(n);
  for (;;) {
    if (lattice_membership(b, a) && !semigroup_membership(b, a)) return b;
    std::size_t c = n;
    while (c > 0 && b[c - 1] == bound) b[--c] = 0;
    if (c == 0) return std::nullopt;
    ++b[c - 1];
  }
}

IntegerMatrix random_exponents(std::mt19937_64& rng, std::size_t i, std::size_t n, std::int64_t max_degree) {
  IntegerMatrix a(i, n);
  for (std::size_t j = 0; j < i; ++j) {
    const auto m = testing::random_monomial(rng, n, max_degree);
    for (std::size_t c = 0; c < n; ++c) a(j, c) = m.exponent()[c];
  }
  return a;
}

}  // namespace

TEST_CASE("exponent rank") {
  CHECK(exponent_rank(IntegerMatrix{{1, 1}, {1, 2}}) == 2);
  CHECK(exponent_rank(IntegerMatrix{{1, 1, 0}, {2, 2, 0}}) == 1);
  CHECK(exponent_rank(IntegerMatrix{{1, 1, 0}, {1, 0, 1}}) == 2);
}

TEST_CASE("lattice membership") {
  CHECK(lattice_membership({0, 1}, IntegerMatrix{{1, 1}, {1, 2}}));
  CHECK_FALSE(lattice_membership({1, 0, 0}, IntegerMatrix{{1, 1, 0}, {1, 0, 1}}));
  CHECK(lattice_membership({2, 1, 1}, IntegerMatrix{{1, 1, 0}, {1, 0, 1}}));
  CHECK(lattice_membership({0, 0, 0}, IntegerMatrix{{1, 1, 0}, {1, 0, 1}}));
  CHECK_FALSE(lattice_membership({1, 0}, IntegerMatrix{{2, 0}}));
  CHECK(lattice_membership({-4, 0}, IntegerMatrix{{2, 0}}));
}

TEST_CASE("lattice membership matches integer combinations on random matrices") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto i = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto a = testing::random_integer_matrix(rng, i, n, -3, 3);
    const Lattice lattice(a);
    // combinations with small coefficients are members
    ExponentVector b(n);
    for (std::size_t j = 0; j < i; ++j) b = b + testing::uniform(rng, -2, 2) * ExponentVector(a.row(j));
    CHECK(lattice.contains(b));
    CHECK(lattice.contains(2 * b));
  }
}

TEST_CASE("semigroup membership") {
  const IntegerMatrix a{{1, 1}, {1, 2}};
  CHECK(semigroup_membership({2, 3}, a));
  CHECK_FALSE(semigroup_membership({0, 1}, a));
  CHECK(semigroup_membership({0, 0}, a));
  CHECK(semigroup_membership({4, 6}, a));
  CHECK_FALSE(semigroup_membership({1, 3}, a));
  CHECK_THROWS(semigroup_membership({-1, 0}, a));
}

TEST_CASE("saturation examples") {
  const auto r = saturation_check(IntegerMatrix{{1, 1}, {1, 2}});
  CHECK(r.rank == 2);
  CHECK_FALSE(r.saturated);
  REQUIRE(r.witness);
  CHECK(*r.witness == ExponentVector{0, 1});

  const auto s = saturation_check(IntegerMatrix{{1, 1, 0}, {1, 0, 1}});
  CHECK(s.saturated);
  CHECK(s.rank == 2);
  CHECK_FALSE(s.witness);

  const auto t = saturation_check(IntegerMatrix{{1, 2}});
  CHECK(t.saturated);
  CHECK(t.hilbert_basis == std::vector<ExponentVector>{{1, 2}});

  // k[y1^2, y1 y2, y2^2] is normal, the next two miss y1 y2 and y1
  CHECK(saturation_check(IntegerMatrix{{2, 0}, {1, 1}, {0, 2}}).saturated);
  CHECK_FALSE(saturation_check(IntegerMatrix{{2, 0}, {0, 2}, {3, 1}}).saturated);
  CHECK_FALSE(saturation_check(IntegerMatrix{{2}, {3}}).saturated);
  CHECK_THROWS_AS(saturation_check(IntegerMatrix{{1, 1}, {1, 2}}, 0), InstanceTooLarge);
}

TEST_CASE("saturation agrees with the naive oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto i = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const auto a = random_exponents(rng, i, n, 3);
    std::int64_t max_coord = 0;
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t c = 0; c < n; ++c) max_coord = std::max(max_coord, a(j, c));
    const auto report = saturation_check(a);
    const auto gap = naive_gap(a, 3 * max_coord);
    INFO("matrix ", a.to_string());
    CHECK(report.saturated == !gap.has_value());
    CHECK(report.saturated == !report.witness.has_value());
    if (report.witness) {
      CHECK(lattice_membership(*report.witness, a));
      CHECK_FALSE(semigroup_membership(*report.witness, a));
    }
    CHECK(report.rank <= std::min(i, n));
    for (const auto& h : report.hilbert_basis) CHECK(lattice_membership(h, a));
    if (report.saturated)
      for (const auto& h : report.hilbert_basis) CHECK(semigroup_membership(h, a));
  }
}

TEST_CASE("fraction field membership") {
  const IntegerMatrix a{{1, 1}, {1, 2}};
  const auto r = fraction_field_membership(Polynomial{{{1, Monomial{0, 1}}}}, a, 2);
  CHECK(r.verdict == FractionFieldVerdict::Yes);
  REQUIRE(r.multiplier);
  CHECK(*r.multiplier == Monomial{1, 1});
  CHECK(*r.multiplier_exponents == ExponentVector{1, 0});

  const auto x1 = fraction_field_membership(Polynomial{{{1, Monomial{1, 1}}}}, a, 1);
  CHECK(x1.verdict == FractionFieldVerdict::Yes);
  CHECK(x1.multiplier->is_one());

  const auto no = fraction_field_membership(Polynomial{{{1, Monomial{1, 0, 0}}}}, IntegerMatrix{{1, 1, 0}, {1, 0, 1}}, 3);
  CHECK(no.verdict == FractionFieldVerdict::NoWithinBound);
  CHECK_FALSE(no.multiplier);
  CHECK_THROWS(fraction_field_membership(Polynomial{}, a, 0));
}

TEST_CASE("fraction field hits stay inside the lattice") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    const auto i = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto a = random_exponents(rng, i, n, 2);
    Polynomial p;
    for (int k = 0; k < 2; ++k) p.terms.emplace_back(1, testing::random_monomial(rng, n, 3));
    const auto r = fraction_field_membership(p, a, 3);
    if (r.verdict != FractionFieldVerdict::Yes) continue;
    for (const auto& [c, m] : p.terms) CHECK(lattice_membership(m.exponent(), a));
  }
}

TEST_CASE("subring criterion examples") {
  const auto r = subring_criterion_check(MonomialSequence(3, {{1, 1, 0}, {1, 0, 1}}));
  CHECK(r.h_nonzero);
  CHECK(r.rank == 2);
  CHECK(r.saturated);
  CHECK(r.implication_holds);

  const auto q = subring_criterion_check(MonomialSequence(2, {{1, 1}, {1, 2}}));
  CHECK_FALSE(q.saturated);
  CHECK_FALSE(q.h_nonzero);
  CHECK(q.implication_holds);

  const auto v = subring_criterion_check(MonomialSequence(2, {{1, 0}, {0, 1}}));
  CHECK(v.h_nonzero);
  CHECK(v.saturated);
  CHECK(v.implication_holds);
}

TEST_CASE("subring criterion on random sequences") {
  std::mt19937_64 rng(500);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const auto seq = testing::random_sequence(rng, n, 3, 3);
    INFO("instance ", trial);
    CHECK(subring_criterion_check(seq).implication_holds);
  }
}

TEST_CASE("converse search") {
  const auto single = converse_search(3, 4, 1);
  CHECK(single.sequences.empty());
  CHECK(single.examined == monomials_up_to(3, 4).size());
  CHECK(converse_search(2, 0, 2).examined == 0);
  CHECK(monomials_up_to(2, 1) == std::vector<Monomial>{{0, 1}, {1, 0}});
  EngineOptions serial;
  serial.execution = Execution::Serial;
  const auto a = converse_search(2, 2, 2, serial);
  const auto b = converse_search(2, 2, 2);
  CHECK(a.examined == b.examined);
  CHECK(a.sequences.size() == b.sequences.size());
  CHECK_THROWS_AS(converse_search(3, 3, 3, {}, 10), InstanceTooLarge);
}

TEST_CASE("single monomials satisfy the converse") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& m : monomials_up_to(n, 4)) {
      const auto r = subring_criterion_check(MonomialSequence(n, {m}));
      CHECK(r.rank == 1);
      CHECK(r.saturated);
      CHECK(r.h_nonzero);
    }
  }
}
