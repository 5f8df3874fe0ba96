#include <algorithm>

#include "doctest.h"
#include "lclab/cech.hpp"
#include "random_instances.hpp"

using namespace lclab;

namespace {

MonomialSequence variables(std::size_t n) {
  std::vector<Monomial> items;
  for (std::size_t c = 0; c < n; ++c) {
    ExponentVector e(n);
    e[c] = 1;
    items.emplace_back(e);
  }
  return MonomialSequence(n, items);
}

bool all_negative(const Degree& a) {
  return std::all_of(a.coords().begin(), a.coords().end(), [](auto v) { return v < 0; });
}

EngineOptions serial() {
  EngineOptions o;
  o.execution = Execution::Serial;
  return o;
}

}  // namespace

TEST_CASE("localized pieces") {
  const MonomialIdeal zero(2);
  const MonomialSequence s(2, {{0, 1}});
  CHECK(localized_piece(zero, s, 0, Degree{1, 0}) == 1);
  CHECK(localized_piece(zero, s, 0, Degree{-1, 0}) == 0);
  CHECK(localized_piece(zero, s, 1, Degree{0, -5}) == 1);
  const MonomialIdeal y2(2, {{0, 1}});
  for (const auto& a : box_degrees(2, 2)) CHECK(localized_piece(y2, s, 1, a) == 0);
  CHECK_THROWS(localized_piece(zero, s, 2, Degree{0, 0}));
}

TEST_CASE("cech cohomology at single degrees") {
  const auto s2 = variables(2);
  CHECK(cech_at_degree(MonomialIdeal(2), s2, Degree{-1, -1}) == DimVector{0, 0, 1});
  CHECK(cech_at_degree(MonomialIdeal(2), s2, Degree{0, 0}) == DimVector{0, 0, 0});
  const MonomialSequence s(3, {{1, 1, 0}, {1, 0, 1}});
  CHECK(cech_at_degree(MonomialIdeal(3), s, Degree{-1, -1, -1})[2] == 1);
  CHECK(cech_at_degree(MonomialIdeal(3), s, Degree{-1, -1, -1}, Field::prime(2))[2] == 1);
  CHECK_THROWS_AS(cech_at_degree(MonomialIdeal::unit(2), s2, Degree{0, 0}), ZeroModuleError);
}

TEST_CASE("box degrees") {
  CHECK(box_degrees(2, 0) == std::vector<Degree>{Degree{0, 0}});
  const auto b = box_degrees(2, 1);
  CHECK(b.size() == 9);
  CHECK(b.front() == Degree{-1, -1});
  CHECK(b[1] == Degree{-1, 0});
  CHECK(b.back() == Degree{1, 1});
  CHECK(std::is_sorted(b.begin(), b.end()));
}

TEST_CASE("chamber decomposition examples") {
  SUBCASE("one variable") {
    const auto ch = chamber_decomposition(MonomialIdeal(1), variables(1));
    CHECK(ch.thresholds == std::vector<std::vector<std::int64_t>>{{0}});
    REQUIRE(ch.chambers.size() == 2);
    CHECK(ch.chambers[0].dims == DimVector{0, 1});
    CHECK(ch.chambers[1].dims == DimVector{0, 0});
    CHECK(ch.dims_at(Degree{-7}) == DimVector{0, 1});
    CHECK(ch.dims_at(Degree{0}) == DimVector{0, 0});
  }
  SUBCASE("two variables") {
    const auto ch = chamber_decomposition(MonomialIdeal(2), variables(2));
    for (const auto& c : ch.chambers) {
      CHECK(c.dims[0] == 0);
      CHECK(c.dims[1] == 0);
      CHECK(c.dims[2] == (all_negative(c.representative) ? 1 : 0));
    }
  }
  SUBCASE("quotient by the sequence itself") {
    const MonomialIdeal y(1, {{1}});
    const auto ch = chamber_decomposition(y, variables(1));
    CHECK(ch.dims_at(Degree{0}) == DimVector{1, 0});
    CHECK(ch.dims_at(Degree{1}) == DimVector{0, 0});
    CHECK(ch.dims_at(Degree{-1}) == DimVector{0, 0});
  }
  SUBCASE("cap") {
    EngineOptions o;
    o.chamber_cap = 3;
    CHECK_THROWS_AS(chamber_decomposition(MonomialIdeal(2), variables(2), o), InstanceTooLarge);
  }
}

TEST_CASE("local cohomology reports") {
  const auto r = local_cohomology_report(MonomialIdeal(3), MonomialSequence(3, {{1, 1, 0}, {1, 0, 1}}));
  CHECK(r.indices[2].nonzero);
  REQUIRE(r.cd);
  CHECK(*r.cd == 2);
  REQUIRE(r.indices[2].witness);
  CHECK(cech_at_degree(MonomialIdeal(3), MonomialSequence(3, {{1, 1, 0}, {1, 0, 1}}), *r.indices[2].witness)[2] >= 1);

  const auto r2 = local_cohomology_report(MonomialIdeal(2), MonomialSequence(2, {{1, 1}, {1, 2}}));
  CHECK_FALSE(r2.indices[2].nonzero);
  CHECK(r2.cd.value_or(-1) <= 1);

  const auto r3 = local_cohomology_report(MonomialIdeal(2, {{2, 0}}), MonomialSequence(2, {{1, 1}}));
  CHECK_FALSE(r3.indices[1].nonzero);
  CHECK(r3.indices[0].nonzero);
}

TEST_CASE("cd against dim examples") {
  auto check = [](const MonomialIdeal& i, std::int64_t expected) {
    const auto r = cd_vs_dim(i);
    CHECK(r.cd == expected);
    CHECK(r.dim == expected);
    CHECK(r.equal);
  };
  check(MonomialIdeal(2), 2);
  check(MonomialIdeal(2, {{1, 1}}), 1);
  check(MonomialIdeal(3, {{1, 1, 0}, {1, 0, 1}}), 2);
  check(MonomialIdeal(2, {{2, 0}, {0, 3}}), 0);
}

TEST_CASE("koszul cohomology examples") {
  const MonomialIdeal zero(1);
  const auto s = variables(1);
  // H^1 of y^2 on k[y] is k[y]/(y^2) shifted by -2: nonzero at a = -2, -1
  std::vector<std::int64_t> nonzero;
  for (std::int64_t a = -5; a <= 5; ++a) {
    const auto h = koszul_at_degree(zero, s, 2, Degree{a});
    CHECK(h[0] == 0);
    if (h[1] == 1) nonzero.push_back(a);
  }
  CHECK(nonzero == std::vector<std::int64_t>{-2, -1});
  CHECK_THROWS(koszul_at_degree(zero, s, 0, Degree{0}));

  // top Koszul cohomology is R/(I + (x^t)) shifted by -t*sum
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto ideal = testing::random_ideal(rng, n, 3, 3);
    if (ideal.is_unit()) continue;
    const auto seq = testing::random_sequence(rng, n, 3, 2);
    const auto t = testing::uniform(rng, 1, 3);
    std::vector<Monomial> powers = ideal.generators();
    for (const auto& x : seq.items()) powers.emplace_back(t * x.exponent());
    const MonomialIdeal quotient(n, powers);
    const auto shift = t * seq.subset_degree((1U << seq.length()) - 1U);
    for (const auto& a : box_degrees(n, 2)) {
      const auto h = koszul_at_degree(ideal, seq, t, a);
      const auto b = a + shift;
      CHECK(h[seq.length()] == (b.is_nonnegative() && !contains(quotient, Monomial(b)) ? 1 : 0));
    }
  }
}

TEST_CASE("koszul limit examples") {
  CHECK(koszul_limit_check(MonomialIdeal(1), variables(1), 3));
  CHECK(koszul_limit_check(MonomialIdeal(2), variables(2), 3));
  const MonomialIdeal y2(2, {{0, 1}});
  const MonomialSequence s(2, {{0, 1}});
  CHECK(koszul_limit_check(y2, s, 2));
  for (const auto& a : box_degrees(2, 2)) CHECK(cech_at_degree(y2, s, a)[1] == 0);
}

TEST_CASE("brute force box examples") {
  const auto t0 = brute_force_box(MonomialIdeal(2, {{1, 1}}), MonomialSequence(2, {{1, 0}}), 0);
  REQUIRE(t0.dims.size() == 1);
  CHECK(t0.dims.begin()->first == Degree{0, 0});

  const auto t = brute_force_box(MonomialIdeal(2), variables(2), 2);
  CHECK(t.dims.size() == 25);
  std::size_t top = 0;
  for (const auto& [a, d] : t.dims) {
    CHECK(d[0] == 0);
    CHECK(d[1] == 0);
    if (d[2] == 1) {
      ++top;
      CHECK(all_negative(a));
    }
  }
  CHECK(top == 4);

  EngineOptions o;
  o.box_cap = 10;
  CHECK_THROWS_AS(brute_force_box(MonomialIdeal(2), variables(2), 2, o), InstanceTooLarge);
}

TEST_CASE("chambers agree with the oracle on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const auto ideal = testing::random_ideal(rng, n, 4, 3);
    if (ideal.is_unit()) continue;
    const auto seq = testing::random_sequence(rng, n, 3, 3);
    const Field field = trial % 3 == 0 ? Field::prime(2) : Field::rational();
    EngineOptions o;
    o.field = field;
    const auto chambers = chamber_decomposition(ideal, seq, o);
    const auto box = brute_force_box(ideal, seq, n == 4 ? 2 : 3, o);
    for (const auto& [a, dims] : box.dims) {
      INFO("instance ", trial, " degree ", a.to_string());
      CHECK(chambers.dims_at(a) == dims);
    }
  }
}

TEST_CASE("serial and parallel execution agree") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto ideal = testing::random_ideal(rng, n, 3, 3);
    if (ideal.is_unit()) continue;
    const auto seq = testing::random_sequence(rng, n, 3, 2);
    const auto a = chamber_decomposition(ideal, seq, serial());
    const auto b = chamber_decomposition(ideal, seq);
    REQUIRE(a.chambers.size() == b.chambers.size());
    for (std::size_t k = 0; k < a.chambers.size(); ++k) {
      CHECK(a.chambers[k].representative == b.chambers[k].representative);
      CHECK(a.chambers[k].dims == b.chambers[k].dims);
    }
    CHECK(brute_force_box(ideal, seq, 2, serial()) == brute_force_box(ideal, seq, 2));
    CHECK(koszul_limit_check(ideal, seq, 1, serial()) == koszul_limit_check(ideal, seq, 1));
  }
}

TEST_CASE("nothing above the sequence length and regular sequences reach the top") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const auto ideal = testing::random_ideal(rng, n, 3, 3);
    if (ideal.is_unit()) continue;
    const auto seq = testing::random_sequence(rng, n, 3, 2);
    const auto report = local_cohomology_report(ideal, seq);
    CHECK(report.indices.size() == seq.length() + 1);
    if (report.cd) CHECK(*report.cd <= static_cast<std::int64_t>(seq.length()));
    for (const auto& a : box_degrees(n, 1)) {
      CHECK(koszul_at_degree(ideal, seq, 1, a).size() == seq.length() + 1);
    }
    if (krull_dim(ideal) < static_cast<std::int64_t>(seq.length())) CHECK_FALSE(report.indices.back().nonzero);
    if (is_regular_sequence(seq, ideal)) {
      CHECK(report.indices.back().nonzero);
      // depth sensitivity: Koszul cohomology below the length vanishes
      for (const auto& a : box_degrees(n, 2)) {
        const auto h = koszul_at_degree(ideal, seq, 1, a);
        for (std::size_t j = 0; j < seq.length(); ++j) CHECK(h[j] == 0);
      }
    }
  }
}

TEST_CASE("cd equals dim over several fields") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const auto ideal = testing::random_ideal(rng, n, 4, 3);
    if (ideal.is_unit()) continue;
    for (const auto& f : {Field::rational(), Field::prime(2), Field::prime(3)}) {
      EngineOptions o;
      o.field = f;
      CHECK(cd_vs_dim(ideal, o).equal);
    }
  }
}

TEST_CASE("the complex only sees the images of the sequence in the quotient") {
  // Items lying in I act as zero on R/I; swapping one for another element of I must
  // leave every differential unchanged.
  std::mt19937_64 rng(8);
  int exercised = 0;
  for (int trial = 0; trial < 200 && exercised < 40; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto ideal = testing::random_ideal(rng, n, 3, 2);
    if (ideal.is_unit() || ideal.is_zero()) continue;
    auto items = testing::random_sequence(rng, n, 3, 2).items();
    auto swapped = items;
    bool changed = false;
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (!contains(ideal, items[j])) continue;
      swapped[j] = items[j] * testing::random_monomial(rng, n, 2);
      changed = true;
    }
    if (!changed) {
      items[0] = ideal.generators()[0];
      swapped[0] = ideal.generators()[0] * testing::random_monomial(rng, n, 2);
    }
    ++exercised;
    const CechComplex a(ideal, MonomialSequence(n, items));
    const CechComplex b(ideal, MonomialSequence(n, swapped));
    for (const auto& deg : box_degrees(n, 2))
      for (std::size_t p = 0; p < items.size(); ++p)
        CHECK(a.differential(p, deg, Field::rational()) == b.differential(p, deg, Field::rational()));
  }
  CHECK(exercised == 40);
}

TEST_CASE("cohomology module handle") {
  const CechComplex complex(MonomialIdeal(3), MonomialSequence(3, {{1, 0, 0}, {0, 1, 0}}));
  const CohomologyModuleHandle h(complex, 2, Field::rational());
  CHECK(h.dim(Degree{-1, -1, 0}) == 1);
  CHECK(h.dim(Degree{-1, -1, -1}) == 0);
  CHECK(h.dim(Degree{0, -1, 4}) == 0);
  // y3 acts bijectively in nonnegative y3-degree; y1 kills the socle
  CHECK(rank(h.multiplication(ExponentVector{0, 0, 1}, Degree{-1, -1, 0})) == 1);
  CHECK(h.multiplication(ExponentVector{1, 0, 0}, Degree{-1, -1, 0}).rows() == 0);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto ideal = testing::random_ideal(rng, n, 2, 2);
    if (ideal.is_unit()) continue;
    const auto seq = testing::random_sequence(rng, n, 3, 2);
    const CechComplex c(ideal, seq);
    for (std::size_t q = 0; q <= seq.length(); ++q) {
      const CohomologyModuleHandle handle(c, q, Field::rational());
      const auto u = testing::random_monomial(rng, n, 1).exponent();
      const auto v = testing::random_monomial(rng, n, 1).exponent();
      for (const auto& a : box_degrees(n, 1)) {
        const auto uv = handle.multiplication(u + v, a);
        const auto composed = handle.multiplication(u, a + v);
        const auto first = handle.multiplication(v, a);
        // (u v) acting equals u after v
        for (std::size_t col = 0; col < first.cols(); ++col) {
          Vector e(first.cols(), FieldScalar::zero(Field::rational()));
          e[col] = FieldScalar::one(Field::rational());
          CHECK(multiply(uv, e) == multiply(composed, multiply(first, e)));
        }
      }
    }
  }
}

TEST_CASE("composite examples") {
  CHECK(composite_check(MonomialIdeal(3), MonomialSequence(3, {{1, 0, 0}, {0, 1, 0}}), {Monomial{0, 0, 1}}, 4));
  CHECK(composite_check(MonomialIdeal(1), variables(1), {}, 3));
  CHECK(composite_check(MonomialIdeal(2, {{1, 1}}), MonomialSequence(2, {{1, 0}}), {Monomial{0, 1}}, 4));
  // the fixed three-variable example is one-dimensional exactly below (-1,-1,-1)
  const auto concat = MonomialSequence(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  for (const auto& a : box_degrees(3, 2)) CHECK(cech_at_degree(MonomialIdeal(3), concat, a)[3] == (all_negative(a) ? 1 : 0));
}

TEST_CASE("composite on random systems of parameters") {
  std::mt19937_64 rng(45);
  int ran = 0;
  for (int trial = 0; trial < 200 && ran < 15; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    const auto ideal = testing::random_ideal(rng, n, 2, 3);
    if (ideal.is_unit()) continue;
    const auto seq = testing::random_sequence(rng, n, 3, 2);
    if (seq.length() < 2) continue;
    const auto split = static_cast<std::size_t>(testing::uniform(rng, 1, static_cast<std::int64_t>(seq.length()) - 1));
    const std::vector<Monomial> inner(seq.items().begin(), seq.items().begin() + static_cast<std::ptrdiff_t>(split));
    const std::vector<Monomial> outer(seq.items().begin() + static_cast<std::ptrdiff_t>(split), seq.items().end());
    ++ran;
    INFO("instance ", trial);
    CHECK(composite_check(ideal, MonomialSequence(n, inner), outer, 2));
  }
  CHECK(ran == 15);
}
