#include "doctest.h"
#include "lclab/field.hpp"
#include "lclab/integer_matrix.hpp"
#include "lclab/linear_program.hpp"
#include "lclab/sparse_matrix.hpp"
#include "random_instances.hpp"

using namespace lclab;

TEST_CASE("field scalars stay canonical") {
  const Field q = Field::rational();
  FieldScalar a(q, mpq_class(6, -4));
  CHECK(a.to_string() == "-3/2");
  CHECK((a * FieldScalar(q, -2)).to_string() == "3");

  const Field f7 = Field::prime(7);
  FieldScalar b(f7, -1);
  CHECK(b.to_string() == "6");
  CHECK((b * b).to_string() == "1");
  CHECK((FieldScalar(f7, 3) / FieldScalar(f7, 5)).to_string() == "2");  // 5*2 = 10 = 3
  CHECK(FieldScalar(f7, mpq_class(1, 2)).to_string() == "4");

  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(2147483659U), std::invalid_argument);
  CHECK_THROWS_AS(FieldScalar(q, 1) / FieldScalar(q, 0), std::domain_error);
  CHECK(Field::parse("p:32003").characteristic() == 32003);
  CHECK(Field::parse("rational").is_rational());
  CHECK_THROWS(Field::parse("p:x"));
}

TEST_CASE("rank examples") {
  const Field q = Field::rational();
  CHECK(rank(SparseMatrix::from_integers(q, 2, 2, {1, 0, 0, 1})) == 2);
  CHECK(rank(SparseMatrix(q, 3, 4)) == 0);
  // all-ones 2x2 over F2: second row minus first vanishes
  CHECK(rank(SparseMatrix::from_integers(Field::prime(2), 2, 2, {1, 1, 1, 1})) == 1);
  // 2 vanishes mod 2
  CHECK(rank(SparseMatrix::from_integers(Field::prime(2), 2, 2, {1, 1, 1, -1})) == 1);
  CHECK(rank(SparseMatrix::from_integers(q, 2, 2, {1, 1, 1, -1})) == 2);
}

TEST_CASE("rank handles fractional entries and large integers") {
  const Field q = Field::rational();
  SparseMatrix m(q, 2, 2);
  m.set(0, 0, FieldScalar(q, mpq_class(1, 3)));
  m.set(0, 1, FieldScalar(q, mpq_class(2, 3)));
  m.set(1, 0, FieldScalar(q, 1));
  m.set(1, 1, FieldScalar(q, 2));
  CHECK(rank(m) == 1);

  // Entries near 2^62 push the int64 Bareiss path into overflow and onto GMP.
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK(rank(SparseMatrix::from_integers(q, 2, 2, {big, big - 1, big - 1, big - 2})) == 2);
  CHECK(rank(SparseMatrix::from_integers(q, 2, 2, {big, big / 2, 2, 1})) == 1);
}

TEST_CASE("kernel basis examples") {
  const Field q = Field::rational();
  CHECK(kernel_basis(SparseMatrix::from_integers(q, 2, 2, {1, 0, 0, 1})).empty());
  CHECK(kernel_basis(SparseMatrix(q, 2, 3)).size() == 3);
  const auto k = kernel_basis(SparseMatrix::from_integers(q, 1, 2, {1, 1}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!k[0][0].is_zero());
}

TEST_CASE("solve") {
  const Field q = Field::rational();
  const auto m = SparseMatrix::from_integers(q, 2, 2, {1, 1, 1, 2});
  const auto x = solve(m, {FieldScalar(q, 2), FieldScalar(q, 3)});
  REQUIRE(x);
  CHECK(multiply(m, *x) == Vector{FieldScalar(q, 2), FieldScalar(q, 3)});
  CHECK_FALSE(solve(SparseMatrix::from_integers(q, 2, 1, {1, 1}), {FieldScalar(q, 1), FieldScalar(q, 2)}));
}

TEST_CASE("rank properties on random sign matrices") {
  std::mt19937_64 rng(7);
  const Field q = Field::rational();
  const Field p = Field::prime(32003);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    const auto m = testing::random_sign_matrix(rng, q, rows, cols);
    const auto r = rank(m);
    CHECK(r == rank(m.transpose()));
    const auto kernel = kernel_basis(m);
    CHECK(r + kernel.size() == cols);
    for (const auto& v : kernel)
      for (const auto& e : multiply(m, v)) CHECK(e.is_zero());
    // same 0/±1 entries reduced mod a large prime
    std::vector<std::int64_t> data(rows * cols);
    for (const auto& [idx, v] : m.entries()) data[idx.first * cols + idx.second] = v.to_rational().get_num().get_si();
    CHECK(rank(SparseMatrix::from_integers(p, rows, cols, data)) == r);
  }
}

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntegerMatrix::identity(2)).invariant_factors == std::vector<std::int64_t>{1, 1});
  CHECK(smith_normal_form(IntegerMatrix{{1, 1}, {1, 2}}).invariant_factors == std::vector<std::int64_t>{1, 1});
  CHECK(smith_normal_form(IntegerMatrix{{2, 0}, {0, 0}}).invariant_factors == std::vector<std::int64_t>{2});
  CHECK(smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).invariant_factors ==
        std::vector<std::int64_t>{2, 6, 12});
}

TEST_CASE("smith transforms are unimodular and reproduce the diagonal") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const auto m = testing::random_integer_matrix(rng, rows, cols, -4, 4);
    const auto snf = smith_normal_form(m);
    CHECK(abs(snf.left.determinant()) == 1);
    CHECK(abs(snf.right.determinant()) == 1);
    const auto d = snf.left * m * snf.right;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const std::int64_t expected = (r == c && r < snf.invariant_factors.size()) ? snf.invariant_factors[r] : 0;
        CHECK(d(r, c) == expected);
      }
    for (std::size_t k = 0; k + 1 < snf.invariant_factors.size(); ++k) {
      CHECK(snf.invariant_factors[k] > 0);
      CHECK(snf.invariant_factors[k + 1] % snf.invariant_factors[k] == 0);
    }
    SparseMatrix asq(Field::rational(), rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) asq.set(r, c, m(r, c));
    CHECK(snf.invariant_factors.size() == rank(asq));
  }
}

TEST_CASE("exact simplex feasibility") {
  auto row = [](std::vector<long> coeffs, Relation rel, long rhs) {
    LinearConstraint c;
    for (auto v : coeffs) c.coefficients.emplace_back(v);
    c.relation = rel;
    c.rhs = rhs;
    return c;
  };
  // x + y = 1, x - y = 1 forces x = 1, y = 0
  auto sol = find_nonnegative_solution(2, {row({1, 1}, Relation::Equal, 1), row({1, -1}, Relation::Equal, 1)});
  REQUIRE(sol);
  CHECK((*sol)[0] == 1);
  CHECK((*sol)[1] == 0);
  // x - y = 1 together with y - x = 1 is infeasible
  CHECK_FALSE(find_nonnegative_solution(2, {row({1, -1}, Relation::Equal, 1), row({-1, 1}, Relation::Equal, 1)}));
  // x >= 3, x <= 2
  CHECK_FALSE(find_nonnegative_solution(1, {row({1}, Relation::GreaterEqual, 3), row({1}, Relation::LessEqual, 2)}));
  // 2x + 3y >= 7, x <= 1
  sol = find_nonnegative_solution(2, {row({2, 3}, Relation::GreaterEqual, 7), row({1, 0}, Relation::LessEqual, 1)});
  REQUIRE(sol);
  CHECK(2 * (*sol)[0] + 3 * (*sol)[1] >= 7);
  // negative right-hand side: -x <= -2
  sol = find_nonnegative_solution(1, {row({-1}, Relation::LessEqual, -2)});
  REQUIRE(sol);
  CHECK((*sol)[0] >= 2);
}
