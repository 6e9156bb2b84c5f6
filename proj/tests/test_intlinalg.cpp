#include "imm5/intlinalg.hpp"

#include <random>

#include "doctest.h"
#include "imm5/errors.hpp"
#include "imm5/fixtures.hpp"
#include "imm5/verify.hpp"
#include "oracles.hpp"

using namespace imm5;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool chain_holds(const std::vector<Integer>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (sgn(d[i]) < 0) return false;
    if (sgn(d[i]) == 0 && sgn(d[i + 1]) != 0) return false;
    if (sgn(d[i]) != 0 && !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) return false;
  }
  return true;
}

void check_decomposition(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  CHECK(snf.u * a * snf.v == snf.s);
  CHECK(snf.s.is_diagonal());
  CHECK(abs(determinant(snf.u)) == 1);
  CHECK(abs(determinant(snf.v)) == 1);
  CHECK(chain_holds(snf.invariant_factors));
}

}  // namespace

TEST_CASE("IntSymMatrix rejects asymmetric input") {
  CHECK_THROWS_AS(IntSymMatrix({{0, 1}, {2, 0}}), AsymmetricMatrix);
  CHECK_THROWS_AS(IntSymMatrix(IntMatrix(2, 3)), AsymmetricMatrix);
  CHECK(IntSymMatrix{}.dim() == 0);
}

TEST_CASE("smith_normal_form examples") {
  SUBCASE("already diagonal") { CHECK(smith_normal_form(IntMatrix{{2}}).invariant_factors == ints({2})); }
  SUBCASE("hyperbolic times two") {
    const IntMatrix a{{0, 2}, {2, 0}};
    const auto oracle = testing::invariant_factors_2x2(a);
    REQUIRE(oracle == ints({2, 2}));
    CHECK(smith_normal_form(a).invariant_factors == oracle);
    check_decomposition(a);
  }
  SUBCASE("empty") {
    const auto snf = smith_normal_form(IntMatrix{});
    CHECK(snf.invariant_factors.empty());
  }
  SUBCASE("diag(4, 6)") {
    const IntMatrix a{{4, 0}, {0, 6}};
    REQUIRE(testing::invariant_factors_2x2(a) == ints({2, 12}));
    CHECK(smith_normal_form(a).invariant_factors == ints({2, 12}));
    check_decomposition(a);
  }
  SUBCASE("zero and identity") {
    CHECK(smith_normal_form(IntMatrix(2, 2)).invariant_factors == ints({0, 0}));
    CHECK(smith_normal_form(IntMatrix::identity(3)).invariant_factors == ints({1, 1, 1}));
  }
  SUBCASE("negative pivot is normalised") {
    CHECK(smith_normal_form(IntMatrix{{-3}}).invariant_factors == ints({3}));
  }
  SUBCASE("rectangular") {
    const IntMatrix a{{2, 4, 4}, {-6, 6, 12}};
    const auto snf = smith_normal_form(a);
    CHECK(snf.invariant_factors == invariant_factors_by_minors(a));
    CHECK(snf.u * a * snf.v == snf.s);
  }
}

TEST_CASE("smith_normal_form soundness on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix a = random_matrix(rng, n, 9);
    check_decomposition(a);
    CHECK(smith_normal_form(a).invariant_factors == invariant_factors_by_minors(a));
  }
}

TEST_CASE("cokernel is invariant under unimodular equivalence") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix a = random_matrix(rng, n, 5);
    const IntMatrix p = random_unimodular(rng, n).transposed();
    const IntMatrix q = random_unimodular(rng, n);
    CHECK(smith_normal_form(p * a * q).invariant_factors == smith_normal_form(a).invariant_factors);
  }
}

TEST_CASE("smith_normal_form handles entry growth exactly") {
  // Entries far beyond 64 bits.
  IntMatrix a(3, 3);
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
  a(0, 0) = big * 6;
  a(0, 1) = big * 4 + 2;
  a(1, 1) = big * 10;
  a(2, 0) = 3;
  a(2, 2) = big * big;
  check_decomposition(a);
  CHECK(smith_normal_form(a).invariant_factors == invariant_factors_by_minors(a));
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{}) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{0, 2, 1}, {1, 0, 3}, {4, 1, 0}}) == 25);
  CHECK(determinant(fixtures::e8_form().matrix()) == 1);
}

TEST_CASE("signature examples") {
  CHECK(signature(IntSymMatrix::diagonal({1, -1})) == 0);

  const IntSymMatrix a{{2, 1}, {1, 2}};
  REQUIRE(testing::signature_2x2(a) == 2);
  CHECK(signature(a) == 2);

  const auto e8 = fixtures::e8_form();
  REQUIRE(signature_by_root_signs(e8) == 8);
  CHECK(signature(e8) == 8);

  CHECK(signature(IntSymMatrix{}) == 0);
  CHECK(signature(IntSymMatrix::zero(3)) == 0);
  // Zero diagonal, nonzero off-diagonal: needs the e_k + e_j pivot.
  CHECK(signature(IntSymMatrix{{0, 1}, {1, 0}}) == 0);
  CHECK(signature(IntSymMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -3}}) == -1);
}

TEST_CASE("signature agrees with the 2x2 trace/determinant oracle") {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long d = -3; d <= 3; ++d) {
        const IntSymMatrix m{{a, b}, {b, d}};
        CHECK(signature(m) == testing::signature_2x2(m));
      }
}

TEST_CASE("signature laws against the root-sign oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto a = random_symmetric(rng, n, 4);
    const auto b = random_symmetric(rng, 1 + trial % 3, 4);
    const long sa = signature_by_root_signs(a);
    const long sb = signature_by_root_signs(b);
    CHECK(signature(a) == sa);
    CHECK(signature(a.direct_sum(b)) == sa + sb);
    CHECK(signature(a.negated()) == -sa);
    CHECK(signature(a.congruent(random_unimodular(rng, n))) == sa);
  }
}

TEST_CASE("solve_mod2 examples") {
  SUBCASE("zero matrix") {
    auto sol = solve_mod2(Z2Matrix{{0}}, {0});
    REQUIRE(sol);
    CHECK(sol->particular == Z2Vector{0});
    REQUIRE(sol->kernel_basis.size() == 1);
    CHECK(sol->kernel_basis[0] == Z2Vector{1});
  }
  SUBCASE("identity") {
    auto sol = solve_mod2(Z2Matrix{{1}}, {1});
    REQUIRE(sol);
    CHECK(sol->particular == Z2Vector{1});
    CHECK(sol->kernel_basis.empty());
  }
  SUBCASE("rank one 2x2") {
    const Z2Matrix m{{1, 1}, {1, 1}};
    const auto all = testing::enumerate_solutions_mod2(m, {1, 1});
    REQUIRE(all.size() == 2);
    auto sol = solve_mod2(m, {1, 1});
    REQUIRE(sol);
    CHECK(sol->particular == Z2Vector{1, 0});
    REQUIRE(sol->kernel_basis.size() == 1);
    CHECK(sol->kernel_basis[0] == Z2Vector{1, 1});
  }
  SUBCASE("inconsistent") { CHECK_FALSE(solve_mod2(Z2Matrix{{1, 1}, {1, 1}}, {1, 0})); }
  SUBCASE("dimension mismatch") { CHECK_THROWS_AS(solve_mod2(Z2Matrix{{1, 0}}, {1, 0}), DimensionMismatch); }
}

TEST_CASE("solve_mod2 matches exhaustive enumeration") {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution bit(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 7;
    const std::size_t cols = 1 + (trial * 3) % 10;
    Z2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, bit(rng));
    Z2Vector b(rows);
    for (auto& x : b) x = bit(rng);

    const auto all = testing::enumerate_solutions_mod2(m, b);
    const auto sol = solve_mod2(m, b);
    if (all.empty()) {
      CHECK_FALSE(sol);
      continue;
    }
    REQUIRE(sol);
    CHECK(m.multiply(sol->particular) == b);
    for (const auto& k : sol->kernel_basis) CHECK(m.multiply(k) == Z2Vector(rows, 0));
    CHECK(all.size() == (std::size_t{1} << sol->kernel_basis.size()));
    CHECK(cols - m.rank() == sol->kernel_basis.size());
  }
}

TEST_CASE("wide Z2 matrices cross word boundaries") {
  Z2Matrix m(2, 130);
  m.set(0, 0, true);
  m.set(0, 129, true);
  m.set(1, 64, true);
  CHECK(m.get(0, 129));
  CHECK(m.rank() == 2);
  const auto sol = solve_mod2(m, {1, 1});
  REQUIRE(sol);
  CHECK(m.multiply(sol->particular) == Z2Vector{1, 1});
  CHECK(sol->kernel_basis.size() == 128);
}
