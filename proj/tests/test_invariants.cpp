#include "imm5/invariants.hpp"

#include <random>

#include "doctest.h"
#include "imm5/errors.hpp"
#include "imm5/fixtures.hpp"

using namespace imm5;

namespace {

SeifertFillingR5 r5(long sigma, long cusps) { return {"", sigma, cusps, std::nullopt}; }
SeifertFillingR6 r6(long sigma, long t, long l) { return {"", sigma, t, l}; }
HomologyProfile profile_with_alpha(std::size_t alpha) {
  HomologyProfile h;
  h.alpha = h.gamma2_rank = alpha;
  return h;
}

const Gamma2Element kZero = Gamma2Element::zero(0);
const Gamma2Element kOne = Gamma2Element(Z2Vector{1});

}  // namespace

TEST_CASE("smale_via_seifert_r5") {
  CHECK(smale_via_seifert_r5(r5(0, 0)).omega == 0);
  CHECK(smale_via_seifert_r5(r5(16, 0)).omega == 24);
  CHECK(smale_via_seifert_r5(r5(0, 24)).omega == 12);
  CHECK_THROWS_AS(smale_via_seifert_r5(r5(1, 0)), ParityError);

  SeifertFillingR5 bad = r5(0, 4);
  bad.cusps_per_component = std::vector<Integer>{1, 1};
  CHECK_THROWS_AS(smale_via_seifert_r5(bad), InvalidRecord);
}

TEST_CASE("smale_via_seifert_r6") {
  CHECK(smale_via_seifert_r6(r6(0, 0, 0), {0}).omega == 0);
  CHECK(smale_via_seifert_r6(r6(16, 0, 0), {0}).omega == 24);
  CHECK(smale_via_seifert_r6(r6(0, 1, 0), {1}).omega == 2);
  // Same immersion through R^5 with cusps = 3t - 3l + L = 4.
  CHECK(smale_via_seifert_r5(r5(0, 4)).omega == 2);
  CHECK_THROWS_AS(smale_via_seifert_r6(r6(0, 1, 0), {0}), ParityError);
}

TEST_CASE("i_a") {
  CHECK(i_a(r5(0, 0), profile_with_alpha(0)) == 0);
  CHECK(i_a(r5(8, 0), homology_profile(fixtures::t3())) == 12);
  CHECK(i_a(r5(1, 0), homology_profile(fixtures::rp3())) == 0);
  CHECK_THROWS_AS(i_a(r5(0, 0), homology_profile(fixtures::rp3())), ParityError);
  CHECK_THROWS_AS(i_a(r5(0, 1), profile_with_alpha(0)), ParityError);
}

TEST_CASE("i_b") {
  CHECK(i_b(r6(0, 0, 0), {0}, profile_with_alpha(0)) == 0);
  CHECK(i_b(r6(8, 0, 0), {0}, profile_with_alpha(0)) == 12);
  CHECK(i_b(r6(0, 1, 1), {0}, profile_with_alpha(0)) == 0);
  CHECK_THROWS_AS(i_b(r6(0, 0, 0), {1}, profile_with_alpha(0)), ParityError);
}

TEST_CASE("integrality reduces to sigma = alpha mod 2 without singular data") {
  for (std::size_t alpha = 0; alpha < 4; ++alpha)
    for (long sigma = -9; sigma <= 9; ++sigma) {
      const bool consistent = ((sigma - static_cast<long>(alpha)) % 2) == 0;
      const auto h = profile_with_alpha(alpha);
      if (consistent) {
        CHECK_NOTHROW(i_a(r5(sigma, 0), h));
        CHECK_NOTHROW(i_b(r6(sigma, 0, 0), {0}, h));
      } else {
        CHECK_THROWS_AS(i_a(r5(sigma, 0), h), ParityError);
        CHECK_THROWS_AS(i_b(r6(sigma, 0, 0), {0}, h), ParityError);
      }
    }
}

TEST_CASE("fillings_coincide") {
  const auto h = profile_with_alpha(0);
  CHECK(fillings_coincide(r5(2, 4), r6(2, 1, 0), {1}, h));
  CHECK_FALSE(fillings_coincide(r5(2, 6), r6(2, 1, 1), {0}, h));
}

TEST_CASE("connected_sum_act") {
  CHECK(connected_sum_act({kZero, 0}, {24}) == RegHomotopyClass{kZero, 24});
  CHECK(connected_sum_act({kZero, 12}, {0}) == RegHomotopyClass{kZero, 12});
  CHECK(connected_sum_act({kOne, 5}, {-5}) == RegHomotopyClass{kOne, 0});
}

TEST_CASE("solve_for_summand") {
  CHECK(solve_for_summand({kZero, 0}, {kZero, 12}).omega == 12);
  CHECK(solve_for_summand({kOne, 7}, {kOne, 7}).omega == 0);
  CHECK_THROWS_AS(solve_for_summand({Gamma2Element::zero(1), 0}, {kOne, 0}), WuMismatch);
}

TEST_CASE("action laws") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    const RegHomotopyClass f{trial % 2 ? kOne : Gamma2Element::zero(1), d(rng)};
    const SmaleClass g1{d(rng)}, g2{d(rng)};
    CHECK(connected_sum_act(connected_sum_act(f, g1), g2) ==
          connected_sum_act(f, SmaleClass{g1.omega + g2.omega}));
    CHECK(connected_sum_act(f, {0}) == f);
    const auto target = connected_sum_act(f, g1);
    CHECK(solve_for_summand(f, target) == g1);
    CHECK(connected_sum_act(f, solve_for_summand(f, target)) == target);
  }
}

TEST_CASE("track_correction") {
  CHECK(track_correction(0, 0, 0));
  CHECK(track_correction(3, 0, 1));
  CHECK_FALSE(track_correction(1, 0, 1));
  CHECK(track_correction(-7, 2, -3));
}

TEST_CASE("embeddings of S3 land in 24Z exactly for signatures in 16Z") {
  for (long sigma = -64; sigma <= 64; sigma += 2) {
    const Integer omega = smale_via_seifert_r5(r5(sigma, 0)).omega;
    const bool in24 = mpz_divisible_ui_p(omega.get_mpz_t(), 24) != 0;
    CHECK(in24 == (sigma % 16 == 0));
  }
  for (long sigma = -63; sigma <= 63; sigma += 2) CHECK_THROWS_AS(smale_via_seifert_r5(r5(sigma, 0)), ParityError);
}
