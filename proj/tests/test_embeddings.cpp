#include "imm5/embeddings.hpp"

#include "doctest.h"
#include "imm5/errors.hpp"
#include "imm5/fixtures.hpp"

using namespace imm5;

namespace {

const Gamma2Element kZero = Gamma2Element::zero(0);

SpinBoundarySignatures single(std::vector<Integer> sigs) {
  SpinBoundarySignatures s;
  s.per_coset[kZero] = std::move(sigs);
  return s;
}

}  // namespace

TEST_CASE("embedding_classes") {
  SUBCASE("S3") {
    const auto e = embedding_classes(homology_profile(fixtures::s3()), single({0}));
    CHECK(e.offsets_mod_24.at(kZero) == std::set<unsigned>{0});
    CHECK(e.describe(kZero) == "24Z");
  }
  SUBCASE("T3") {
    const auto e = embedding_classes(homology_profile(fixtures::t3()), t3_spin_boundary_signatures());
    CHECK(e.offsets_mod_24.at(kZero) == std::set<unsigned>{0, 12});
    CHECK(e.describe(kZero) == "12Z");
  }
  SUBCASE("signatures differing by 16 give the same offset") {
    const auto e = embedding_classes(homology_profile(fixtures::t3()), single({0, 16, -32}));
    CHECK(e.offsets_mod_24.at(kZero) == std::set<unsigned>{0});
  }
  SUBCASE("RP3 needs both cosets") {
    const auto h = homology_profile(fixtures::rp3());
    SpinBoundarySignatures s;
    s.per_coset[Gamma2Element::zero(1)] = {1};
    CHECK_THROWS_AS(embedding_classes(h, s), CosetUncovered);
    s.per_coset[Gamma2Element(Z2Vector{1})] = {-1};
    const auto e = embedding_classes(h, s);
    CHECK(e.offsets_mod_24.at(Gamma2Element::zero(1)) == std::set<unsigned>{0});
    CHECK(e.offsets_mod_24.at(Gamma2Element(Z2Vector{1})) == std::set<unsigned>{21});
    CHECK(e.describe(Gamma2Element(Z2Vector{1})) == "21 + 24Z");
  }
  SUBCASE("parity violation") {
    CHECK_THROWS_AS(embedding_classes(homology_profile(fixtures::t3()), single({1})), ParityViolation);
  }
  SUBCASE("empty coset entry") {
    CHECK_THROWS_AS(embedding_classes(homology_profile(fixtures::t3()), single({})), CosetUncovered);
  }
  SUBCASE("foreign key") {
    SpinBoundarySignatures s = single({0});
    s.per_coset[Gamma2Element(Z2Vector{1})] = {0};
    CHECK_THROWS_AS(embedding_classes(homology_profile(fixtures::t3()), s), InvalidRecord);
  }
}

TEST_CASE("is_embedding_class") {
  const auto t3 = embedding_classes(homology_profile(fixtures::t3()), t3_spin_boundary_signatures());
  const auto s3 = s3_embedding_classes();
  CHECK(is_embedding_class({kZero, 12}, t3));
  CHECK_FALSE(is_embedding_class({kZero, 12}, s3));
  CHECK(is_embedding_class({kZero, 0}, t3));
  CHECK(is_embedding_class({kZero, 0}, s3));
  CHECK_FALSE(is_embedding_class({kZero, 6}, t3));
  CHECK(is_embedding_class({kZero, -36}, t3));
  CHECK_THROWS_AS(is_embedding_class({Gamma2Element(Z2Vector{1}), 0}, t3), CosetUncovered);
}

TEST_CASE("embedding classes are closed under connected sum with S3 embeddings") {
  const auto t3 = embedding_classes(homology_profile(fixtures::t3()), t3_spin_boundary_signatures());
  for (long i = -48; i <= 48; ++i) {
    const bool base = is_embedding_class({kZero, i}, t3);
    CHECK(base == (i % 12 == 0));
    for (long k = -3; k <= 3; ++k) CHECK(is_embedding_class({kZero, i + 24 * k}, t3) == base);
  }
}

TEST_CASE("seifert_signature_criterion") {
  const auto t3 = homology_profile(fixtures::t3());
  CHECK(seifert_signature_criterion(0, 0, homology_profile(fixtures::s3())));
  CHECK_FALSE(seifert_signature_criterion(0, 8, t3));
  for (long s = -40; s <= 40; s += 8) CHECK(seifert_signature_criterion(s, s, t3));
  CHECK_THROWS_AS(seifert_signature_criterion(0, 0, homology_profile(fixtures::rp3())), HypothesisViolated);
}

TEST_CASE("rohlin_compatible and Novikov bookkeeping") {
  CHECK(rohlin_compatible(0, 16));
  CHECK_FALSE(rohlin_compatible(0, 8));
  CHECK(rohlin_compatible(8, 24));
  CHECK(rohlin_compatible(-8, 8));
  for (long v = -32; v <= 32; v += 4)
    for (long w = -32; w <= 32; w += 4) {
      CHECK(glued_signature(v, w) == v - w);
      CHECK(rohlin_compatible(v, w) == (glued_signature(v, w) % 16 == 0));
    }
}

TEST_CASE("embedding_invariant") {
  CHECK(embedding_invariant(8, homology_profile(fixtures::t3())) == 12);
  CHECK(embedding_invariant(1, homology_profile(fixtures::rp3())) == 0);
  CHECK_THROWS_AS(embedding_invariant(2, homology_profile(fixtures::rp3())), ParityViolation);
}

TEST_CASE("T3: the summand relating F0 and F8 is not embeddable") {
  const auto r = t3_summand_not_embeddable();
  CHECK(r.f0.i == 0);
  CHECK(r.f8.i == 12);
  CHECK(r.h.omega == 12);
  CHECK_FALSE(r.h_embeddable);
  CHECK(r.chain == "12 = 3/2*8 = i(F8) = i(F0 # h) = i(F0) + Omega(h) = 0 + 12 != 24k");
}

TEST_CASE("T3: E # h is always an embedding class") {
  for (long k = -10; k <= 10; ++k) {
    const auto row = t3_absorption(k);
    CHECK(row.i_e_sharp_h == 12 * (k + 1));
    CHECK(row.uses_f8 == (k % 2 == 0));
    CHECK(row.n == (k % 2 == 0 ? k / 2 : (k + 1) / 2));
    CHECK(row.candidate_is_embedding);
    CHECK(row.matched);
  }
}
