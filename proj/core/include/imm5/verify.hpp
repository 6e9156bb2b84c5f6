#pragma once

// Validators for the closed-manifold identities and cusp-count consequences,
// and randomized oracle sweeps that cross-check the exact linear algebra.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "imm5/intlinalg.hpp"
#include "imm5/invariants.hpp"

namespace imm5 {

/// Generic map of a closed oriented 4-manifold into R^5.
struct ClosedMapRecordR5 {
  std::string id;
  Integer sigma;
  Integer cusps_algebraic;
  std::optional<std::vector<Integer>> cusps_per_component;
  bool is_spin = false;
};

/// Generic map of a closed oriented 4-manifold into R^6.
struct ClosedMapRecordR6 {
  std::string id;
  Integer sigma;
  Integer triple_points;
  Integer singular_linking;
};

/// Cusp counts on the two sides of a separating 3-manifold M inside the
/// ambient closed 4-manifold. The geometric hypotheses are declared flags.
struct PartitionRecord {
  std::string id;
  ClosedMapRecordR5 ambient;
  std::array<Integer, 2> part_cusps;
  bool null_homologous = false;
  bool disjoint_from_double_points = false;
};

/// cusps + 3 sigma == 0.
bool check_closed_r5(const ClosedMapRecordR5& r);
/// sigma - l + t == 0.
bool check_closed_r6(const ClosedMapRecordR6& r);
/// cusps == L (mod 3).
bool check_cusp_residue(const SeifertFillingR5& filling, const ImmersionDoubleData& d);
/// Every singular-surface component carries an even number of cusps.
/// Throws MissingData without a per-component list and HypothesisViolated
/// when the record is not spin.
bool check_spin_even_components(const ClosedMapRecordR5& r);
/// Both parts carry a multiple of 6 cusps. Throws HypothesisViolated when a
/// declared hypothesis is missing and InvalidRecord when the parts do not sum
/// to the ambient count.
bool check_partition_divisibility(const PartitionRecord& p);
/// Regularly homotopic embeddings have Seifert surfaces of equal signature.
bool check_equal_signatures_if_reg_homotopic(const Integer& s1, const Integer& s2);

// Independent oracles -------------------------------------------------------

/// Invariant factors from determinantal divisors: d_1 ... d_k is the gcd of
/// all k x k minors. Minors are expanded over permutations, so this is meant
/// for small matrices only (max(rows, cols) <= 7).
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a);

/// Coefficients c_0..c_n of det(x I - a), c_n = 1, by Faddeev-LeVerrier.
std::vector<Integer> characteristic_polynomial(const IntSymMatrix& a);

/// Signature from the characteristic polynomial by Descartes' rule of signs,
/// which is exact for real-rooted polynomials.
long signature_by_root_signs(const IntSymMatrix& a);

// Random sweeps ---------------------------------------------------------------

struct OracleReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_samples;

  bool passed() const { return failures == 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Square matrix with entries uniform in [-bound, bound].
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound);
/// Symmetric matrix with entries in [-bound, bound].
IntSymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long bound);
/// Symmetric, even diagonal, nonzero determinant; entries in [-5, 5].
IntSymMatrix random_even_nonsingular(std::mt19937_64& rng, std::size_t n);
/// Product of random elementary integer matrices.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, std::size_t steps = 8);

/// For even nonsingular q: size(q) == alpha(coker q) (mod 2).
OracleReport oracle_parity_lemma(std::size_t trials, std::size_t max_dim,
                                 std::uint64_t seed = kDefaultSeed);
/// smith_normal_form vs invariant_factors_by_minors, plus u a v = s checks.
OracleReport oracle_snf(std::size_t trials, std::size_t max_dim, std::uint64_t seed = kDefaultSeed);
/// signature vs signature_by_root_signs.
OracleReport oracle_signature(std::size_t trials, std::size_t max_dim,
                              std::uint64_t seed = kDefaultSeed);
/// Random consistent (sigma, cusps, t, l, L, alpha) tuples: i_a == i_b and the
/// cusp residue identity holds.
OracleReport property_ia_ib_coincidence(std::size_t trials, std::uint64_t seed = kDefaultSeed);
/// Pairs of fillings of one immersion: their difference satisfies the
/// closed-manifold identity, in R^5 and in R^6.
OracleReport property_gluing(std::size_t trials, std::uint64_t seed = kDefaultSeed);

}  // namespace imm5
