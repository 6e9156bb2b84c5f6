#pragma once

// Signature coset calculus: which regular homotopy classes (wu, i) contain
// embeddings, given the signatures of spin 4-manifolds bounding M.
//
// An embedding with Seifert surface W has i = 3/2 (sigma(W) - alpha). Two spin
// fillings inducing the same spin structure have signatures congruent mod 16,
// which moves i by multiples of 24, and connected sum with embeddings of S^3
// realises every such shift. The embedding classes of a Wu component are
// therefore a union of residues mod 24.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "imm5/intlinalg.hpp"
#include "imm5/invariants.hpp"
#include "imm5/surgery.hpp"

namespace imm5 {

struct SpinBoundarySignatures {
  std::map<Gamma2Element, std::vector<Integer>> per_coset;
};

struct EmbeddingClassSet {
  std::map<Gamma2Element, std::set<unsigned>> offsets_mod_24;

  /// Human-readable description of one component's embedding classes,
  /// e.g. "12Z" or "{3, 9} + 24Z".
  std::string describe(const Gamma2Element& coset) const;
};

/// i of an embedding whose Seifert surface has signature sigma.
/// Throws ParityViolation if sigma and alpha have different parity.
Integer embedding_invariant(const Integer& sigma, const HomologyProfile& h);

/// Throws CosetUncovered if some element of Gamma_2 has no base signature,
/// ParityViolation if a base signature has the wrong parity, and InvalidRecord
/// for keys that are not elements of Gamma_2.
EmbeddingClassSet embedding_classes(const HomologyProfile& h, const SpinBoundarySignatures& sig);

bool is_embedding_class(const RegHomotopyClass& c, const EmbeddingClassSet& e);

/// For M with no 2-torsion in H^2: embeddings with Seifert signatures s1 and s2
/// are regularly homotopic iff s1 == s2. Throws HypothesisViolated if alpha > 0.
bool seifert_signature_criterion(const Integer& s1, const Integer& s2, const HomologyProfile& h);

/// Signatures of two spin fillings inducing the same spin structure agree mod 16.
bool rohlin_compatible(const Integer& s1, const Integer& s2);

/// sigma(V u -W) by Novikov additivity.
Integer glued_signature(const Integer& sigma_v, const Integer& sigma_w);

/// Embedding classes of S^3: 24Z in the single component.
EmbeddingClassSet s3_embedding_classes();

/// T^3 spin-bounds either D^2 x T^2 (signature 0) or a spin 4-manifold of
/// signature 8; Gamma_2(T^3) = 0, so both land in the single coset.
SpinBoundarySignatures t3_spin_boundary_signatures();

// Reproductions for T^3 ------------------------------------------------------

/// F0 and F8 are embeddings of T^3 with Seifert signatures 0 and 8, and
/// F0 # h ~ F8. The summand h is forced to have Omega = 12, which is not an
/// embedding class of S^3.
struct T3SummandResult {
  RegHomotopyClass f0;
  RegHomotopyClass f8;
  SmaleClass h;
  bool h_embeddable = true;
  std::string chain;
};

T3SummandResult t3_summand_not_embeddable();

/// For an embedding E of T^3 with Seifert signature 8k and any h with
/// Omega(h) = 12, E # h is regularly homotopic to F8 # e_n (k even) or
/// F0 # e_n (k odd), where Omega(e_n) = 24n.
struct T3AbsorptionRow {
  long k = 0;
  Integer i_e_sharp_h;
  long n = 0;
  bool uses_f8 = false;
  Integer i_candidate;
  bool candidate_is_embedding = false;
  bool matched = false;
};

T3AbsorptionRow t3_absorption(long k);

/// Omega of an embedding of S^3 with Seifert signature sigma, via the R^5
/// formula with no cusps.
SmaleClass s3_embedding_smale(const Integer& sigma);

}  // namespace imm5
