#include "imm5/embeddings.hpp"

#include <numeric>
#include <sstream>

#include "imm5/errors.hpp"
#include "imm5/fixtures.hpp"

namespace imm5 {

namespace {

unsigned mod24(const Integer& x) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), 24);
  return static_cast<unsigned>(r.get_ui());
}

}  // namespace

std::string EmbeddingClassSet::describe(const Gamma2Element& coset) const {
  auto it = offsets_mod_24.find(coset);
  if (it == offsets_mod_24.end() || it->second.empty()) return "{}";
  const auto& offs = it->second;

  // Smallest step d with offs a full coset of dZ/24Z.
  unsigned step = 24;
  const unsigned base = *offs.begin();
  for (unsigned o : offs) step = std::gcd(step, o - base);
  if (offs.size() == 24 / step) {
    std::ostringstream out;
    if (base != 0) out << base << " + ";
    if (step != 1) out << step;
    out << "Z";
    return out.str();
  }
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (unsigned o : offs) {
    out << (first ? "" : ", ") << o;
    first = false;
  }
  out << "} + 24Z";
  return out.str();
}

Integer embedding_invariant(const Integer& sigma, const HomologyProfile& h) {
  const Integer diff = sigma - static_cast<unsigned long>(h.alpha);
  if (mpz_odd_p(diff.get_mpz_t()))
    throw ParityViolation("signature " + sigma.get_str() + " and alpha " + std::to_string(h.alpha) +
                          " have different parity");
  return 3 * diff / 2;
}

EmbeddingClassSet embedding_classes(const HomologyProfile& h, const SpinBoundarySignatures& sig) {
  for (const auto& [coset, _] : sig.per_coset)
    if (coset.rank() != h.gamma2_rank)
      throw InvalidRecord("coset key '" + coset.to_string() + "' is not an element of Gamma_2");

  EmbeddingClassSet out;
  for (const auto& c : gamma2_elements(h)) {
    auto it = sig.per_coset.find(c);
    if (it == sig.per_coset.end() || it->second.empty())
      throw CosetUncovered("no spin-boundary signature given for Wu coset " + c.to_string());
    auto& offs = out.offsets_mod_24[c];
    for (const auto& s0 : it->second) offs.insert(mod24(embedding_invariant(s0, h)));
  }
  return out;
}

bool is_embedding_class(const RegHomotopyClass& c, const EmbeddingClassSet& e) {
  auto it = e.offsets_mod_24.find(c.wu);
  if (it == e.offsets_mod_24.end())
    throw CosetUncovered("embedding data does not cover Wu coset " + c.wu.to_string());
  return it->second.count(mod24(c.i)) != 0;
}

bool seifert_signature_criterion(const Integer& s1, const Integer& s2, const HomologyProfile& h) {
  if (h.alpha != 0)
    throw HypothesisViolated("H^2 has 2-torsion (alpha = " + std::to_string(h.alpha) + ")");
  return s1 == s2;
}

bool rohlin_compatible(const Integer& s1, const Integer& s2) {
  const Integer d = s1 - s2;
  return mpz_divisible_ui_p(d.get_mpz_t(), 16) != 0;
}

Integer glued_signature(const Integer& sigma_v, const Integer& sigma_w) { return sigma_v - sigma_w; }

EmbeddingClassSet s3_embedding_classes() {
  SpinBoundarySignatures sig;
  sig.per_coset[Gamma2Element::zero(0)] = {Integer(0)};
  return embedding_classes(homology_profile(fixtures::s3()), sig);
}

SpinBoundarySignatures t3_spin_boundary_signatures() {
  SpinBoundarySignatures sig;
  sig.per_coset[Gamma2Element::zero(0)] = {Integer(0), Integer(8)};
  return sig;
}

SmaleClass s3_embedding_smale(const Integer& sigma) {
  return smale_via_seifert_r5(SeifertFillingR5{"", sigma, 0, std::nullopt});
}

T3SummandResult t3_summand_not_embeddable() {
  const auto h = homology_profile(fixtures::t3());
  const auto zero = Gamma2Element::zero(h.gamma2_rank);

  T3SummandResult r;
  r.f0 = {zero, i_a(SeifertFillingR5{"W_F0", 0, 0, std::nullopt}, h)};
  r.f8 = {zero, i_a(SeifertFillingR5{"W_F8", 8, 0, std::nullopt}, h)};
  r.h = solve_for_summand(r.f0, r.f8);
  r.h_embeddable = is_embedding_class(RegHomotopyClass{Gamma2Element::zero(0), r.h.omega},
                                      s3_embedding_classes());

  std::ostringstream chain;
  chain << r.f8.i << " = 3/2*8 = i(F8) = i(F0 # h) = i(F0) + Omega(h) = " << r.f0.i << " + "
        << r.h.omega << (r.h_embeddable ? " = 24k" : " != 24k");
  r.chain = chain.str();
  return r;
}

T3AbsorptionRow t3_absorption(long k) {
  const auto h = homology_profile(fixtures::t3());
  const auto zero = Gamma2Element::zero(h.gamma2_rank);
  const auto embeddings = embedding_classes(h, t3_spin_boundary_signatures());

  T3AbsorptionRow row;
  row.k = k;
  const RegHomotopyClass e{zero, embedding_invariant(Integer(8 * k), h)};
  const SmaleClass omega_h{12};
  row.i_e_sharp_h = connected_sum_act(e, omega_h).i;

  const bool even = k % 2 == 0;
  row.n = even ? k / 2 : (k + 1) / 2;
  row.uses_f8 = even;
  const RegHomotopyClass base{zero, embedding_invariant(Integer(even ? 8 : 0), h)};
  const SmaleClass e_n = s3_embedding_smale(Integer(16 * row.n));
  const RegHomotopyClass candidate = connected_sum_act(base, e_n);
  row.i_candidate = candidate.i;
  row.candidate_is_embedding = is_embedding_class(candidate, embeddings);
  row.matched = row.candidate_is_embedding && candidate.i == row.i_e_sharp_h;
  return row;
}

}  // namespace imm5
