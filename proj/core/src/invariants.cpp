#include "imm5/invariants.hpp"

#include "imm5/errors.hpp"

namespace imm5 {

namespace {

Integer exact_half(const Integer& twice, const std::string& what, const std::string& id) {
  if (mpz_odd_p(twice.get_mpz_t()))
    throw ParityError(what + " is a half-integer" + (id.empty() ? "" : " for record '" + id + "'") +
                      "; the data cannot come from a genuine filling");
  return twice / 2;
}

Integer alpha_of(const HomologyProfile& h) { return Integer(static_cast<unsigned long>(h.alpha)); }

}  // namespace

void SeifertFillingR5::validate() const {
  if (!cusps_per_component) return;
  Integer sum = 0;
  for (const auto& c : *cusps_per_component) sum += c;
  if (sum != cusps_algebraic)
    throw InvalidRecord("per-component cusp counts of '" + id + "' sum to " + sum.get_str() +
                        ", not " + cusps_algebraic.get_str());
}

SmaleClass smale_via_seifert_r5(const SeifertFillingR5& s) {
  s.validate();
  return SmaleClass{exact_half(3 * s.sigma + s.cusps_algebraic, "Smale invariant", s.id)};
}

SmaleClass smale_via_seifert_r6(const SeifertFillingR6& s, const ImmersionDoubleData& d) {
  return SmaleClass{exact_half(3 * (s.sigma + s.triple_points - s.singular_linking) + d.big_l,
                               "Smale invariant", s.id)};
}

Integer i_a(const SeifertFillingR5& s, const HomologyProfile& h) {
  s.validate();
  return exact_half(3 * (s.sigma - alpha_of(h)) + s.cusps_algebraic, "i_a", s.id);
}

Integer i_b(const SeifertFillingR6& s, const ImmersionDoubleData& d, const HomologyProfile& h) {
  return exact_half(3 * (s.sigma - alpha_of(h) + s.triple_points - s.singular_linking) + d.big_l,
                    "i_b", s.id);
}

RegHomotopyClass connected_sum_act(const RegHomotopyClass& f, const SmaleClass& g) {
  return RegHomotopyClass{f.wu, f.i + g.omega};
}

SmaleClass solve_for_summand(const RegHomotopyClass& f0, const RegHomotopyClass& target) {
  if (f0.wu != target.wu)
    throw WuMismatch("Wu invariants " + f0.wu.to_string() + " and " + target.wu.to_string() +
                     " differ; connected sum with S^3 immersions preserves the Wu invariant");
  return SmaleClass{target.i - f0.i};
}

bool track_correction(const Integer& l_before, const Integer& l_after,
                      const Integer& triple_points_of_track) {
  return l_before == l_after + 3 * triple_points_of_track;
}

bool fillings_coincide(const SeifertFillingR5& r5, const SeifertFillingR6& r6,
                       const ImmersionDoubleData& d, const HomologyProfile& h) {
  return i_a(r5, h) == i_b(r6, d, h);
}

}  // namespace imm5
