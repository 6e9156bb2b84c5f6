#pragma once

// Invariant algebra for immersions M^3 -> R^5 with trivial normal bundle:
// the Smale invariant of S^3 immersions from Seifert data, the integer
// invariant i computed from a singular Seifert surface in R^5 (i_a) or in the
// half-space R^6_+ (i_b), and the connected-sum action of Imm[S^3, R^5].

#include <optional>
#include <string>
#include <vector>

#include "imm5/intlinalg.hpp"
#include "imm5/surgery.hpp"

namespace imm5 {

/// Generic map of a 4-manifold W into R^5 extending the immersion.
struct SeifertFillingR5 {
  std::string id;
  Integer sigma;
  /// Algebraic number of cusps.
  Integer cusps_algebraic;
  /// Per component of the singular surface; sums to cusps_algebraic.
  std::optional<std::vector<Integer>> cusps_per_component;

  /// Throws InvalidRecord if the per-component counts do not sum up.
  void validate() const;
};

/// Generic map of W into R^6_+ meeting R^5 exactly along the immersion.
struct SeifertFillingR6 {
  std::string id;
  Integer sigma;
  /// Algebraic number of triple points.
  Integer triple_points;
  /// Linking of the pushed-off singular curve with the image of W.
  Integer singular_linking;
};

/// Linking number of F(M) with the pushed-off double point curve.
struct ImmersionDoubleData {
  Integer big_l;
};

/// Omega in pi_3(V_{5,3}) = Z.
struct SmaleClass {
  Integer omega;

  friend bool operator==(const SmaleClass&, const SmaleClass&) = default;
};

/// The complete regular homotopy invariant (Wu invariant, i).
struct RegHomotopyClass {
  Gamma2Element wu;
  Integer i;

  friend bool operator==(const RegHomotopyClass&, const RegHomotopyClass&) = default;
};

/// Omega = (3 sigma + cusps) / 2 for an immersion of S^3.
SmaleClass smale_via_seifert_r5(const SeifertFillingR5& s);

/// Omega = (3 sigma + 3 t - 3 l + L) / 2 for an immersion of S^3.
SmaleClass smale_via_seifert_r6(const SeifertFillingR6& s, const ImmersionDoubleData& d);

/// i_a = 3/2 (sigma - alpha) + cusps / 2.
Integer i_a(const SeifertFillingR5& s, const HomologyProfile& h);

/// i_b = 3/2 (sigma - alpha) + (3 t - 3 l + L) / 2.
Integer i_b(const SeifertFillingR6& s, const ImmersionDoubleData& d, const HomologyProfile& h);

/// (wu, i) # Omega = (wu, i + Omega). The Wu invariant is unchanged.
RegHomotopyClass connected_sum_act(const RegHomotopyClass& f, const SmaleClass& g);

/// The unique g with connected_sum_act(f0, g) == target. Throws WuMismatch if
/// the classes lie in different Wu components.
SmaleClass solve_for_summand(const RegHomotopyClass& f0, const RegHomotopyClass& target);

/// L before a regular homotopy equals L after plus three times the algebraic
/// number of triple points of the track.
bool track_correction(const Integer& l_before, const Integer& l_after,
                      const Integer& triple_points_of_track);

/// i_a == i_b for two fillings declared to bound the same immersion. With equal
/// signatures this is the raw identity cusps = 3 t - 3 l + L.
bool fillings_coincide(const SeifertFillingR5& r5, const SeifertFillingR6& r6,
                       const ImmersionDoubleData& d, const HomologyProfile& h);

}  // namespace imm5
