#pragma once

// Spin structures on a surgery-presented 3-manifold, as characteristic
// sublinks, and the Wu coset of a difference of two of them.

#include <vector>

#include "imm5/intlinalg.hpp"
#include "imm5/surgery.hpp"

namespace imm5 {

/// Characteristic sublink: a Z/2 vector c with q c = diag(q) mod 2.
struct SpinStructure {
  Z2Vector c;

  friend bool operator==(const SpinStructure&, const SpinStructure&) = default;
};

struct WuCoset {
  Gamma2Element value;

  friend bool operator==(const WuCoset&, const WuCoset&) = default;
};

bool is_characteristic(const SurgeryPresentation& p, const SpinStructure& s);

/// Every solution of q c = diag(q) mod 2; there are 2^(betti1 + alpha).
std::vector<SpinStructure> spin_structures(const SurgeryPresentation& p);

/// Maps the difference class s1 - s2 in H^1(M; Z/2) through the Bockstein to
/// Gamma_2, i.e. to H^1(M; Z/2) / rho(H^1(M; Z)). Throws InvalidSpinStructure
/// if either input is not characteristic.
WuCoset wu_coset_of_difference(const SurgeryPresentation& p, const SpinStructure& s1,
                               const SpinStructure& s2);

/// Same map with the Smith data precomputed, for bulk enumeration.
class WuCosetMap {
 public:
  explicit WuCosetMap(const SurgeryPresentation& p);

  /// d must lie in ker(q mod 2).
  Gamma2Element of_kernel_vector(const Z2Vector& d) const;
  WuCoset of_difference(const SpinStructure& s1, const SpinStructure& s2) const;

 private:
  SurgeryPresentation p_;
  CokernelCoordinates coords_;
};

}  // namespace imm5
