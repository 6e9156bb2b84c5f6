#pragma once

// Closed oriented 3-manifolds presented by integral surgery on a framed link,
// and the homological data read off the linking matrix.

#include <cstddef>
#include <string>
#include <vector>

#include "imm5/intlinalg.hpp"

namespace imm5 {

/// A closed oriented 3-manifold given by the linking matrix of a framed link
/// (framings on the diagonal). The empty matrix presents S^3.
struct SurgeryPresentation {
  std::string name;
  IntSymMatrix q;
};

/// An element of Gamma_2(M): the subgroup of H^2(M; Z) ~ H_1(M; Z) of elements
/// of order at most two. Coordinates are taken in the basis (d_i / 2) g_i over
/// the SNF generators g_i whose invariant factor d_i is even, in SNF order.
class Gamma2Element {
 public:
  Gamma2Element() = default;
  explicit Gamma2Element(Z2Vector coords);
  static Gamma2Element zero(std::size_t alpha) { return Gamma2Element(Z2Vector(alpha, 0)); }
  /// Accepts a bit string such as "01". Commas and spaces are ignored; when
  /// alpha is 0 the strings "" and "0" both denote the identity.
  static Gamma2Element parse(const std::string& text, std::size_t alpha);

  const Z2Vector& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }
  bool is_zero() const;

  /// Bit string; the trivial group's identity prints as "0".
  std::string to_string() const;

  friend Gamma2Element operator+(const Gamma2Element& a, const Gamma2Element& b);
  friend bool operator==(const Gamma2Element&, const Gamma2Element&) = default;
  friend auto operator<=>(const Gamma2Element&, const Gamma2Element&) = default;

 private:
  Z2Vector coords_;
};

struct HomologyProfile {
  std::size_t betti1 = 0;
  /// Invariant factors >= 2 of the torsion of H_1, divisibility chain.
  std::vector<Integer> torsion_factors;
  /// dim over Z/2 of (torsion of H_1) (x) Z/2.
  std::size_t alpha = 0;
  std::size_t gamma2_rank = 0;

  std::size_t gamma2_order_log2() const { return gamma2_rank; }
  std::size_t h1_mod2_dim() const { return betti1 + alpha; }
};

HomologyProfile homology_profile(const SurgeryPresentation& p);

/// All 2^alpha elements of Gamma_2, the identity first, in binary counting order.
std::vector<Gamma2Element> gamma2_elements(const HomologyProfile& h);

/// Signature of the 4-manifold traced out by the framed link.
long signature_of_trace(const SurgeryPresentation& p);

/// True iff every framing is even, i.e. the trace 4-manifold is spin.
bool is_even_presentation(const SurgeryPresentation& p);

/// Coordinates in H_1(M) = coker(q) relative to a fixed Smith decomposition.
/// For each SNF index i, the i-th coordinate of an integer vector x is
/// (u x)_i reduced modulo d_i (or kept as is when d_i = 0).
class CokernelCoordinates {
 public:
  explicit CokernelCoordinates(const IntSymMatrix& q);

  const SmithDecomposition& smith() const { return snf_; }
  std::size_t alpha() const { return even_indices_.size(); }

  /// Gamma_2 coordinates of [x]. Throws InvalidRecord if [x] is not of order
  /// at most two.
  Gamma2Element order_two_coordinates(const std::vector<Integer>& x) const;

  /// An integer vector representing the given Gamma_2 element in coker(q).
  std::vector<Integer> representative(const Gamma2Element& g) const;

 private:
  SmithDecomposition snf_;
  IntMatrix u_inverse_;
  std::vector<std::size_t> even_indices_;
};

}  // namespace imm5
