#include "imm5/spin.hpp"

#include "imm5/errors.hpp"

namespace imm5 {

namespace {

Z2Vector diagonal_mod2(const IntSymMatrix& q) {
  Z2Vector d(q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) d[i] = mpz_odd_p(q(i, i).get_mpz_t()) ? 1 : 0;
  return d;
}

}  // namespace

bool is_characteristic(const SurgeryPresentation& p, const SpinStructure& s) {
  if (s.c.size() != p.q.dim()) return false;
  return Z2Matrix::reduce(p.q.matrix()).multiply(s.c) == diagonal_mod2(p.q);
}

std::vector<SpinStructure> spin_structures(const SurgeryPresentation& p) {
  const auto sol = solve_mod2(Z2Matrix::reduce(p.q.matrix()), diagonal_mod2(p.q));
  // diag(A) lies in the column space of any symmetric A over Z/2.
  if (!sol) throw Error("internal: characteristic equation has no solution");

  const std::size_t k = sol->kernel_basis.size();
  std::vector<SpinStructure> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Z2Vector c = sol->particular;
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1u)
        for (std::size_t i = 0; i < c.size(); ++i) c[i] ^= sol->kernel_basis[b][i];
    out.push_back(SpinStructure{std::move(c)});
  }
  return out;
}

WuCosetMap::WuCosetMap(const SurgeryPresentation& p) : p_(p), coords_(p.q) {}

Gamma2Element WuCosetMap::of_kernel_vector(const Z2Vector& d) const {
  const IntSymMatrix& q = p_.q;
  const std::size_t n = q.dim();
  if (d.size() != n) throw DimensionMismatch("spin difference length");
  // Lift d to an integer vector; q d is even, and [q d / 2] is the Bockstein
  // image in coker(q) = H_1 = H^2.
  std::vector<Integer> half(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (d[j]) acc += q(i, j);
    if (mpz_odd_p(acc.get_mpz_t())) throw InvalidSpinStructure("difference is not in ker(q mod 2)");
    half[i] = acc / 2;
  }
  return coords_.order_two_coordinates(half);
}

WuCoset WuCosetMap::of_difference(const SpinStructure& s1, const SpinStructure& s2) const {
  if (!is_characteristic(p_, s1) || !is_characteristic(p_, s2))
    throw InvalidSpinStructure("input is not a characteristic sublink of " +
                               (p_.name.empty() ? std::string("the presentation") : p_.name));
  Z2Vector d(s1.c.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (s1.c[i] ^ s2.c[i]) & 1u;
  return WuCoset{of_kernel_vector(d)};
}

WuCoset wu_coset_of_difference(const SurgeryPresentation& p, const SpinStructure& s1,
                               const SpinStructure& s2) {
  return WuCosetMap(p).of_difference(s1, s2);
}

}  // namespace imm5
