#include "imm5/surgery.hpp"

#include <cctype>
#include <utility>

#include "imm5/errors.hpp"

namespace imm5 {

Gamma2Element::Gamma2Element(Z2Vector coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c &= 1u;
}

Gamma2Element Gamma2Element::parse(const std::string& text, std::size_t alpha) {
  Z2Vector bits;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch != '0' && ch != '1') throw InvalidRecord("Wu coordinates must be a bit string, got '" + text + "'");
    bits.push_back(ch == '1' ? 1 : 0);
  }
  if (alpha == 0 && bits.size() == 1 && bits[0] == 0) bits.clear();
  if (bits.size() != alpha)
    throw InvalidRecord("Wu coordinates '" + text + "' do not have length alpha = " + std::to_string(alpha));
  return Gamma2Element(std::move(bits));
}

bool Gamma2Element::is_zero() const {
  for (auto c : coords_)
    if (c) return false;
  return true;
}

std::string Gamma2Element::to_string() const {
  if (coords_.empty()) return "0";
  std::string s;
  for (auto c : coords_) s.push_back(c ? '1' : '0');
  return s;
}

Gamma2Element operator+(const Gamma2Element& a, const Gamma2Element& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("Gamma_2 elements of different rank");
  Z2Vector sum(a.rank());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.coords_[i] ^ b.coords_[i];
  return Gamma2Element(std::move(sum));
}

HomologyProfile homology_profile(const SurgeryPresentation& p) {
  const auto snf = smith_normal_form(p.q.matrix());
  HomologyProfile h;
  for (const Integer& d : snf.invariant_factors) {
    if (sgn(d) == 0) {
      ++h.betti1;
    } else if (d >= 2) {
      h.torsion_factors.push_back(d);
      if (mpz_even_p(d.get_mpz_t())) ++h.alpha;
    }
  }
  h.gamma2_rank = h.alpha;
  return h;
}

std::vector<Gamma2Element> gamma2_elements(const HomologyProfile& h) {
  const std::size_t alpha = h.gamma2_rank;
  std::vector<Gamma2Element> out;
  out.reserve(std::size_t{1} << alpha);
  for (std::size_t mask = 0; mask < (std::size_t{1} << alpha); ++mask) {
    Z2Vector bits(alpha);
    // Most significant coordinate first, so the listing reads 00, 01, 10, 11.
    for (std::size_t i = 0; i < alpha; ++i) bits[i] = (mask >> (alpha - 1 - i)) & 1u;
    out.emplace_back(std::move(bits));
  }
  return out;
}

long signature_of_trace(const SurgeryPresentation& p) { return signature(p.q); }

bool is_even_presentation(const SurgeryPresentation& p) {
  for (std::size_t i = 0; i < p.q.dim(); ++i)
    if (mpz_odd_p(p.q(i, i).get_mpz_t())) return false;
  return true;
}

// ------------------------------------------------------ CokernelCoordinates

namespace {

IntMatrix unimodular_inverse(const IntMatrix& u) {
  // u is a product of elementary operations; recover u^{-1} exactly through
  // the Smith form of u itself: s = a u b with s = I, hence u^{-1} = b a.
  const auto snf = smith_normal_form(u);
  for (const auto& d : snf.invariant_factors)
    if (d != 1) throw Error("internal: SNF transform is not unimodular");
  return snf.v * snf.u;
}

}  // namespace

CokernelCoordinates::CokernelCoordinates(const IntSymMatrix& q)
    : snf_(smith_normal_form(q.matrix())), u_inverse_(unimodular_inverse(snf_.u)) {
  for (std::size_t i = 0; i < snf_.invariant_factors.size(); ++i) {
    const Integer& d = snf_.invariant_factors[i];
    if (sgn(d) != 0 && mpz_even_p(d.get_mpz_t())) even_indices_.push_back(i);
  }
}

Gamma2Element CokernelCoordinates::order_two_coordinates(const std::vector<Integer>& x) const {
  const std::size_t n = snf_.u.cols();
  if (x.size() != n) throw DimensionMismatch("cokernel vector length");
  std::vector<Integer> ux(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ux[i] += snf_.u(i, j) * x[j];

  Z2Vector coords;
  coords.reserve(even_indices_.size());
  std::size_t next_even = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = snf_.invariant_factors[i];
    const bool even_slot = next_even < even_indices_.size() && even_indices_[next_even] == i;
    if (sgn(d) == 0) {
      if (sgn(ux[i]) != 0) throw InvalidRecord("class has a free component; it is not of order two");
      continue;
    }
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), ux[i].get_mpz_t(), d.get_mpz_t());
    if (!even_slot) {
      if (sgn(r) != 0) throw InvalidRecord("class has odd-order torsion; it is not of order two");
      continue;
    }
    const Integer half = d / 2;
    if (sgn(r) == 0) {
      coords.push_back(0);
    } else if (r == half) {
      coords.push_back(1);
    } else {
      throw InvalidRecord("class is not of order two");
    }
    ++next_even;
  }
  return Gamma2Element(std::move(coords));
}

std::vector<Integer> CokernelCoordinates::representative(const Gamma2Element& g) const {
  if (g.rank() != even_indices_.size()) throw DimensionMismatch("Gamma_2 rank");
  const std::size_t n = snf_.u.cols();
  std::vector<Integer> y(n);
  for (std::size_t k = 0; k < even_indices_.size(); ++k)
    if (g.coords()[k]) y[even_indices_[k]] = snf_.invariant_factors[even_indices_[k]] / 2;
  std::vector<Integer> x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i] += u_inverse_(i, j) * y[j];
  return x;
}

}  // namespace imm5
