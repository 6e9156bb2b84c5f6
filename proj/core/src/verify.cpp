#include "imm5/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "imm5/errors.hpp"
#include "imm5/surgery.hpp"

namespace imm5 {

// ----------------------------------------------------------------- validators

bool check_closed_r5(const ClosedMapRecordR5& r) { return r.cusps_algebraic + 3 * r.sigma == 0; }

bool check_closed_r6(const ClosedMapRecordR6& r) {
  return r.sigma - r.singular_linking + r.triple_points == 0;
}

bool check_cusp_residue(const SeifertFillingR5& filling, const ImmersionDoubleData& d) {
  const Integer diff = filling.cusps_algebraic - d.big_l;
  return mpz_divisible_ui_p(diff.get_mpz_t(), 3) != 0;
}

bool check_spin_even_components(const ClosedMapRecordR5& r) {
  if (!r.is_spin) throw HypothesisViolated("record '" + r.id + "' is not declared spin");
  if (!r.cusps_per_component)
    throw MissingData("record '" + r.id + "' has no per-component cusp counts");
  Integer sum = 0;
  for (const auto& c : *r.cusps_per_component) sum += c;
  if (sum != r.cusps_algebraic)
    throw InvalidRecord("per-component cusp counts of '" + r.id + "' do not sum to the total");
  return std::all_of(r.cusps_per_component->begin(), r.cusps_per_component->end(),
                     [](const Integer& c) { return mpz_even_p(c.get_mpz_t()) != 0; });
}

bool check_partition_divisibility(const PartitionRecord& p) {
  if (!p.ambient.is_spin || !p.null_homologous || !p.disjoint_from_double_points)
    throw HypothesisViolated("partition '" + p.id +
                             "' needs a spin ambient manifold and a null-homologous separating "
                             "3-manifold disjoint from the double points");
  if (p.part_cusps[0] + p.part_cusps[1] != p.ambient.cusps_algebraic)
    throw InvalidRecord("partition '" + p.id + "' cusp counts do not sum to the ambient total");
  return mpz_divisible_ui_p(p.part_cusps[0].get_mpz_t(), 6) != 0 &&
         mpz_divisible_ui_p(p.part_cusps[1].get_mpz_t(), 6) != 0;
}

bool check_equal_signatures_if_reg_homotopic(const Integer& s1, const Integer& s2) { return s1 == s2; }

// -------------------------------------------------------------------- oracles

namespace {

Integer laplace_det(const IntMatrix& a, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols,
                    std::size_t depth) {
  const std::size_t k = rows.size() - depth;
  if (k == 0) return 1;
  const std::size_t r = rows[depth];
  Integer total = 0;
  int sign = 1;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (sgn(a(r, c)) != 0) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
      Integer sub = laplace_det(a, rows, cols, depth + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
      if (sign > 0)
        total += a(r, c) * sub;
      else
        total -= a(r, c) * sub;
    }
    sign = -sign;
  }
  return total;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t r = std::min(m, n);
  std::vector<Integer> divisors;  // D_0 = 1, D_1, ...
  divisors.push_back(1);
  std::vector<Integer> factors;
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    for_each_subset(m, k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cs) {
        if (g == 1) return;
        std::vector<std::size_t> rows = rs;
        std::vector<std::size_t> cols = cs;
        Integer minor = laplace_det(a, rows, cols, 0);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
      });
    });
    if (sgn(g) == 0) {
      factors.resize(r, 0);
      return factors;
    }
    factors.push_back(g / divisors.back());
    divisors.push_back(g);
  }
  return factors;
}

std::vector<Integer> characteristic_polynomial(const IntSymMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  const IntMatrix& am = a.matrix();
  IntMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = am * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const IntMatrix amk = am * mk;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return c;
}

long signature_by_root_signs(const IntSymMatrix& a) {
  const auto c = characteristic_polynomial(a);
  std::size_t lowest = 0;
  while (lowest < c.size() && sgn(c[lowest]) == 0) ++lowest;
  auto changes = [&](bool negate_odd) {
    long count = 0;
    int prev = 0;
    for (std::size_t i = lowest; i < c.size(); ++i) {
      int s = sgn(c[i]);
      if (s == 0) continue;
      if (negate_odd && (i % 2 == 1)) s = -s;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

// ------------------------------------------------------------- random inputs

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

void record_failure(OracleReport& r, const std::string& what) {
  ++r.failures;
  if (r.failure_samples.size() < 5) r.failure_samples.push_back(what);
}

}  // namespace

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

IntSymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long bound) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(rng, -bound, bound);
  return IntSymMatrix(std::move(m));
}

IntSymMatrix random_even_nonsingular(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 2 * uniform(rng, -2, 2);
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = uniform(rng, -5, 5);
    }
    if (sgn(determinant(m)) != 0) return IntSymMatrix(std::move(m));
  }
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, std::size_t steps) {
  IntMatrix g = IntMatrix::identity(n);
  if (n == 0) return g;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    switch (uniform(rng, 0, 2)) {
      case 0:
        g.swap_cols(a, b);
        break;
      case 1:
        g.negate_col(a);
        break;
      default:
        if (a != b) g.add_col_multiple(a, b, uniform(rng, -2, 2));
        break;
    }
  }
  return g;
}

// ---------------------------------------------------------------- sweeps

OracleReport oracle_parity_lemma(std::size_t trials, std::size_t max_dim, std::uint64_t seed) {
  OracleReport r{"parity lemma", seed, trials, 0, {}};
  max_dim = std::max<std::size_t>(max_dim, 1);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
    const auto q = random_even_nonsingular(rng, n);
    const auto h = homology_profile(SurgeryPresentation{"", q});
    if (h.betti1 != 0 || (n - h.alpha) % 2 != 0)
      record_failure(r, q.matrix().to_string() + ": size " + std::to_string(n) + ", alpha " +
                            std::to_string(h.alpha));
  }
  return r;
}

OracleReport oracle_snf(std::size_t trials, std::size_t max_dim, std::uint64_t seed) {
  OracleReport r{"SNF", seed, trials, 0, {}};
  max_dim = std::max<std::size_t>(max_dim, 1);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
    IntMatrix a = random_matrix(rng, n, 9);
    if (uniform(rng, 0, 3) == 0) {
      // Rank-deficient input, so zero invariant factors get exercised.
      const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      IntMatrix left(n, k), right(k, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          left(i, j) = uniform(rng, -3, 3);
          right(j, i) = uniform(rng, -3, 3);
        }
      a = left * right;
    }
    const auto snf = smith_normal_form(a);
    const auto expected = invariant_factors_by_minors(a);
    std::ostringstream why;
    if (!(snf.u * a * snf.v == snf.s)) why << "u*a*v != s; ";
    if (!snf.s.is_diagonal()) why << "s not diagonal; ";
    if (abs(determinant(snf.u)) != 1 || abs(determinant(snf.v)) != 1) why << "transform not unimodular; ";
    if (snf.invariant_factors != expected) why << "factors differ from determinantal divisors; ";
    for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i) {
      const Integer& d = snf.invariant_factors[i];
      const Integer& e = snf.invariant_factors[i + 1];
      if (sgn(d) < 0 || (sgn(d) == 0 && sgn(e) != 0) ||
          (sgn(d) != 0 && !mpz_divisible_p(e.get_mpz_t(), d.get_mpz_t())))
        why << "divisibility chain broken; ";
    }
    if (!why.str().empty()) record_failure(r, a.to_string() + ": " + why.str());
  }
  return r;
}

OracleReport oracle_signature(std::size_t trials, std::size_t max_dim, std::uint64_t seed) {
  OracleReport r{"signature", seed, trials, 0, {}};
  max_dim = std::max<std::size_t>(max_dim, 1);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
    IntSymMatrix a = random_symmetric(rng, n, 5);
    if (uniform(rng, 0, 3) == 0) {
      // Degenerate form: a diagonal with zeros under a random congruence.
      std::vector<long> diag(n);
      for (auto& d : diag) d = uniform(rng, -2, 2);
      a = IntSymMatrix::diagonal(diag).congruent(random_unimodular(rng, n));
    }
    const long fast = signature(a);
    const long oracle = signature_by_root_signs(a);
    if (fast != oracle)
      record_failure(r, a.matrix().to_string() + ": " + std::to_string(fast) + " vs " + std::to_string(oracle));
  }
  return r;
}

OracleReport property_ia_ib_coincidence(std::size_t trials, std::uint64_t seed) {
  OracleReport r{"i_a = i_b", seed, trials, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    HomologyProfile h;
    h.alpha = h.gamma2_rank = static_cast<std::size_t>(uniform(rng, 0, 4));
    const long sigma = uniform(rng, -60, 60);
    const long triple = uniform(rng, -30, 30);
    const long link = uniform(rng, -30, 30);
    const long x = sigma - static_cast<long>(h.alpha) + triple - link;
    const long big_l = 2 * uniform(rng, -30, 30) + ((x % 2 + 2) % 2);
    const long cusps = 3 * triple - 3 * link + big_l;

    const SeifertFillingR5 r5{"r5", sigma, cusps, std::nullopt};
    const SeifertFillingR6 r6{"r6", sigma, triple, link};
    const ImmersionDoubleData d{big_l};
    try {
      const Integer a = i_a(r5, h);
      const Integer b = i_b(r6, d, h);
      if (a != b || !check_cusp_residue(r5, d))
        record_failure(r, "sigma " + std::to_string(sigma) + " t " + std::to_string(triple) + " l " +
                              std::to_string(link) + " L " + std::to_string(big_l));
    } catch (const Error& e) {
      record_failure(r, e.what());
    }
  }
  return r;
}

OracleReport property_gluing(std::size_t trials, std::uint64_t seed) {
  OracleReport r{"gluing coherence", seed, trials, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    HomologyProfile h;
    h.alpha = h.gamma2_rank = static_cast<std::size_t>(uniform(rng, 0, 4));
    const long alpha = static_cast<long>(h.alpha);
    std::ostringstream why;

    // R^5: two fillings with the same i.
    const long target = uniform(rng, -100, 100);
    const long s1 = uniform(rng, -40, 40);
    const long s2 = uniform(rng, -40, 40);
    const SeifertFillingR5 f1{"f1", s1, 2 * target - 3 * (s1 - alpha), std::nullopt};
    const SeifertFillingR5 f2{"f2", s2, 2 * target - 3 * (s2 - alpha), std::nullopt};
    try {
      if (i_a(f1, h) != target || i_a(f2, h) != target) why << "R5 fillings disagree on i; ";
    } catch (const Error& e) {
      why << e.what() << "; ";
    }
    const ClosedMapRecordR5 glued5{"glued", f1.sigma - f2.sigma, f1.cusps_algebraic - f2.cusps_algebraic,
                                   std::nullopt, false};
    if (!check_closed_r5(glued5)) why << "R5 glued identity fails; ";

    // R^6_+: two fillings with the same L and i.
    const long big_l = uniform(rng, -40, 40);
    const long m = 2 * uniform(rng, -20, 20) + ((big_l % 2 + 2) % 2);
    const long i_target = (big_l + 3 * m) / 2;
    const ImmersionDoubleData d{big_l};
    SeifertFillingR6 g[2];
    for (auto& gk : g) {
      const long sigma = uniform(rng, -40, 40);
      const long triple = uniform(rng, -20, 20);
      gk = SeifertFillingR6{"g", sigma, triple, sigma - alpha + triple - m};
    }
    try {
      if (i_b(g[0], d, h) != i_target || i_b(g[1], d, h) != i_target) why << "R6 fillings disagree on i; ";
    } catch (const Error& e) {
      why << e.what() << "; ";
    }
    const ClosedMapRecordR6 glued6{"glued", g[0].sigma - g[1].sigma, g[0].triple_points - g[1].triple_points,
                                   g[0].singular_linking - g[1].singular_linking};
    if (!check_closed_r6(glued6)) why << "R6 glued identity fails; ";

    if (!why.str().empty()) record_failure(r, why.str());
  }
  return r;
}

}  // namespace imm5
