// Acceptance gate: one PASS/FAIL line per criterion, each with its time limit.
// Exits nonzero if any criterion fails or runs over its limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "imm5/embeddings.hpp"
#include "imm5/fixtures.hpp"
#include "imm5/invariants.hpp"
#include "imm5/spin.hpp"
#include "imm5/verify.hpp"
#include "imm5_cli.hpp"

using namespace imm5;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

Outcome t3_analyze() {
  const auto r = cli::guarded("analyze", [] { return cli::cmd_analyze(std::filesystem::path(IMM5_FIXTURE_DIR) / "t3.json"); });
  const bool ok = r.exit_code == cli::kPass && r.data.at("alpha") == 0 && r.data.at("gamma2_order") == 1 &&
                  r.data.at("spin_structures") == 8;
  std::ostringstream d;
  d << "alpha = " << r.data.value("alpha", -1) << ", |Gamma2| = " << r.data.value("gamma2_order", -1)
    << ", spin structures = " << r.data.value("spin_structures", -1);
  return {ok, d.str()};
}

Outcome s3_sweep() {
  std::size_t on = 0;
  std::size_t off = 0;
  bool ok = true;
  for (long sigma = -160; sigma <= 160; sigma += 8) {
    const Integer omega = smale_via_seifert_r5({"s", sigma, 0, std::nullopt}).omega;
    const bool in24 = mpz_divisible_ui_p(omega.get_mpz_t(), 24) != 0;
    const bool expect = sigma % 16 == 0;
    ok = ok && in24 == expect;
    (expect ? on : off) += in24 == expect;
  }
  return {ok, std::to_string(on) + " signatures in 16Z land in 24Z, " + std::to_string(off) +
                  " in 16Z+8 land outside"};
}

Outcome t3_summand() {
  const auto zero = Gamma2Element::zero(0);
  const auto h = solve_for_summand({zero, 0}, {zero, 12});
  const bool embeddable = is_embedding_class({zero, h.omega}, s3_embedding_classes());
  const auto r = t3_summand_not_embeddable();
  const bool ok = h.omega == 12 && !embeddable && r.h.omega == 12 && !r.h_embeddable;
  return {ok, r.chain};
}

Outcome t3_absorption_rows() {
  bool ok = true;
  std::size_t matched = 0;
  for (long k = -10; k <= 10; ++k) {
    const auto row = t3_absorption(k);
    const bool even = k % 2 == 0;
    const long n = even ? k / 2 : (k + 1) / 2;
    const bool good = row.i_e_sharp_h == 12 * (k + 1) && row.uses_f8 == even && row.n == n &&
                      row.i_candidate == (even ? 12 : 0) + 24 * n && row.candidate_is_embedding && row.matched;
    ok = ok && good;
    matched += good;
  }
  return {ok, std::to_string(matched) + "/21 values of k matched"};
}

Outcome from_report(const OracleReport& r) {
  std::string d = r.name + ": " + std::to_string(r.trials - r.failures) + "/" + std::to_string(r.trials);
  for (const auto& s : r.failure_samples) d += "; " + s;
  return {r.passed() && r.trials > 0, d};
}

Outcome snf_and_signature() {
  const auto a = from_report(oracle_snf(500, 6));
  const auto b = from_report(oracle_signature(500, 6));
  return {a.ok && b.ok, a.detail + ", " + b.detail};
}

Outcome spin_wu_fibers() {
  const std::vector<SurgeryPresentation> cases = {
      fixtures::s3(),
      fixtures::s1_x_s2(),
      fixtures::t3(),
      fixtures::rp3(),
      fixtures::lens4(),
      {"RP3 # RP3", IntSymMatrix::diagonal({2, 2})},
      {"[[4,2],[2,4]]", IntSymMatrix{{4, 2}, {2, 4}}},
      {"S1xS2 # RP3 # L(4,1)", IntSymMatrix::diagonal({0, 2, 4})},
  };
  bool ok = true;
  std::ostringstream d;
  for (const auto& p : cases) {
    const auto h = homology_profile(p);
    const std::size_t n = p.q.dim();
    std::vector<SpinStructure> spins;
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      SpinStructure s{Z2Vector(n)};
      for (std::size_t k = 0; k < n; ++k) s.c[k] = (bits >> k) & 1;
      if (is_characteristic(p, s)) spins.push_back(s);
    }
    const WuCosetMap map(p);
    std::map<Gamma2Element, std::size_t> fibers;
    for (const auto& s : spins) ++fibers[map.of_difference(s, spins.front()).value];
    const std::size_t expected = std::size_t{1} << h.betti1;
    bool here = fibers.size() == (std::size_t{1} << h.alpha);
    for (const auto& [g, count] : fibers) here = here && count == expected;
    ok = ok && here;
    d << p.name << " (alpha " << h.alpha << ", fibers " << expected << ")" << (here ? "" : " FAILED") << "; ";
  }
  return {ok, d.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "T3: alpha = 0, |Gamma2| = 1, 8 spin structures", 1.0, t3_analyze},
      {2, "S3 embeddings: sigma in 16Z <-> Omega in 24Z on [-160,160]", 1.0, s3_sweep},
      {3, "T3 summand h has Omega = 12, not an S3 embedding class", 1.0, t3_summand},
      {4, "T3 absorption: i(E # h) = 12(k+1) matched for k in [-10,10]", 1.0, t3_absorption_rows},
      {5, "parity lemma: 500 even nonsingular matrices, n <= 6", 10.0,
       [] { return from_report(oracle_parity_lemma(500, 6)); }},
      {6, "i_a = i_b and cusp residue: 1000 tuples", 5.0,
       [] { return from_report(property_ia_ib_coincidence(1000)); }},
      {7, "gluing identities in R5 and R6: 500 pairs", 5.0, [] { return from_report(property_gluing(500)); }},
      {8, "SNF and signature oracles: 500 trials each", 30.0, snf_and_signature},
      {9, "spin difference -> Gamma2 onto with fibers 2^betti1", 5.0, spin_wu_fibers},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s %d. %s [%.3f s < %.0f s%s] %s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                c.limit_seconds, in_time ? "" : ": over limit", o.detail.c_str());
  }
  std::printf("%s: %zu/%zu criteria passed\n", failed ? "FAIL" : "PASS", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
