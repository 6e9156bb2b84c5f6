#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "imm5_cli.hpp"

using namespace imm5::cli;

namespace {

imm5::Integer parse_integer(const std::string& s, const char* flag) {
  imm5::Integer x;
  if (s.empty() || x.set_str(s, 10) != 0) throw ParseError(std::string(flag) + ": '" + s + "' is not an integer");
  return x;
}

int emit(const Report& r, bool as_json) {
  if (as_json)
    std::cout << r.data.dump(2) << "\n";
  else
    std::cout << r.text;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"imm5: regular homotopy classes of immersions of 3-manifolds into R^5"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the JSON form of the report");

  std::string file;

  auto* analyze = app.add_subcommand("analyze", "Homology, Gamma_2 and spin structures of a manifold file");
  analyze->add_option("file", file, "Manifold JSON file")->required();
  analyze->add_flag("--json", as_json, "Print the JSON form of the report");

  auto* invariant = app.add_subcommand("invariant", "Compute i_a / i_b from a Seifert data file");
  invariant->add_option("file", file, "Seifert data JSON file")->required();
  bool only_a = false;
  bool only_b = false;
  auto* ia_flag = invariant->add_flag("--ia", only_a, "Only i_a (R^5 fillings)");
  invariant->add_flag("--ib", only_b, "Only i_b (R^6_+ fillings)")->excludes(ia_flag);
  invariant->add_flag("--json", as_json, "Print the JSON form of the report");

  auto* act = app.add_subcommand("act", "Connected sum with an immersion of S^3");
  std::string wu = "0";
  std::string i_text;
  std::string omega_text;
  act->add_option("file", file, "Manifold JSON file")->required();
  act->add_option("--wu", wu, "Wu invariant as a bit string (\"0\" when Gamma_2 = 0)");
  act->add_option("--i", i_text, "Integer invariant i")->required();
  act->add_option("--omega", omega_text, "Smale invariant of the S^3 summand")->required();
  act->add_flag("--json", as_json, "Print the JSON form of the report");

  auto* embeddings = app.add_subcommand("embeddings", "Regular homotopy classes containing embeddings");
  embeddings->add_option("file", file, "Manifold JSON file with spin_boundary_signatures")->required();
  embeddings->add_flag("--json", as_json, "Print the JSON form of the report");

  auto* verify = app.add_subcommand("verify", "Check identities in a data file, the T3 corollaries, or the oracles");
  bool corollaries = false;
  bool oracles = false;
  std::optional<std::uint64_t> seed;
  verify->add_option("file", file, "Seifert data JSON file");
  verify->add_flag("--corollaries", corollaries, "Reproduce the T3 corollaries and the 24Z sweep");
  verify->add_flag("--oracles", oracles, "Run the randomized oracle suites");
  verify->add_option("--seed", seed, "Seed for the oracle suites (default: $IMM5_SEED or built-in)");
  verify->add_flag("--json", as_json, "Print the JSON form of the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Report report;
  if (analyze->parsed()) {
    report = guarded("analyze", [&] { return cmd_analyze(file); });
  } else if (invariant->parsed()) {
    const auto kind = only_a ? InvariantKind::kIa : only_b ? InvariantKind::kIb : InvariantKind::kBoth;
    report = guarded("invariant", [&] { return cmd_invariant(file, kind); });
  } else if (act->parsed()) {
    report = guarded("act", [&] {
      return cmd_act(file, wu, parse_integer(i_text, "--i"), parse_integer(omega_text, "--omega"));
    });
  } else if (embeddings->parsed()) {
    report = guarded("embeddings", [&] { return cmd_embeddings(file); });
  } else if (verify->parsed()) {
    const int modes = (file.empty() ? 0 : 1) + (corollaries ? 1 : 0) + (oracles ? 1 : 0);
    if (modes != 1) {
      std::cerr << "verify: give exactly one of <file>, --corollaries, --oracles\n";
      return kInputError;
    }
    if (corollaries)
      report = guarded("verify", [] { return cmd_verify_corollaries(); });
    else if (oracles)
      report = guarded("verify", [&] { return cmd_verify_oracles(resolve_seed(seed)); });
    else
      report = guarded("verify", [&] { return cmd_verify_file(file); });
  }
  return emit(report, as_json);
}
