#pragma once

// File formats and subcommands of the imm5 tool. Every command returns a
// Report carrying both a plain-text rendering and a JSON document; the binary
// prints one of them and exits with Report::exit_code.

#include <cstdint>
#include <functional>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "imm5/embeddings.hpp"
#include "imm5/errors.hpp"
#include "imm5/invariants.hpp"
#include "imm5/surgery.hpp"
#include "imm5/verify.hpp"

namespace imm5::cli {

using json = nlohmann::json;

/// Exit codes: every identity holds, an identity failed, bad input.
enum ExitCode : int { kPass = 0, kIdentityFailure = 1, kInputError = 2 };

class ParseError : public Error {
 public:
  using Error::Error;
};

// Exact integers ------------------------------------------------------------

/// Magnitudes up to 2^53 are written as JSON numbers, larger ones as decimal
/// strings.
json integer_to_json(const Integer& x);
/// Accepts JSON integers and decimal strings; anything else is a ParseError.
Integer integer_from_json(const json& j, const std::string& where);

// File formats --------------------------------------------------------------

struct ManifoldFile {
  SurgeryPresentation presentation;
  std::optional<SpinBoundarySignatures> spin_boundary_signatures;
};

struct ClosedRecords {
  std::vector<ClosedMapRecordR5> r5;
  std::vector<ClosedMapRecordR6> r6;
  std::vector<PartitionRecord> partitions;
  struct SignaturePair {
    std::string id;
    Integer s1;
    Integer s2;
  };
  /// Seifert signatures of embeddings declared regularly homotopic.
  std::vector<SignaturePair> signature_pairs;
  struct Track {
    std::string id;
    Integer l_before;
    Integer l_after;
    Integer triple_points;
  };
  std::vector<Track> tracks;
};

struct SeifertDataFile {
  ManifoldFile manifold;
  std::vector<SeifertFillingR5> fillings_r5;
  std::vector<SeifertFillingR6> fillings_r6;
  std::optional<ImmersionDoubleData> double_data;
  ClosedRecords closed_records;
};

ManifoldFile manifold_from_json(const json& j);
json manifold_to_json(const ManifoldFile& m);
/// `base_dir` resolves a manifold given by relative path.
SeifertDataFile seifert_data_from_json(const json& j, const std::filesystem::path& base_dir);

json read_json_file(const std::filesystem::path& path);
ManifoldFile load_manifold(const std::filesystem::path& path);
SeifertDataFile load_seifert_data(const std::filesystem::path& path);

// Commands ------------------------------------------------------------------

struct Report {
  json data;
  std::string text;
  int exit_code = kPass;
};

enum class InvariantKind { kBoth, kIa, kIb };

Report cmd_analyze(const std::filesystem::path& path);
Report cmd_invariant(const std::filesystem::path& path, InvariantKind which);
Report cmd_act(const std::filesystem::path& path, const std::string& wu, const Integer& i, const Integer& omega);
Report cmd_embeddings(const std::filesystem::path& path);
Report cmd_verify_file(const std::filesystem::path& path);
Report cmd_verify_corollaries();
Report cmd_verify_oracles(std::uint64_t seed);

/// --seed when given, otherwise IMM5_SEED when set, otherwise kDefaultSeed.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Runs `body`, converting library errors into an input-error Report (or an
/// identity-failure Report for parity errors).
Report guarded(const std::string& command, const std::function<Report()>& body);

}  // namespace imm5::cli
