#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "opnorm/error.hpp"

namespace opnorm::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitNotInClass = 3,
  kExitUnsupportedExponent = 4,
  kExitVerificationFailed = 5,
};

int exit_code_for(ErrorKind kind);

enum class Mode { kExact, kEstimate, kBoth, kBound };

std::optional<Mode> mode_from_string(std::string_view name);

struct ComputeRequest {
  std::string matrix_path;
  std::string q;
  std::string r;
  Mode mode = Mode::kExact;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> witness_path;
};

struct GenerateRequest {
  std::string class_name;
  std::map<std::string, std::string> params;
  std::string out;
  std::optional<std::uint64_t> seed;
};

struct GrothendieckRequest {
  std::string matrix_path;
  std::string p;
  std::string q;
  Mode mode = Mode::kExact;
  std::optional<std::uint64_t> seed;
};

struct VerifyRequest {
  std::string matrix_path;
  std::string witness_path;
  std::string q;
  std::string r;
  std::optional<std::uint64_t> seed;
};

/// The JSON document a command produced and the process exit code.
struct CommandOutcome {
  nlohmann::json document;
  int exit_code = kExitOk;
};

/// Explicit seed, else OPNORM_SEED, else 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed);

CommandOutcome cmd_compute(const ComputeRequest& request);
/// Writes `out` (matrix CSV) and `out.witness.json`.
CommandOutcome cmd_generate(const GenerateRequest& request);
CommandOutcome cmd_detect(const std::string& matrix_path, const std::string& q,
                          const std::string& r);
CommandOutcome cmd_grothendieck(const GrothendieckRequest& request);
CommandOutcome cmd_verify(const VerifyRequest& request);

std::string witness_path_for(const std::string& matrix_out);

/// Full command-line entry point; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opnorm::cli
