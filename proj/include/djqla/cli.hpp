#pragma once

// Batch jobs behind the djqla command line. Exit codes: 0 all checks pass,
// 1 a verification failed, 2 input error.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "djqla/json_io.hpp"

namespace djqla {

enum class Command { verify, classify, equivalence, normal_form, recognize };

std::string to_string(Command c);
Command command_from_string(const std::string& s);

enum class Mode { symbolic, sampled };

struct JobConfig {
  Command command = Command::verify;
  std::optional<ParamSpec> spec;
  Scalar c = Scalar(1);
  std::string bracket = "theorem";  // "theorem", "zero" or "explicit"
  std::optional<StructureConstants> explicit_C;
  std::vector<Element> words;
  std::optional<IceMatrix> ice;
  std::uint64_t seed = 1;
  int d_max = 3;
  Mode mode = Mode::symbolic;
};

/// Reads a config object: {"command", "spec", "c", "bracket", "words", "ice", "seed", "d_max", "mode"}.
/// The command may be absent when supplied separately.
JobConfig config_from_json(const json& j, std::optional<Command> command = std::nullopt);
json to_json(const JobConfig& cfg);

struct Report {
  std::string command;
  int exit_code = 0;
  json body;

  bool operator==(const Report& o) const = default;
};

json to_json(const Report& r);
Report report_from_json(const json& j);

/// Never throws for library errors: they become exit code 2 (1 for NotStandard
/// and GenericityFailure) with {"error": ..., "message": ...} as the body.
Report run(const JobConfig& cfg);

}  // namespace djqla
