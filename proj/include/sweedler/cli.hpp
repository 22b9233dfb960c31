#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sweedler/errors.hpp"

namespace sweedler {

enum class Command {
  validate,
  dual,
  convolution,
  fusion,
  antipode,
  opantipode,
  grouplikes,
  morphisms,
  enumerate_measurings,
  reconstruct,
  tensor,
  compose,
  graded_check,
  degree0,
  tambara_presentation,
  tambara_check,
};

/// Command names as typed on the command line, e.g. "enumerate-measurings".
const std::vector<std::string>& command_names();
std::optional<Command> parse_command(const std::string& name);

enum class OutputFormat { report, document };

struct CommandRequest {
  Command command = Command::validate;
  std::vector<std::filesystem::path> inputs;
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::uint64_t> seed;
  bool auto_intertwiners = true;
  std::optional<std::filesystem::path> output;
  OutputFormat format = OutputFormat::report;
  /// Representation dimension for enumerate-measurings and tambara-check.
  std::optional<std::size_t> dim;
  /// Coordinate values for a grouplike search over Q; every axis is searched.
  std::vector<std::string> candidates;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int io = 2;
inline constexpr int parse = 3;
inline constexpr int validation = 4;
inline constexpr int budget = 5;
inline constexpr int library = 6;
}  // namespace exit_code

struct CommandResult {
  int status = exit_code::ok;
  /// A JSON report, or a document for --format document.
  std::string text;
};

/// Runs a request. Errors are reported in `text` with a nonzero status;
/// nothing is thrown. Writing `output` is left to the caller.
CommandResult run(const CommandRequest& request);

}  // namespace sweedler
