#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "galinv/exact/complex_rational.hpp"

namespace galinv {

enum class Command { Derive, Power, PlaneWave, Couple, PropSuite };
enum class Format { Json, Latex, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInternal = 3;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::Derive;
  std::size_t ncomp = 4;
  int order = 1;
  bool forbid_mixed = false;
  Rational mass{1};
  /// Power of the first-order operator for `power`.
  int N = 2;
  std::optional<std::filesystem::path> output_dir;
  Format format = Format::Json;
};

Command parse_command(const std::string& s);
Format parse_format(const std::string& s);
/// Positive rational such as "3/2"; throws ConfigError otherwise.
Rational parse_mass(const std::string& s);

/// Throws ConfigError.
void validate(const RunConfig& c);

std::string command_name(Command c);
/// "json", "tex", "txt".
std::string extension(Format f);

struct RunResult {
  int status = kExitOk;
  /// Report in the configured format; byte-stable for a given config.
  std::string report;
  /// One-line human summary.
  std::string summary;
};

RunResult run(const RunConfig& c);

}  // namespace galinv
