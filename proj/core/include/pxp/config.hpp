#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pxp/hilbert.hpp"
#include "pxp/protocols.hpp"

namespace pxp {

struct RunConfig {
  ProtocolKind protocol = ProtocolKind::U3;
  int length = 12;
  BoundaryCondition bc = BoundaryCondition::Periodic;
  DriveParams drive = default_drive();
  std::size_t cycles = 1050;
  std::size_t realizations = 1;
  std::optional<double> epsilon;  // per-family default when unset
  std::string out = "pxp_run";
  std::string format = "csv";

  double threshold() const;
  static DriveParams default_drive();

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

const std::vector<std::string>& config_keys();

// Sets one key from its text form; errors name the key.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);
void apply_settings(RunConfig& config, const ConfigEntries& entries);

// `key = value` lines; blank lines and lines starting with '#' are skipped.
ConfigEntries parse_config_text(std::string_view text);

// Key-value text, or the "config" object of a .meta.json sidecar.
ConfigEntries read_config_file(const std::filesystem::path& path);

ConfigEntries config_entries(const RunConfig& config);
std::string serialize_config(const RunConfig& config);

// Throws ValidationError on an invariant violation; returns warnings.
std::vector<std::string> validate_config(const RunConfig& config);

// Shortest text that parses back to the same double.
std::string format_roundtrip(double value);
// 17 significant digits.
std::string format_fixed17(double value);

double parse_double(std::string_view key, std::string_view text);
std::uint64_t parse_uint(std::string_view key, std::string_view text);

}  // namespace pxp
