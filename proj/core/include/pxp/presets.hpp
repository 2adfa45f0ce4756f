#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pxp/config.hpp"
#include "pxp/experiments.hpp"

namespace pxp {

struct PresetOptions {
  std::optional<int> length;
  std::optional<std::size_t> cycles;
  std::optional<std::size_t> grid;  // points per scan axis
  std::optional<std::uint64_t> seed;
  std::optional<double> w_dT;  // fig2 pulse jitter w dT
};

struct TrajectoryJob {
  std::string label;
  RunConfig config;
};

struct ScanJob {
  std::string label;
  ScanSpec spec;
};

struct Preset {
  std::string name;
  std::string summary;
  std::vector<TrajectoryJob> trajectories;
  std::vector<ScanJob> scans;
};

const std::vector<std::string>& preset_names();
Preset make_preset(std::string_view name, const PresetOptions& options = {});

}  // namespace pxp
