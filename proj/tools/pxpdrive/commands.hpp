#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pxp/config.hpp"
#include "pxp/presets.hpp"

namespace pxpdrive {

unsigned resolve_threads(std::optional<unsigned> flag);

struct BasisArgs {
  int length = 12;
  std::string bc = "pbc";
  bool list = false;
};

struct RunArgs {
  std::string config_file;
  pxp::ConfigEntries overrides;
};

struct ScanArgs {
  RunArgs run;
  std::string meta_file;
  std::string axis1;
  std::string axis2;
  std::optional<std::string> metric;
  std::optional<unsigned> threads;
};

struct EffectiveArgs {
  std::string check;
  int length = 10;
  std::uint64_t seed = 1;
  int draws = 100;
  std::string out;
};

struct SeqstatsArgs {
  std::optional<int> bruteforce_n;
  std::optional<int> closed_n;
  std::string family;
  std::optional<int> level;
  std::uint64_t seed = 1;
  std::optional<unsigned> threads;
  std::string out;
};

struct PresetArgs {
  std::string name;
  bool list = false;
  pxp::PresetOptions options;
  std::string out = "presets";
  std::optional<unsigned> threads;
};

int cmd_basis(const BasisArgs& args);
int cmd_run(const RunArgs& args);
int cmd_scan(const ScanArgs& args);
int cmd_effective(const EffectiveArgs& args);
int cmd_seqstats(const SeqstatsArgs& args);
int cmd_preset(const PresetArgs& args);

// "name=start:stop:count" or "name=v1,v2,...".
pxp::ScanAxis parse_axis(const std::string& text);

}  // namespace pxpdrive
