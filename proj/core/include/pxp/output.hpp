#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "pxp/config.hpp"
#include "pxp/effective.hpp"
#include "pxp/experiments.hpp"
#include "pxp/protocols.hpp"

namespace pxp {

void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
void write_scan_csv(std::ostream& os, const ScanResult& result);
void write_check_csv(std::ostream& os, const std::vector<CheckRow>& rows);

// Scan description as config entries so the sidecar can rebuild it.
RunConfig scan_base_config(const ScanSpec& spec);

std::string trajectory_meta_json(const RunConfig& config, const Trajectory& traj);
std::string scan_meta_json(const ScanSpec& spec, const std::string& out);

// "<out>" with a trailing ".csv" removed.
std::filesystem::path output_stem(const std::filesystem::path& out);

// Writes <stem>.csv and <stem>.meta.json; returns the CSV path.
std::filesystem::path emit_trajectory(const RunConfig& config, const Trajectory& traj);
std::filesystem::path emit_scan(const ScanSpec& spec, const ScanResult& result,
                                const std::filesystem::path& out);

// Reads back the scan description written by emit_scan.
ScanSpec read_scan_meta(const std::filesystem::path& path);

}  // namespace pxp
