#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pxp/hilbert.hpp"
#include "pxp/protocols.hpp"

namespace pxp {

inline constexpr std::size_t kMagnetizationWindowFirst = 950;
inline constexpr std::size_t kMagnetizationWindowLast = 1050;
inline constexpr std::size_t kFidelityWindowLast = 2500;

// Mean of M(m) over m = 950..1050 inclusive (101 samples).
double avg_magnetization(const Trajectory& traj);

// Mean of F(m) over m = 1..2500.
double avg_fidelity(const Trajectory& traj);

struct ThermalizationTime {
  std::size_t m0 = 0;
  bool censored = false;
};

// First m with |M(m)/M(0) - 1| >= epsilon; censored at the last cycle otherwise.
ThermalizationTime thermalization_time(const Trajectory& traj, double epsilon);

// 0.1 for random-period protocols, 0.05 for dipolar ones.
double default_epsilon(ProtocolKind kind);

std::uint64_t realization_seed(std::uint64_t master, std::size_t r);

// Averages M(m) and F(m) over `realizations` independent seeds; the first
// realization uses params.seed itself.
Trajectory run_realizations(const FockBasis& basis, const DriveParams& params, ProtocolKind kind,
                            std::size_t m_max, std::size_t realizations);

enum class ScanMetric { ThermalizationTime, AvgMagnetization, AvgFidelity };

std::string_view to_string(ScanMetric metric);
std::optional<ScanMetric> parse_metric(std::string_view token);

struct ScanAxis {
  std::string name;
  std::vector<double> values;
};

std::vector<double> linspace(double first, double last, std::size_t count);

// Axis names map a dimensionless grid value onto DriveParams, e.g.
// lambda_over_w sets lambda = value * w. Axes are applied in order.
const std::vector<std::string>& axis_names();
void apply_axis(std::string_view name, double value, DriveParams& params);

struct ScanSpec {
  ProtocolKind kind = ProtocolKind::U4;
  DriveParams base;
  int length = 12;
  BoundaryCondition bc = BoundaryCondition::Periodic;
  ScanAxis axis1;
  ScanAxis axis2;
  ScanMetric metric = ScanMetric::ThermalizationTime;
  std::size_t cycles = 2000;
  std::size_t realizations = 1;
  double epsilon = 0.1;
};

struct ScanCell {
  double axis1 = 0.0;
  double axis2 = 0.0;
  double metric = 0.0;
  bool censored = false;
  std::uint64_t seed = 0;
  std::string error;  // empty on success
};

struct ScanResult {
  ScanSpec spec;
  std::vector<ScanCell> cells;  // axis1 outer, axis2 inner
};

// Cell k runs with seed derive_seed(spec.base.seed, k); output order never
// depends on the thread count.
ScanResult scan_2d(const ScanSpec& spec, unsigned threads);

}  // namespace pxp
