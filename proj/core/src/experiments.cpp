#include "pxp/experiments.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "pxp/error.hpp"

namespace pxp {

double avg_magnetization(const Trajectory& traj) {
  if (traj.cycles() < kMagnetizationWindowLast) {
    throw ValidationError("avg_magnetization: trajectory has " + std::to_string(traj.cycles()) +
                          " cycles, needs at least " + std::to_string(kMagnetizationWindowLast));
  }
  double acc = 0.0;
  for (std::size_t m = kMagnetizationWindowFirst; m <= kMagnetizationWindowLast; ++m) {
    acc += traj.records[m].magnetization;
  }
  return acc / static_cast<double>(kMagnetizationWindowLast - kMagnetizationWindowFirst + 1);
}

double avg_fidelity(const Trajectory& traj) {
  if (traj.cycles() < kFidelityWindowLast) {
    throw ValidationError("avg_fidelity: trajectory has " + std::to_string(traj.cycles()) +
                          " cycles, needs at least " + std::to_string(kFidelityWindowLast));
  }
  double acc = 0.0;
  for (std::size_t m = 1; m <= kFidelityWindowLast; ++m) acc += traj.records[m].fidelity;
  return acc / static_cast<double>(kFidelityWindowLast);
}

ThermalizationTime thermalization_time(const Trajectory& traj, double epsilon) {
  if (!(epsilon > 0.0)) throw ValidationError("thermalization_time: epsilon must be positive");
  if (traj.records.empty()) throw ValidationError("thermalization_time: empty trajectory");
  const double m_initial = traj.records.front().magnetization;
  if (m_initial == 0.0) throw ValidationError("thermalization_time: M(0) is zero");
  for (std::size_t k = 1; k < traj.records.size(); ++k) {
    if (std::abs(traj.records[k].magnetization / m_initial - 1.0) >= epsilon) {
      return {traj.records[k].m, false};
    }
  }
  return {traj.records.back().m, true};
}

double default_epsilon(ProtocolKind kind) { return is_dipolar(kind) ? 0.05 : 0.1; }

std::uint64_t realization_seed(std::uint64_t master, std::size_t r) {
  return r == 0 ? master : derive_seed(master, r);
}

Trajectory run_realizations(const FockBasis& basis, const DriveParams& params, ProtocolKind kind,
                            std::size_t m_max, std::size_t realizations) {
  if (realizations < 1) throw ValidationError("realizations must be at least 1");
  Trajectory sum = run_protocol(basis, params, kind, m_max);
  for (std::size_t r = 1; r < realizations; ++r) {
    DriveParams p = params;
    p.seed = realization_seed(params.seed, r);
    const Trajectory t = run_protocol(basis, p, kind, m_max);
    for (std::size_t m = 0; m < sum.records.size(); ++m) {
      sum.records[m].magnetization += t.records[m].magnetization;
      sum.records[m].fidelity += t.records[m].fidelity;
    }
    sum.max_norm_drift = std::max(sum.max_norm_drift, t.max_norm_drift);
  }
  if (realizations > 1) {
    for (auto& rec : sum.records) {
      rec.magnetization /= static_cast<double>(realizations);
      rec.fidelity /= static_cast<double>(realizations);
    }
  }
  sum.realizations = realizations;
  return sum;
}

std::string_view to_string(ScanMetric metric) {
  switch (metric) {
    case ScanMetric::ThermalizationTime: return "m0";
    case ScanMetric::AvgMagnetization: return "mbar";
    case ScanMetric::AvgFidelity: return "fav";
  }
  return "?";
}

std::optional<ScanMetric> parse_metric(std::string_view token) {
  if (token == "m0") return ScanMetric::ThermalizationTime;
  if (token == "mbar") return ScanMetric::AvgMagnetization;
  if (token == "fav") return ScanMetric::AvgFidelity;
  return std::nullopt;
}

std::vector<double> linspace(double first, double last, std::size_t count) {
  if (count == 0) throw ValidationError("linspace: count must be positive");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = first;
    return out;
  }
  const double step = (last - first) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + step * static_cast<double>(i);
  out.back() = last;
  return out;
}

const std::vector<std::string>& axis_names() {
  static const std::vector<std::string> names{
      "w",          "lambda",           "dw",           "dlambda",
      "T",          "dT",               "lambda_over_w", "wT_over_hbar",
      "w_dT_over_hbar", "lambda_dT_over_hbar", "lambda_T_over_4pi", "dw_over_w",
      "dlambda_over_w", "hbar_omegaD_over_w",
  };
  return names;
}

void apply_axis(std::string_view name, double value, DriveParams& p) {
  constexpr double pi = std::numbers::pi;
  if (name == "w") p.w = value;
  else if (name == "lambda") p.lambda = value;
  else if (name == "dw") p.delta_w = value;
  else if (name == "dlambda") p.delta_lambda = value;
  else if (name == "T") p.period = value;
  else if (name == "dT") p.jitter = value;
  else if (name == "lambda_over_w") p.lambda = value * p.w;
  else if (name == "wT_over_hbar") p.period = value / p.w;
  else if (name == "w_dT_over_hbar") p.jitter = value / p.w;
  else if (name == "lambda_dT_over_hbar") p.jitter = value / p.lambda;
  else if (name == "lambda_T_over_4pi") p.period = value * 4.0 * pi / p.lambda;
  else if (name == "dw_over_w") p.delta_w = value * p.w;
  else if (name == "dlambda_over_w") p.delta_lambda = value * p.w;
  else if (name == "hbar_omegaD_over_w") p.period = 2.0 * pi / (value * p.w);
  else throw ValidationError("unknown scan axis '" + std::string(name) + "'");
}

namespace {

ScanCell evaluate_cell(const ScanSpec& spec, const FockBasis& basis, std::size_t index) {
  const std::size_t n2 = spec.axis2.values.size();
  ScanCell cell;
  cell.axis1 = spec.axis1.values[index / n2];
  cell.axis2 = spec.axis2.values[index % n2];
  cell.seed = derive_seed(spec.base.seed, index);
  try {
    DriveParams p = spec.base;
    apply_axis(spec.axis1.name, cell.axis1, p);
    apply_axis(spec.axis2.name, cell.axis2, p);
    p.seed = cell.seed;
    const Trajectory traj = run_realizations(basis, p, spec.kind, spec.cycles, spec.realizations);
    switch (spec.metric) {
      case ScanMetric::ThermalizationTime: {
        const auto t = thermalization_time(traj, spec.epsilon);
        cell.metric = static_cast<double>(t.m0);
        cell.censored = t.censored;
        break;
      }
      case ScanMetric::AvgMagnetization: cell.metric = avg_magnetization(traj); break;
      case ScanMetric::AvgFidelity: cell.metric = avg_fidelity(traj); break;
    }
  } catch (const std::exception& e) {
    cell.metric = std::nan("");
    cell.error = e.what();
  }
  return cell;
}

}  // namespace

ScanResult scan_2d(const ScanSpec& spec, unsigned threads) {
  if (spec.axis1.values.empty() || spec.axis2.values.empty()) {
    throw ValidationError("scan_2d: both axes need at least one value");
  }
  for (const ScanAxis* axis : {&spec.axis1, &spec.axis2}) {
    DriveParams probe = spec.base;
    apply_axis(axis->name, axis->values.front(), probe);
  }
  if (spec.metric == ScanMetric::AvgMagnetization && spec.cycles < kMagnetizationWindowLast) {
    throw ValidationError("cycles: metric mbar needs at least 1050 cycles");
  }
  if (spec.metric == ScanMetric::AvgFidelity && spec.cycles < kFidelityWindowLast) {
    throw ValidationError("cycles: metric fav needs at least 2500 cycles");
  }
  if (!(spec.epsilon > 0.0)) throw ValidationError("epsilon: must be positive");

  const FockBasis basis(spec.length, spec.bc);
  ScanResult result;
  result.spec = spec;
  const std::size_t total = spec.axis1.values.size() * spec.axis2.values.size();
  result.cells.resize(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      result.cells[k] = evaluate_cell(spec, basis, k);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return result;
}

}  // namespace pxp
