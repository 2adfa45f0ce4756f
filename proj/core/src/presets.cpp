#include "pxp/presets.hpp"

#include <numbers>

#include "pxp/error.hpp"

namespace pxp {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<ProtocolKind, 4> kDipolar{
    ProtocolKind::DipolarPeriodic,
    ProtocolKind::DipolarRandom,
    ProtocolKind::DipolarFibonacci,
    ProtocolKind::DipolarThueMorse,
};

struct Defaults {
  int length;
  std::size_t cycles;
  std::size_t grid;
  std::uint64_t seed;
};

Defaults resolve(const PresetOptions& o, std::size_t cycles) {
  return Defaults{o.length.value_or(12), o.cycles.value_or(cycles), o.grid.value_or(12),
                  o.seed.value_or(1)};
}

RunConfig base_run(ProtocolKind kind, const Defaults& d) {
  RunConfig c;
  c.protocol = kind;
  c.length = d.length;
  c.cycles = d.cycles;
  c.drive.seed = d.seed;
  return c;
}

ScanSpec base_scan(ProtocolKind kind, const DriveParams& drive, const Defaults& d,
                   ScanMetric metric) {
  ScanSpec s;
  s.kind = kind;
  s.base = drive;
  s.base.seed = d.seed;
  s.length = d.length;
  s.cycles = d.cycles;
  s.metric = metric;
  s.epsilon = default_epsilon(kind);
  return s;
}

DriveParams dipolar_drive(double wT, double dlambda) {
  DriveParams p;
  p.w = 1.0;
  p.lambda = 1.0;
  p.period = wT;
  p.jitter = 0.0;
  p.delta_lambda = dlambda;
  return p;
}

Preset fig1(const PresetOptions& o) {
  const Defaults d = resolve(o, 1050);
  Preset p{"fig1", "u3 freezing at lambda dT = p pi/2: M(m) at lambda dT = pi/2, pi/8 and the M-bar map",
           {}, {}};
  for (const auto& [label, ldT] : {std::pair{"m_lambda_dT_pi_over_2", kPi / 2.0},
                                   std::pair{"m_lambda_dT_pi_over_8", kPi / 8.0}}) {
    RunConfig c = base_run(ProtocolKind::U3, d);
    c.drive.w = 1.0;
    c.drive.lambda = 10.0;
    c.drive.period = 4.0;
    c.drive.jitter = ldT / c.drive.lambda;
    p.trajectories.push_back({label, c});
  }
  DriveParams drive;
  drive.w = 1.0;
  drive.lambda = 10.0;
  drive.period = 4.0;
  ScanSpec s = base_scan(ProtocolKind::U3, drive, d, ScanMetric::AvgMagnetization);
  s.axis1 = {"w_dT_over_hbar", linspace(0.02, 0.5, d.grid)};
  s.axis2 = {"lambda_over_w", linspace(2.0, 20.0, d.grid)};
  p.scans.push_back({"mbar_map", s});
  return p;
}

Preset fig2(const PresetOptions& o) {
  const Defaults d = resolve(o, 2000);
  const double w_dT = o.w_dT.value_or(0.5);
  Preset p{"fig2", "u4 thermalization time over (lambda/w, wT) for dw/w = 0, 0.05, 0.1, 0.2", {}, {}};
  for (const auto& [label, dw] : {std::pair{"m0_dw_0", 0.0}, std::pair{"m0_dw_0.05", 0.05},
                                  std::pair{"m0_dw_0.1", 0.1}, std::pair{"m0_dw_0.2", 0.2}}) {
    DriveParams drive;
    drive.w = 1.0;
    drive.delta_w = dw;
    drive.delta_lambda = 0.0;
    drive.jitter = w_dT / drive.w;
    ScanSpec s = base_scan(ProtocolKind::U4, drive, d, ScanMetric::ThermalizationTime);
    s.axis1 = {"lambda_over_w", linspace(1.0, 20.0, d.grid)};
    s.axis2 = {"wT_over_hbar", linspace(4.0 * w_dT, 20.0, d.grid)};
    p.scans.push_back({label, s});
  }
  return p;
}

Preset fig3(const PresetOptions& o, ProtocolKind kind, const char* name) {
  const Defaults d = resolve(o, 2000);
  Preset p{name, std::string(to_string(kind)) +
                     " thermalization time over (lambda T/(4 pi), dw/w) at lambda/w = 4 pi, lambda dT = pi/2",
           {}, {}};
  DriveParams drive;
  drive.w = 1.0;
  drive.lambda = 4.0 * kPi;
  drive.jitter = kPi / (2.0 * drive.lambda);
  ScanSpec s = base_scan(kind, drive, d, ScanMetric::ThermalizationTime);
  const std::size_t rows = 2 * d.grid + 1;
  s.axis1 = {"lambda_T_over_4pi", linspace(0.5, 0.5 + 0.25 * static_cast<double>(rows - 1), rows)};
  s.axis2 = {"dw_over_w", linspace(0.0, 0.2, d.grid)};
  p.scans.push_back({"m0_map", s});
  return p;
}

Preset fig4(const PresetOptions& o) {
  const Defaults d = resolve(o, 2000);
  Preset p{"fig4", "dipolar M(m) at wT = pi/2 and thermalization time vs dlambda at omega_D/w = 1, 2, 3",
           {}, {}};
  for (ProtocolKind kind : kDipolar) {
    RunConfig c = base_run(kind, d);
    c.drive = dipolar_drive(kPi / 2.0, 0.01);
    c.drive.seed = d.seed;
    p.trajectories.push_back({"m_" + std::string(to_string(kind)), c});
  }
  for (ProtocolKind kind : kDipolar) {
    ScanSpec s = base_scan(kind, dipolar_drive(1.0, 0.0), d, ScanMetric::ThermalizationTime);
    s.axis1 = {"dlambda_over_w", linspace(0.001, 0.03, d.grid)};
    s.axis2 = {"hbar_omegaD_over_w", {1.0, 2.0, 3.0}};
    p.scans.push_back({"m0_" + std::string(to_string(kind)), s});
  }
  return p;
}

Preset fidelity_preset(const PresetOptions& o, const char* name, double wT, const char* wT_label,
                       std::size_t cycles) {
  const Defaults d = resolve(o, cycles);
  Preset p{name,
           std::string("dipolar fidelity F(m) for the four sequences at wT = ") + wT_label +
               ", dlambda/w = 0.01, lambda/w = 1",
           {},
           {}};
  for (ProtocolKind kind : kDipolar) {
    RunConfig c = base_run(kind, d);
    c.drive = dipolar_drive(wT, 0.01);
    c.drive.seed = d.seed;
    p.trajectories.push_back({"f_" + std::string(to_string(kind)), c});
  }
  return p;
}

Preset fig7(const PresetOptions& o) {
  const Defaults d = resolve(o, 2500);
  Preset p{"fig7", "dipolar averaged fidelity over (dlambda/w, wT) for the four sequences", {}, {}};
  for (ProtocolKind kind : kDipolar) {
    ScanSpec s = base_scan(kind, dipolar_drive(1.0, 0.0), d, ScanMetric::AvgFidelity);
    s.axis1 = {"dlambda_over_w", linspace(0.001, 0.03, d.grid)};
    s.axis2 = {"wT_over_hbar", linspace(0.5, 10.0, d.grid)};
    p.scans.push_back({"fav_" + std::string(to_string(kind)), s});
  }
  return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig1", "fig2", "fig3a", "fig3b",
                                              "fig4", "fig5", "fig6",  "fig7"};
  return names;
}

Preset make_preset(std::string_view name, const PresetOptions& options) {
  if (options.grid && *options.grid < 1) throw ValidationError("grid: must be at least 1");
  if (name == "fig1") return fig1(options);
  if (name == "fig2") return fig2(options);
  if (name == "fig3a") return fig3(options, ProtocolKind::U5, "fig3a");
  if (name == "fig3b") return fig3(options, ProtocolKind::U4, "fig3b");
  if (name == "fig4") return fig4(options);
  if (name == "fig5") return fidelity_preset(options, "fig5", kPi, "pi", 2000);
  if (name == "fig6") return fidelity_preset(options, "fig6", kPi / 4.0, "pi/4", 10000);
  if (name == "fig7") return fig7(options);
  throw ValidationError("unknown preset '" + std::string(name) + "'");
}

}  // namespace pxp
