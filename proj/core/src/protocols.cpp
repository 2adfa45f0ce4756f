#include "pxp/protocols.hpp"

#include <cmath>
#include <sstream>

#include "pxp/error.hpp"
#include "pxp/observables.hpp"

namespace pxp {

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::U3: return "u3";
    case ProtocolKind::U4: return "u4";
    case ProtocolKind::U5: return "u5";
    case ProtocolKind::DipolarPeriodic: return "dp-periodic";
    case ProtocolKind::DipolarRandom: return "dp-random";
    case ProtocolKind::DipolarFibonacci: return "dp-fib";
    case ProtocolKind::DipolarThueMorse: return "dp-tm";
  }
  return "?";
}

std::optional<ProtocolKind> parse_protocol(std::string_view token) {
  for (ProtocolKind k : kAllProtocols) {
    if (to_string(k) == token) return k;
  }
  return std::nullopt;
}

std::string_view to_string(EtaMode mode) { return mode == EtaMode::Binary ? "binary" : "uniform"; }

std::optional<EtaMode> parse_eta_mode(std::string_view token) {
  if (token == "binary") return EtaMode::Binary;
  if (token == "uniform") return EtaMode::Uniform;
  return std::nullopt;
}

bool is_dipolar(ProtocolKind kind) {
  return kind != ProtocolKind::U3 && kind != ProtocolKind::U4 && kind != ProtocolKind::U5;
}

std::vector<std::string> DriveParams::validate(ProtocolKind kind) const {
  auto fail = [](const std::string& key, const std::string& why) {
    throw ValidationError(key + ": " + why);
  };
  const std::pair<const char*, double> fields[] = {
      {"w", w},         {"lambda", lambda}, {"dw", delta_w},
      {"dlambda", delta_lambda}, {"T", period},  {"dT", jitter},
  };
  for (const auto& [key, value] : fields) {
    if (!std::isfinite(value)) fail(key, "must be finite");
  }
  if (!(period > 0.0)) fail("T", "must be positive");
  std::vector<std::string> warnings;
  if (is_dipolar(kind)) return warnings;
  if (jitter < 0.0) fail("dT", "must be non-negative");
  if (jitter > period / 4.0) {
    std::ostringstream os;
    os.precision(17);
    os << "requires dT <= T/4 so every pulse has non-negative length (dT=" << jitter
       << ", T/4=" << period / 4.0 << ")";
    fail("dT", os.str());
  }
  if (jitter > period / 8.0) warnings.emplace_back("dT exceeds T/8; pulses are strongly modulated");
  if (kind == ProtocolKind::U3 && (delta_w != 0.0 || delta_lambda != 0.0)) {
    fail(delta_w != 0.0 ? "dw" : "dlambda", "protocol u3 requires dw = dlambda = 0");
  }
  return warnings;
}

std::vector<double> draw_etas(DriveRng& rng, std::size_t n, EtaMode mode) {
  if (n < 1) throw ValidationError("draw_etas: n must be at least 1");
  std::vector<double> out(n);
  for (double& e : out) e = mode == EtaMode::Binary ? rng.sign() : rng.uniform_pm1();
  return out;
}

Etas draw_cycle_etas(DriveRng& rng, EtaMode mode) {
  Etas out{};
  for (double& e : out) e = mode == EtaMode::Binary ? rng.sign() : rng.uniform_pm1();
  return out;
}

namespace {

constexpr std::array<std::pair<int, int>, 4> kU3Signs{{{-1, -1}, {1, 1}, {1, -1}, {-1, 1}}};
constexpr std::array<std::pair<int, int>, 4> kU4Signs{{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};
constexpr std::array<std::pair<int, int>, 4> kU5Signs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

PulseParams pulse(int a, int b, const DriveParams& p, bool with_offsets) {
  return PulseParams{a, b, p.w, p.lambda, with_offsets ? p.delta_w : 0.0,
                     with_offsets ? p.delta_lambda : 0.0};
}

}  // namespace

std::array<Pulse, 4> cycle_pulses(ProtocolKind kind, const DriveParams& params, const Etas& eta) {
  const std::array<std::pair<int, int>, 4>* signs = nullptr;
  switch (kind) {
    case ProtocolKind::U3: signs = &kU3Signs; break;
    case ProtocolKind::U4: signs = &kU4Signs; break;
    case ProtocolKind::U5: signs = &kU5Signs; break;
    default: throw ValidationError("cycle_pulses: " + std::string(to_string(kind)) +
                                   " is not a random-period protocol");
  }
  if (kind == ProtocolKind::U3 && (params.delta_w != 0.0 || params.delta_lambda != 0.0)) {
    throw ValidationError("u3 cycle requires dw = dlambda = 0");
  }
  std::array<Pulse, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [a, b] = (*signs)[i];
    out[i] = Pulse{pulse(a, b, params, kind != ProtocolKind::U3),
                   params.period / 4.0 + eta[i] * params.jitter};
  }
  return out;
}

Propagator cycle_unitary(ProtocolKind kind, const DriveParams& params, const Etas& eta,
                         PropagatorCache& cache) {
  const auto pulses = cycle_pulses(kind, params, eta);
  Propagator out = cache.get(pulses[0].params, pulses[0].duration);
  out.params.reset();
  for (std::size_t i = 1; i < 4; ++i) {
    out.unitary = cache.get(pulses[i].params, pulses[i].duration).unitary * out.unitary;
    out.duration += pulses[i].duration;
  }
  return out;
}

Propagator cycle_unitary_u3(const DriveParams& params, const Etas& eta, PropagatorCache& cache) {
  return cycle_unitary(ProtocolKind::U3, params, eta, cache);
}

Propagator cycle_unitary_u4(const DriveParams& params, const Etas& eta, PropagatorCache& cache) {
  return cycle_unitary(ProtocolKind::U4, params, eta, cache);
}

Propagator cycle_unitary_u5(const DriveParams& params, const Etas& eta, PropagatorCache& cache) {
  return cycle_unitary(ProtocolKind::U5, params, eta, cache);
}

std::array<Pulse, 2> dipole_pulses(int sign, const DriveParams& params) {
  if (sign != 1 && sign != -1) throw ValidationError("dipole_pulses: sign must be +1 or -1");
  const double quarter = params.period / 4.0;
  return {Pulse{pulse(sign, 1, params, true), quarter},
          Pulse{pulse(sign, -1, params, true), quarter}};
}

DipoleUnitaries dipole_unitaries(const DriveParams& params, PropagatorCache& cache) {
  auto build = [&](int sign) {
    const auto pulses = dipole_pulses(sign, params);
    const Propagator& first = cache.get(pulses[0].params, pulses[0].duration);
    const Propagator& second = cache.get(pulses[1].params, pulses[1].duration);
    return compose({&first, &second});
  };
  DipoleUnitaries out;
  out.u_plus = build(1);
  out.u_minus = build(-1);
  out.u1 = compose({&out.u_minus, &out.u_plus});
  out.u2 = compose({&out.u_plus, &out.u_minus});
  return out;
}

SymbolSequence sequence_symbols(ProtocolKind kind, std::size_t m, std::uint64_t seed) {
  if (m < 1) throw ValidationError("sequence_symbols: m must be at least 1");
  switch (kind) {
    case ProtocolKind::DipolarPeriodic: return SymbolSequence(m, 1);
    case ProtocolKind::DipolarRandom: {
      DriveRng rng(seed);
      SymbolSequence out(m);
      for (int& s : out) s = rng.symbol();
      return out;
    }
    case ProtocolKind::DipolarFibonacci: return fibonacci_prefix(m);
    case ProtocolKind::DipolarThueMorse: return thue_morse_prefix(m);
    default:
      throw ValidationError("sequence_symbols: " + std::string(to_string(kind)) +
                            " is not a dipolar protocol");
  }
}

DriveProgram build_drive_program(ProtocolKind kind, const DriveParams& params, std::size_t cycles) {
  params.validate(kind);
  DriveProgram program;
  program.kind = kind;
  program.cycles = cycles;
  if (cycles == 0) return program;
  if (is_dipolar(kind)) {
    program.symbols = sequence_symbols(kind, cycles, params.seed);
    program.plus_pulses = dipole_pulses(1, params);
    program.minus_pulses = dipole_pulses(-1, params);
    return program;
  }
  DriveRng rng(params.seed);
  program.pulses.reserve(4 * cycles);
  for (std::size_t m = 0; m < cycles; ++m) {
    const auto pulses = cycle_pulses(kind, params, draw_cycle_etas(rng, params.eta_mode));
    program.pulses.insert(program.pulses.end(), pulses.begin(), pulses.end());
  }
  return program;
}

Trajectory run_protocol(const FockBasis& basis, const DriveParams& params, ProtocolKind kind,
                        std::size_t m_max, const RunOptions& options) {
  const DriveProgram program = build_drive_program(kind, params, m_max);
  Trajectory traj;
  traj.kind = kind;
  traj.params = params;
  traj.length = basis.length();
  traj.bc = basis.boundary();
  traj.records.reserve(m_max + 1);

  const StateVector initial = all_down_state(basis);
  StateVector state = initial;
  StateVector scratch(state.size());

  auto record = [&](std::size_t m) {
    const double drift = std::abs(state.squaredNorm() - 1.0);
    traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
    if (drift > options.norm_tolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "norm drift " << drift << " exceeds " << options.norm_tolerance << " at cycle " << m
         << " (protocol " << to_string(kind) << ", L=" << basis.length() << ", seed "
         << params.seed << ")";
      throw RuntimeFailure(os.str());
    }
    traj.records.push_back(CycleRecord{m, magnetization(basis, state), fidelity(state, initial)});
    if (options.snapshot_interval > 0 && m % options.snapshot_interval == 0) {
      traj.snapshots.emplace_back(m, state);
    }
    for (const auto& observer : options.observers) observer(m, state);
  };

  record(0);
  const bool reuse = params.eta_mode == EtaMode::Binary || is_dipolar(kind);
  PropagatorCache cache(basis, reuse);
  if (is_dipolar(kind)) {
    const DipoleUnitaries dip = dipole_unitaries(params, cache);
    for (std::size_t m = 1; m <= m_max; ++m) {
      const ComplexMatrix& u = program.symbols[m - 1] == 1 ? dip.u1.unitary : dip.u2.unitary;
      evolve_in_place(state, u, scratch);
      record(m);
    }
  } else {
    for (std::size_t m = 1; m <= m_max; ++m) {
      for (std::size_t i = 4 * (m - 1); i < 4 * m; ++i) {
        cache.apply(program.pulses[i].params, program.pulses[i].duration, state, scratch);
      }
      record(m);
    }
  }
  return traj;
}

}  // namespace pxp
