#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pxp/hilbert.hpp"
#include "pxp/operators.hpp"
#include "pxp/propagator.hpp"
#include "pxp/sequences.hpp"

namespace pxp {

enum class EtaMode { Binary, Uniform };

enum class ProtocolKind {
  U3,
  U4,
  U5,
  DipolarPeriodic,
  DipolarRandom,
  DipolarFibonacci,
  DipolarThueMorse,
};

inline constexpr std::array<ProtocolKind, 7> kAllProtocols{
    ProtocolKind::U3,
    ProtocolKind::U4,
    ProtocolKind::U5,
    ProtocolKind::DipolarPeriodic,
    ProtocolKind::DipolarRandom,
    ProtocolKind::DipolarFibonacci,
    ProtocolKind::DipolarThueMorse,
};

std::string_view to_string(ProtocolKind kind);
std::optional<ProtocolKind> parse_protocol(std::string_view token);
std::string_view to_string(EtaMode mode);
std::optional<EtaMode> parse_eta_mode(std::string_view token);
bool is_dipolar(ProtocolKind kind);

struct DriveParams {
  double w = 1.0;
  double lambda = 1.0;
  double delta_w = 0.0;
  double delta_lambda = 0.0;
  double period = 1.0;  // T
  double jitter = 0.0;  // dT; pulse i lasts T/4 + eta_i dT
  EtaMode eta_mode = EtaMode::Binary;
  std::uint64_t seed = 0;

  // Throws ValidationError naming the offending field; returns warnings.
  std::vector<std::string> validate(ProtocolKind kind) const;

  friend bool operator==(const DriveParams&, const DriveParams&) = default;
};

using Etas = std::array<double, 4>;

std::vector<double> draw_etas(DriveRng& rng, std::size_t n, EtaMode mode);
Etas draw_cycle_etas(DriveRng& rng, EtaMode mode);

struct Pulse {
  PulseParams params;
  double duration = 0.0;
};

// The four pulses of one random-period cycle, in application order.
std::array<Pulse, 4> cycle_pulses(ProtocolKind kind, const DriveParams& params, const Etas& eta);

Propagator cycle_unitary(ProtocolKind kind, const DriveParams& params, const Etas& eta,
                         PropagatorCache& cache);
Propagator cycle_unitary_u3(const DriveParams& params, const Etas& eta, PropagatorCache& cache);
Propagator cycle_unitary_u4(const DriveParams& params, const Etas& eta, PropagatorCache& cache);
Propagator cycle_unitary_u5(const DriveParams& params, const Etas& eta, PropagatorCache& cache);

// U_+ (sign=+1) or U_- (sign=-1): the (sign, +1) pulse then the (sign, -1)
// pulse, each for T/4.
std::array<Pulse, 2> dipole_pulses(int sign, const DriveParams& params);

struct DipoleUnitaries {
  Propagator u_plus;
  Propagator u_minus;
  Propagator u1;  // U_+ U_-
  Propagator u2;  // U_- U_+
};

DipoleUnitaries dipole_unitaries(const DriveParams& params, PropagatorCache& cache);

SymbolSequence sequence_symbols(ProtocolKind kind, std::size_t m, std::uint64_t seed);

struct DriveProgram {
  ProtocolKind kind = ProtocolKind::U3;
  std::size_t cycles = 0;
  std::vector<Pulse> pulses;  // random-period kinds, 4 per cycle
  SymbolSequence symbols;     // dipolar kinds, one per cycle
  std::array<Pulse, 2> plus_pulses{};
  std::array<Pulse, 2> minus_pulses{};
};

DriveProgram build_drive_program(ProtocolKind kind, const DriveParams& params, std::size_t cycles);

struct CycleRecord {
  std::size_t m = 0;
  double magnetization = 0.0;
  double fidelity = 0.0;
};

struct Trajectory {
  ProtocolKind kind = ProtocolKind::U3;
  DriveParams params;
  int length = 0;
  BoundaryCondition bc = BoundaryCondition::Periodic;
  std::size_t realizations = 1;
  std::vector<CycleRecord> records;  // m = 0 .. m_max
  std::vector<std::pair<std::size_t, StateVector>> snapshots;
  double max_norm_drift = 0.0;

  std::size_t cycles() const { return records.empty() ? 0 : records.size() - 1; }
};

using CycleObserver = std::function<void(std::size_t m, const StateVector& state)>;

struct RunOptions {
  std::vector<CycleObserver> observers;
  std::size_t snapshot_interval = 0;  // 0 disables snapshots
  double norm_tolerance = 1e-8;
};

// Starts from the all-down state and records M and F after every cycle.
Trajectory run_protocol(const FockBasis& basis, const DriveParams& params, ProtocolKind kind,
                        std::size_t m_max, const RunOptions& options = {});

}  // namespace pxp
