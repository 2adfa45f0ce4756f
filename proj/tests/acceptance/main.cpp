#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "pxp/effective.hpp"
#include "pxp/experiments.hpp"
#include "pxp/hilbert.hpp"
#include "pxp/operators.hpp"
#include "pxp/presets.hpp"
#include "pxp/propagator.hpp"
#include "pxp/protocols.hpp"
#include "pxp/seqstats.hpp"

using namespace pxp;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok " : "FAILED ") + what);
  }
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

Outcome exact_freezing() {
  Outcome o;
  double worst3 = 0.0, worst_dip = 0.0;
  for (int L : {6, 8, 10, 12}) {
    const FockBasis basis(L, BoundaryCondition::Periodic);
    DriveRng rng(L);
    for (double T : linspace(0.2, 10.0, 10)) {
      DriveParams p;
      p.w = 1.0;
      p.lambda = 10.0;
      p.period = T;
      p.jitter = 0.0;
      PropagatorCache cache(basis);
      const auto u3 = cycle_unitary_u3(p, draw_cycle_etas(rng, EtaMode::Binary), cache);
      worst3 = std::max(worst3, max_abs_diff(u3.unitary, identity(u3.dimension())));
      const auto dip = dipole_unitaries(p, cache);
      worst_dip = std::max({worst_dip, max_abs_diff(dip.u1.unitary, identity(u3.dimension())),
                            max_abs_diff(dip.u2.unitary, identity(u3.dimension()))});
    }
  }
  o.require(worst3 < 1e-9, "max |U3 - I| = " + num(worst3) + " < 1e-9");
  o.require(worst_dip < 1e-9, "max |U1 - I|, |U2 - I| = " + num(worst_dip) + " < 1e-9");
  return o;
}

Outcome period_independence() {
  Outcome o;
  const FockBasis basis(10, BoundaryCondition::Periodic);
  DriveParams p;
  p.w = 1.0;
  p.lambda = 10.0;
  p.jitter = kPi / 20.0;
  p.period = 1.0;
  p.seed = 2718;
  DriveParams q = p;
  q.period = 3.0;
  PropagatorCache cache(basis);
  double worst_u = 0.0;
  for (int bits = 0; bits < 16; ++bits) {
    Etas eta{};
    for (int i = 0; i < 4; ++i) eta[i] = (bits >> i) & 1 ? 1.0 : -1.0;
    worst_u = std::max(worst_u, max_abs_diff(cycle_unitary_u3(p, eta, cache).unitary,
                                             cycle_unitary_u3(q, eta, cache).unitary));
  }
  const Trajectory a = run_protocol(basis, p, ProtocolKind::U3, 500);
  const Trajectory b = run_protocol(basis, q, ProtocolKind::U3, 500);
  double worst_m = 0.0;
  for (std::size_t m = 0; m <= 500; ++m) {
    worst_m = std::max(worst_m, std::abs(a.records[m].magnetization - b.records[m].magnetization));
  }
  o.require(worst_u < 1e-9, "max |U3(T) - U3(3T)| over 16 etas = " + num(worst_u) + " < 1e-9");
  o.require(worst_m < 1e-8, "max |M_T - M_3T| over 500 cycles = " + num(worst_m) + " < 1e-8");
  return o;
}

// Five realizations per value, averaged before the window mean.
Outcome half_pi_freezing() {
  Outcome o;
  const FockBasis basis(12, BoundaryCondition::Periodic);
  auto mbar = [&](double lambda_dT) {
    DriveParams p;
    p.w = 1.0;
    p.lambda = 10.0;
    p.period = 4.0;
    p.jitter = lambda_dT / p.lambda;
    p.seed = 1;
    return avg_magnetization(run_realizations(basis, p, ProtocolKind::U3, kMagnetizationWindowLast, 5));
  };
  const double m_half = mbar(kPi / 2.0);
  const double m_pi = mbar(kPi);
  const double m_eighth = mbar(kPi / 8.0);
  o.require(std::abs(m_half + 1.0) < 0.1, "lambda dT = pi/2: Mbar = " + num(m_half) + ", |Mbar + 1| < 0.1");
  o.require(std::abs(m_pi + 1.0) < 0.1, "lambda dT = pi: Mbar = " + num(m_pi) + ", |Mbar + 1| < 0.1");
  o.require(std::abs(m_eighth + 1.0) > 0.3, "lambda dT = pi/8: Mbar = " + num(m_eighth) + ", |Mbar + 1| > 0.3");
  return o;
}

Outcome second_order_oracle() {
  Outcome o;
  const int L = 10;
  const double lambda = 10.0;
  const FockBasis basis(L, BoundaryCondition::Periodic);
  const ComplexMatrix c = oracle::commutator_C(L, true, oracle::filtered_states(L, true));
  std::vector<double> x, y;
  for (double ratio : {10.0, 20.0, 40.0}) {
    DriveParams p;
    p.lambda = lambda;
    p.w = lambda / ratio;
    p.jitter = kPi / (2.0 * lambda);
    p.period = 1.0;
    PropagatorCache cache(basis);
    double worst = 0.0;
    for (int bits = 0; bits < 16; ++bits) {
      Etas eta{};
      for (int i = 0; i < 4; ++i) eta[i] = (bits >> i) & 1 ? 1.0 : -1.0;
      const double coeff = (eta[0] - eta[1] + eta[2] - eta[3]) * p.w * p.w / (2.0 * lambda);
      const auto h = extract_heff(cycle_unitary_u3(p, eta, cache), p.jitter).generator;
      worst = std::max(worst, max_abs_diff(h, coeff * c));
    }
    x.push_back(1.0 / ratio);
    y.push_back(worst);
    o.notes.push_back("w/lambda = " + num(1.0 / ratio) + ": distance " + num(worst));
  }
  const double slope = loglog_slope(x, y);
  o.require(slope >= 2.5, "log-log slope " + num(slope) + " >= 2.5");
  return o;
}

Outcome first_order_zeros() {
  Outcome o;
  double worst_zero = 0.0;
  for (double lambda : {1.0, 4.0 * kPi, 7.3}) {
    for (int p = 1; p <= 10; ++p) {
      worst_zero = std::max(worst_zero, std::abs(first_order_A(lambda, 2.0 * kPi * p / lambda)));
      worst_zero = std::max(worst_zero,
                            std::abs(first_order_B_envelope(lambda, 4.0 * kPi / lambda * (p + 0.5))));
    }
  }
  o.require(worst_zero <= 1e-13, "closed forms at the special periods: max " + num(worst_zero) +
                                     " (zero up to rounding of T*, 1e-13)");
  DriveRng rng(20240601);
  const std::vector<int> u4_field{1, 1, -1, -1};
  const std::vector<int> u5_field{1, -1, 1, -1};
  double worst_a = 0.0, worst_b = 0.0;
  int draws = 0;
  while (draws < 100) {
    const double lambda = 0.5 + 19.5 * rng.unit();
    const double T = 0.5 + 9.5 * rng.unit();
    const double dT = kPi / (2.0 * lambda);
    if (4.0 * dT > T) continue;
    ++draws;
    const Etas eta{double(rng.sign()), double(rng.sign()), double(rng.sign()), double(rng.sign())};
    worst_a = std::max(worst_a, std::abs(oracle::zigzag_integral(u4_field, lambda, T, dT, eta) -
                                         first_order_A(lambda, T)));
    worst_b = std::max(worst_b, std::abs(oracle::zigzag_integral(u5_field, lambda, T, dT, eta) -
                                         first_order_B(lambda, T)));
  }
  o.require(worst_a < 1e-10, "u4 quadrature vs closed form over 100 draws: " + num(worst_a) + " < 1e-10");
  o.require(worst_b < 1e-10, "u5 quadrature vs closed form over 100 draws: " + num(worst_b) + " < 1e-10");
  return o;
}

Outcome special_period_ordering() {
  Outcome o;
  const FockBasis basis(10, BoundaryCondition::Periodic);
  const double lambda = 4.0 * kPi;
  auto median_m0 = [&](ProtocolKind kind, double lambda_T_over_4pi) {
    std::vector<double> m0;
    for (std::uint64_t s = 0; s < 5; ++s) {
      DriveParams p;
      p.w = 1.0;
      p.lambda = lambda;
      p.period = lambda_T_over_4pi * 4.0 * kPi / lambda;
      p.jitter = kPi / (2.0 * lambda);
      p.delta_w = 0.02;
      p.seed = derive_seed(1, s);
      m0.push_back(static_cast<double>(
          thermalization_time(run_protocol(basis, p, kind, 2000), default_epsilon(kind)).m0));
    }
    return median(m0);
  };
  const std::pair<ProtocolKind, std::pair<double, double>> rows[] = {
      {ProtocolKind::U4, {0.5, 0.75}},
      {ProtocolKind::U5, {0.5, 1.0}},
  };
  for (const auto& [kind, tr] : rows) {
    const double special = median_m0(kind, tr.first);
    const double mid = median_m0(kind, tr.second);
    o.require(special >= 2.0 * mid, std::string(to_string(kind)) + ": median m0 at lambda T/4pi = " +
                                        num(tr.first) + " is " + num(special) + ", at midpoint " +
                                        num(tr.second) + " is " + num(mid) + "; ratio >= 2");
  }
  return o;
}

Outcome dipolar_ordering() {
  Outcome o;
  const FockBasis basis(10, BoundaryCondition::Periodic);
  DriveParams p;
  p.w = 1.0;
  p.lambda = 1.0;
  p.delta_lambda = 0.01;
  p.period = kPi / 4.0;
  p.seed = 1;
  auto final_f = [&](ProtocolKind kind, std::uint64_t seed) {
    DriveParams q = p;
    q.seed = seed;
    return run_protocol(basis, q, kind, 2000).records.back().fidelity;
  };
  const double tm = final_f(ProtocolKind::DipolarThueMorse, 1);
  const double fib = final_f(ProtocolKind::DipolarFibonacci, 1);
  const double per = final_f(ProtocolKind::DipolarPeriodic, 1);
  std::vector<double> rand;
  for (std::uint64_t s = 0; s < 5; ++s) rand.push_back(final_f(ProtocolKind::DipolarRandom, derive_seed(1, s)));
  const double rand_med = median(rand);
  o.require(tm > fib, "F_TM(2000) = " + num(tm) + " > F_Fib(2000) = " + num(fib));
  o.require(tm > rand_med, "F_TM(2000) > median F_rand(2000) = " + num(rand_med));
  o.require(rand_med > per, "median F_rand(2000) > F_periodic(2000) = " + num(per));
  const Trajectory long_tm = run_protocol(basis, p, ProtocolKind::DipolarThueMorse, 10000);
  double min_f = 1.0;
  for (const auto& r : long_tm.records) min_f = std::min(min_f, r.fidelity);
  o.require(min_f > 0.99, "min F_TM over m <= 10000 = " + num(min_f) + " > 0.99");
  return o;
}

// Projects the full L=3 chain onto its zero-momentum pair and takes the 2x2 log.
PauliCoeffs projected_generator(L3Block block, double w, double lambda, double dl, double T) {
  static const FockBasis basis(3, BoundaryCondition::Periodic);
  ComplexMatrix iso = ComplexMatrix::Zero(4, 2);
  iso(basis.index_of(0u).value(), 0) = 1.0;
  for (std::uint32_t s : {1u, 2u, 4u}) iso(basis.index_of(s).value(), 1) = 1.0 / std::sqrt(3.0);
  DriveParams p;
  p.w = w;
  p.lambda = lambda;
  p.delta_lambda = dl;
  p.period = T;
  PropagatorCache cache(basis);
  const auto dip = dipole_unitaries(p, cache);
  const ComplexMatrix u1 = iso.adjoint() * dip.u1.unitary * iso;
  const ComplexMatrix u2 = iso.adjoint() * dip.u2.unitary * iso;
  switch (block) {
    case L3Block::TMPair: return pauli_decompose(oracle::log_2x2(u1 * u2, 2.0 * T));
    case L3Block::PeriodicPair: return pauli_decompose(oracle::log_2x2(u1 * u1, 2.0 * T));
    case L3Block::SingleU1: break;
  }
  return pauli_decompose(oracle::log_2x2(u1, T));
}

Outcome l3_analytics() {
  Outcome o;
  std::vector<double> dls, offdiag;
  for (int k = 0; k <= 8; ++k) {
    const double dl = 1e-4 * std::pow(10.0, 0.25 * k);
    const PauliCoeffs c = projected_generator(L3Block::TMPair, 1.0, 1.0, dl, 0.05);
    dls.push_back(dl);
    offdiag.push_back(std::hypot(c.x, c.y));
  }
  const double exponent = loglog_slope(dls, offdiag);
  o.require(std::abs(exponent - 2.0) <= 0.1, "(a) off-diagonal exponent in dlambda = " + num(exponent));

  const double wT = 0.05, dl = 1e-3;
  const double y = projected_generator(L3Block::PeriodicPair, 1.0, 1.0, dl, wT).y;
  const double y_ref = -std::sqrt(3.0) * wT * dl / 2.0;
  o.require(std::abs(y - y_ref) <= 0.05 * std::abs(y_ref),
            "(b) tau^y of U1 U1 = " + num(y) + " vs " + num(y_ref) + " within 5%");

  const double root = l3_series_A2_root(1.0, 1.0, 5.5, 7.0, 1e-12);
  o.require(std::abs(root - 2.0 * kPi) <= 1e-8, "(c) A2 root at wT = " + num(root) + " vs 2 pi to 1e-8");
  for (double T : {0.3, 1.0, 2.0}) {
    const PauliCoeffs numeric = projected_generator(L3Block::SingleU1, 1.0, 1.0, 1e-4, T);
    const PauliCoeffs series = l3_single_u1_series(1.0, 1.0, 1e-4, T);
    const double rel_z = std::abs(series.z - numeric.z) / std::abs(numeric.z);
    const double rel_x = std::abs(series.x - numeric.x) / std::abs(numeric.x);
    o.require(rel_z <= 1e-2, "(c) T = " + num(T) + ": A1 " + num(series.z) + " vs numeric " +
                                 num(numeric.z) + " (relative " + num(rel_z) + ")");
    o.require(rel_x <= 1e-2, "(c) T = " + num(T) + ": A2 " + num(series.x) + " vs numeric " +
                                 num(numeric.x) + " (relative " + num(rel_x) + ")");
  }
  return o;
}

Outcome sequence_exactness() {
  Outcome o;
  bool all_equal = true;
  for (int n = 2; n <= 16; ++n) {
    std::size_t total = 0;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) total += oracle::reduced_length(bits, n);
    const Rational ref = Rational(total) / Rational(std::uint64_t{1} << n);
    const Rational closed = avg_reduced_length_closed(n);
    const Rational brute = avg_reduced_length_bruteforce(n, 4);
    if (closed != ref || brute != ref) {
      all_equal = false;
      o.notes.push_back("N = " + std::to_string(n) + " mismatch");
    }
  }
  o.require(all_equal, "A_N closed form = exhaustive enumeration for 2 <= N <= 16");
  o.require(avg_reduced_length_closed(2) == 1 && avg_reduced_length_closed(3) == Rational(3, 2),
            "A_2 = 1 and A_3 = 3/2");
  std::uint64_t fib[24] = {0, 1, 2};
  for (int k = 3; k < 24; ++k) fib[k] = fib[k - 1] + fib[k - 2];
  bool fib_ok = true;
  for (int K = 4; K <= 20; ++K) {
    fib_ok &= protocol_reduced_lengths(SequenceFamily::Fibonacci, K).reduced_length() == fib[K - 3];
  }
  o.require(fib_ok, "Fibonacci level K reduces to F_(K-3) for 4 <= K <= 20");
  bool tm_ok = true;
  for (int K = 2; K <= 14; ++K) tm_ok &= protocol_reduced_lengths(SequenceFamily::ThueMorse, K).reduced_length() == 0;
  o.require(tm_ok, "Thue-Morse levels 2..14 reduce to nothing");
  bool per_ok = true;
  for (int N = 1; N <= 64; ++N) {
    per_ok &= protocol_reduced_lengths(SequenceFamily::Periodic, N).reduced_length() == static_cast<std::size_t>(N);
  }
  o.require(per_ok, "periodic sequences keep their length");
  return o;
}

Outcome hilbert_dimensions() {
  Outcome o;
  bool ok = true;
  for (int L = 2; L <= 20; ++L) {
    for (bool periodic : {true, false}) {
      const FockBasis basis(L, periodic ? BoundaryCondition::Periodic : BoundaryCondition::Open);
      const auto brute = oracle::filtered_states(L, periodic);
      if (basis.dimension() != oracle::recurrence_dimension(L, periodic) || basis.states() != brute) {
        ok = false;
        o.notes.push_back("mismatch at L = " + std::to_string(L));
      }
    }
  }
  o.require(ok, "dimensions and states agree with recurrences and bitmask filtering for L <= 20, both bc");
  return o;
}

std::map<std::string, std::string> snapshot(const std::filesystem::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    files[std::filesystem::relative(e.path(), dir).string()] = os.str();
  }
  return files;
}

Outcome preset_determinism(const std::string& pxpdrive, const std::filesystem::path& work) {
  Outcome o;
  if (pxpdrive.empty()) {
    o.require(false, "no --pxpdrive given");
    return o;
  }
  for (const auto& name : preset_names()) {
    const auto dir = work / "determinism";
    std::filesystem::remove_all(dir);
    std::map<std::string, std::string> first;
    bool ran = true;
    for (int threads : {1, 4}) {
      const std::string cmd = pxpdrive + " preset " + name + " --L 6 --grid 3 --seed 7 --threads " +
                              std::to_string(threads) + " --out " + dir.string() + " > /dev/null";
      ran &= std::system(cmd.c_str()) == 0;
      if (threads == 1) first = snapshot(dir);
    }
    const auto second = snapshot(dir);
    std::size_t csvs = 0;
    for (const auto& [path, _] : first) csvs += path.ends_with(".csv");
    o.require(ran && csvs > 0 && first == second,
              name + ": " + std::to_string(first.size()) + " files (" + std::to_string(csvs) +
                  " CSV) identical across reruns with 1 and 4 threads");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string pxpdrive;
  std::string workdir = "acceptance_work";
  std::vector<int> only;
  app.add_option("--pxpdrive", pxpdrive, "path to the pxpdrive binary");
  app.add_option("--workdir", workdir, "scratch directory");
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);
  std::filesystem::create_directories(workdir);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact freezing", exact_freezing},
      {"period independence", period_independence},
      {"pi/2 freezing family", half_pi_freezing},
      {"second-order generator", second_order_oracle},
      {"first-order vanishing", first_order_zeros},
      {"special-period ordering", special_period_ordering},
      {"dipolar ordering", dipolar_ordering},
      {"L=3 analytics", l3_analytics},
      {"sequence reduction exactness", sequence_exactness},
      {"Hilbert-space dimensions", hilbert_dimensions},
      {"preset determinism", [&] { return preset_determinism(pxpdrive, workdir); }},
  };
  const std::set<int> selected(only.begin(), only.end());
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.contains(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += out.pass ? 0 : 1;
    std::cout << "criterion " << id << " (" << criteria[i].first << "): " << (out.pass ? "PASS" : "FAIL")
              << " [" << num(secs) << " s]\n";
    for (const auto& n : out.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
  }
  std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
