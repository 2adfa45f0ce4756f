#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "pxp/checks.hpp"
#include "pxp/error.hpp"
#include "pxp/experiments.hpp"
#include "pxp/hilbert.hpp"
#include "pxp/output.hpp"
#include "pxp/seqstats.hpp"

namespace pxpdrive {

using namespace pxp;

unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag) {
    if (*flag == 0) throw ValidationError("threads: must be at least 1");
    return *flag;
  }
  if (const char* env = std::getenv("PXP_THREADS"); env && *env) {
    const auto v = parse_uint("PXP_THREADS", env);
    if (v == 0 || v > 4096) throw ValidationError("PXP_THREADS: must be in [1, 4096]");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

RunConfig load_run_config(const RunArgs& args) {
  RunConfig config;
  if (!args.config_file.empty()) apply_settings(config, read_config_file(args.config_file));
  apply_settings(config, args.overrides);
  print_warnings(validate_config(config));
  return config;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary | std::ios::trunc);
  if (!file) throw RuntimeFailure("cannot write " + path);
  return file;
}

std::string to_text(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

ScanResult run_scan_job(const ScanSpec& spec, unsigned threads) {
  ScanResult result = scan_2d(spec, threads);
  std::size_t failed = 0;
  for (const auto& c : result.cells) {
    if (!c.error.empty()) {
      if (failed < 5) {
        std::cerr << "cell (" << format_roundtrip(c.axis1) << ", " << format_roundtrip(c.axis2)
                  << ") failed: " << c.error << '\n';
      }
      ++failed;
    }
  }
  if (failed > 0) std::cerr << failed << " of " << result.cells.size() << " cells failed\n";
  return result;
}

}  // namespace

ScanAxis parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ValidationError("axis: expected name=start:stop:count or name=v1,v2,..., got '" + text + "'");
  }
  ScanAxis axis;
  axis.name = text.substr(0, eq);
  const std::string spec = text.substr(eq + 1);
  DriveParams probe;
  apply_axis(axis.name, 1.0, probe);
  if (spec.find(':') != std::string::npos) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ValidationError("axis " + axis.name + ": expected start:stop:count");
    const double first = parse_double(axis.name, spec.substr(0, c1));
    const double last = parse_double(axis.name, spec.substr(c1 + 1, c2 - c1 - 1));
    const auto count = parse_uint(axis.name, spec.substr(c2 + 1));
    if (count < 1) throw ValidationError("axis " + axis.name + ": count must be positive");
    axis.values = linspace(first, last, count);
  } else {
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      const auto comma = spec.find(',', pos);
      const auto item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      axis.values.push_back(parse_double(axis.name, item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return axis;
}

int cmd_basis(const BasisArgs& args) {
  const auto bc = parse_boundary(args.bc);
  if (!bc) throw ValidationError("bc: expected pbc or obc, got '" + args.bc + "'");
  if (args.length % 2 != 0) std::cerr << "warning: L is odd; the reference numerics use even L\n";
  const FockBasis basis(args.length, *bc);
  std::cout << "L=" << basis.length() << " bc=" << to_string(basis.boundary())
            << " dimension=" << basis.dimension() << '\n';
  if (args.list) {
    for (std::size_t i = 0; i < basis.dimension(); ++i) std::cout << basis.label(i) << '\n';
  }
  return 0;
}

int cmd_run(const RunArgs& args) {
  const RunConfig config = load_run_config(args);
  const FockBasis basis(config.length, config.bc);
  const Trajectory traj = run_realizations(basis, config.drive, config.protocol, config.cycles,
                                           config.realizations);
  const auto csv = emit_trajectory(config, traj);
  const auto th = thermalization_time(traj, config.threshold());
  std::cout << "wrote " << csv.string() << '\n'
            << "final M=" << format_fixed17(traj.records.back().magnetization)
            << " F=" << format_fixed17(traj.records.back().fidelity) << " m0=" << th.m0
            << (th.censored ? " (censored)" : "") << '\n';
  return 0;
}

int cmd_scan(const ScanArgs& args) {
  ScanSpec spec;
  RunConfig base;
  if (!args.meta_file.empty()) {
    spec = read_scan_meta(args.meta_file);
    apply_settings(base, read_config_file(args.meta_file));
  }
  if (!args.run.config_file.empty()) apply_settings(base, read_config_file(args.run.config_file));
  apply_settings(base, args.run.overrides);
  print_warnings(validate_config(base));
  spec.kind = base.protocol;
  spec.base = base.drive;
  spec.length = base.length;
  spec.bc = base.bc;
  spec.cycles = base.cycles;
  spec.realizations = base.realizations;
  spec.epsilon = base.threshold();
  if (!args.axis1.empty()) spec.axis1 = parse_axis(args.axis1);
  if (!args.axis2.empty()) spec.axis2 = parse_axis(args.axis2);
  if (spec.axis1.values.empty() || spec.axis2.values.empty()) {
    throw ValidationError("scan: --axis1 and --axis2 are required without --meta");
  }
  if (args.metric) {
    const auto metric = parse_metric(*args.metric);
    if (!metric) throw ValidationError("metric: expected m0, mbar or fav, got '" + *args.metric + "'");
    spec.metric = *metric;
  } else if (args.meta_file.empty()) {
    spec.metric = ScanMetric::ThermalizationTime;
  }
  const ScanResult result = run_scan_job(spec, resolve_threads(args.threads));
  const auto csv = emit_scan(spec, result, base.out);
  std::cout << "wrote " << csv.string() << " (" << result.cells.size() << " cells)\n";
  return 0;
}

int cmd_effective(const EffectiveArgs& args) {
  CheckOptions options;
  options.length = args.length;
  options.seed = args.seed;
  options.draws = args.draws;
  std::vector<CheckRow> rows;
  if (args.check == "all") {
    for (const auto& name : check_names()) {
      auto more = run_check(name, options);
      rows.insert(rows.end(), more.begin(), more.end());
    }
  } else {
    rows = run_check(args.check, options);
  }
  std::ofstream file;
  write_check_csv(open_out(args.out, file), rows);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.pass ? 0 : 1;
  std::cerr << rows.size() - failed << " of " << rows.size() << " rows pass\n";
  return 0;
}

int cmd_seqstats(const SeqstatsArgs& args) {
  std::ofstream file;
  std::ostream& os = open_out(args.out, file);
  const int modes = (args.bruteforce_n ? 1 : 0) + (args.closed_n ? 1 : 0) + (args.family.empty() ? 0 : 1);
  if (modes != 1) {
    throw ValidationError("seqstats: give exactly one of --bruteforce-N, --closed-N, --protocol");
  }
  if (args.bruteforce_n) {
    const int n_max = *args.bruteforce_n;
    if (n_max < 2 || n_max > kMaxBruteForceLength) {
      throw ValidationError("bruteforce-N: must lie in [2, 20]");
    }
    const unsigned threads = resolve_threads(args.threads);
    os << "N,bruteforce,closed,equal\n";
    for (int n = 2; n <= n_max; ++n) {
      const Rational brute = avg_reduced_length_bruteforce(n, threads);
      const Rational closed = avg_reduced_length_closed(n);
      os << n << ',' << to_text(brute) << ',' << to_text(closed) << ',' << (brute == closed ? 1 : 0)
         << '\n';
    }
  } else if (args.closed_n) {
    const Rational a = avg_reduced_length_closed(*args.closed_n);
    const Rational ratio = a / *args.closed_n;
    os << "N,closed,closed_over_N\n"
       << *args.closed_n << ',' << to_text(a) << ',' << format_fixed17(static_cast<double>(ratio))
       << '\n';
  } else {
    const auto family = parse_family(args.family);
    if (!family) throw ValidationError("protocol: expected tm, fib, periodic or random");
    if (!args.level) throw ValidationError("level: required with --protocol");
    const ReductionReport r = protocol_reduced_lengths(*family, *args.level, args.seed);
    os << "protocol,level,input_length,reduced_length,reduced\n"
       << to_string(*family) << ',' << *args.level << ',' << r.input_length << ','
       << r.reduced_length() << ',';
    for (int s : r.reduced) os << s;
    os << '\n';
  }
  return 0;
}

int cmd_preset(const PresetArgs& args) {
  if (args.list) {
    for (const auto& name : preset_names()) {
      std::cout << name << ": " << make_preset(name).summary << '\n';
    }
    return 0;
  }
  if (args.name.empty()) throw ValidationError("preset: name required (see --list)");
  const Preset preset = make_preset(args.name, args.options);
  const unsigned threads = resolve_threads(args.threads);
  const std::filesystem::path dir = std::filesystem::path(args.out) / preset.name;
  for (const auto& job : preset.trajectories) {
    RunConfig config = job.config;
    config.out = (dir / job.label).string();
    print_warnings(validate_config(config));
    const FockBasis basis(config.length, config.bc);
    const Trajectory traj = run_realizations(basis, config.drive, config.protocol, config.cycles,
                                             config.realizations);
    std::cout << "wrote " << emit_trajectory(config, traj).string() << '\n';
  }
  for (const auto& job : preset.scans) {
    const ScanResult result = run_scan_job(job.spec, threads);
    std::cout << "wrote " << emit_scan(job.spec, result, dir / job.label).string() << '\n';
  }
  return 0;
}

}  // namespace pxpdrive
