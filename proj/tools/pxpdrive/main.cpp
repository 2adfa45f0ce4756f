#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pxp/error.hpp"
#include "pxp/version.hpp"

namespace {

struct ConfigFlags {
  std::string config_file;
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, CLI::Option*>> options;

  void attach(CLI::App* app) {
    app->add_option("--config", config_file, "key = value file or .json sidecar; flags override it");
    for (const auto& key : pxp::config_keys()) {
      options.emplace_back(key, app->add_option("--" + key, values[key], "config key " + key));
    }
  }

  pxpdrive::RunArgs collect() const {
    pxpdrive::RunArgs args;
    args.config_file = config_file;
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) args.overrides.emplace_back(key, values.at(key));
    }
    return args;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven PXP chain: Floquet protocols, effective Hamiltonians, sequence statistics"};
  app.set_version_flag("--version", std::string(pxp::kLibraryName) + " " + pxp::kLibraryVersion);
  app.require_subcommand(1);

  pxpdrive::BasisArgs basis_args;
  auto* basis = app.add_subcommand("basis", "Enumerate the constrained Fock basis");
  basis->add_option("--L", basis_args.length, "chain length");
  basis->add_option("--bc", basis_args.bc, "pbc or obc");
  basis->add_flag("--list", basis_args.list, "print every basis state");

  ConfigFlags run_flags;
  auto* run = app.add_subcommand("run", "Drive one protocol and write M(m), F(m)");
  run_flags.attach(run);

  ConfigFlags scan_flags;
  pxpdrive::ScanArgs scan_args;
  std::string metric;
  unsigned scan_threads = 0;
  auto* scan = app.add_subcommand("scan", "Two-parameter scan of m0, mbar or fav");
  scan_flags.attach(scan);
  scan->add_option("--meta", scan_args.meta_file, "re-run the scan described by a .meta.json");
  scan->add_option("--axis1", scan_args.axis1, "name=start:stop:count or name=v1,v2,...");
  scan->add_option("--axis2", scan_args.axis2, "name=start:stop:count or name=v1,v2,...");
  auto* metric_opt = scan->add_option("--metric", metric, "m0, mbar or fav");
  auto* scan_threads_opt = scan->add_option("--threads", scan_threads, "worker threads");

  pxpdrive::EffectiveArgs eff_args;
  auto* effective = app.add_subcommand("effective", "Analytic checks of the effective Hamiltonians");
  effective->add_option("--check", eff_args.check, "integrals, heff2, special-periods, l3-series or all")
      ->required();
  effective->add_option("--L", eff_args.length, "chain length for heff2");
  effective->add_option("--seed", eff_args.seed, "seed for random draws");
  effective->add_option("--draws", eff_args.draws, "random draws for the integrals check");
  effective->add_option("--out", eff_args.out, "CSV path (default stdout)");

  pxpdrive::SeqstatsArgs seq_args;
  int bruteforce_n = 0, closed_n = 0, level = 0;
  unsigned seq_threads = 0;
  auto* seqstats = app.add_subcommand("seqstats", "Reduced-length statistics of drive sequences");
  auto* bf_opt = seqstats->add_option("--bruteforce-N", bruteforce_n, "enumerate all sequences up to N");
  auto* closed_opt = seqstats->add_option("--closed-N", closed_n, "closed form at N");
  seqstats->add_option("--protocol", seq_args.family, "tm, fib, periodic or random");
  auto* level_opt = seqstats->add_option("--level", level, "level (tm, fib) or length (periodic, random)");
  seqstats->add_option("--seed", seq_args.seed, "seed for the random family");
  auto* seq_threads_opt = seqstats->add_option("--threads", seq_threads, "worker threads");
  seqstats->add_option("--out", seq_args.out, "CSV path (default stdout)");

  pxpdrive::PresetArgs preset_args;
  int p_length = 0;
  std::size_t p_cycles = 0, p_grid = 0;
  std::uint64_t p_seed = 0;
  double p_wdt = 0.0;
  unsigned p_threads = 0;
  auto* preset = app.add_subcommand("preset", "Regenerate a figure's data");
  preset->add_option("name", preset_args.name, "preset name");
  preset->add_flag("--list", preset_args.list, "list presets");
  auto* p_length_opt = preset->add_option("--L", p_length, "chain length");
  auto* p_cycles_opt = preset->add_option("--cycles", p_cycles, "drive cycles");
  auto* p_grid_opt = preset->add_option("--grid", p_grid, "points per scan axis");
  auto* p_seed_opt = preset->add_option("--seed", p_seed, "master seed");
  auto* p_wdt_opt = preset->add_option("--w-dT", p_wdt, "pulse jitter w dT (fig2)");
  auto* p_threads_opt = preset->add_option("--threads", p_threads, "worker threads");
  preset->add_option("--out", preset_args.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*basis) return pxpdrive::cmd_basis(basis_args);
    if (*run) return pxpdrive::cmd_run(run_flags.collect());
    if (*scan) {
      scan_args.run = scan_flags.collect();
      if (metric_opt->count() > 0) scan_args.metric = metric;
      if (scan_threads_opt->count() > 0) scan_args.threads = scan_threads;
      return pxpdrive::cmd_scan(scan_args);
    }
    if (*effective) return pxpdrive::cmd_effective(eff_args);
    if (*seqstats) {
      if (bf_opt->count() > 0) seq_args.bruteforce_n = bruteforce_n;
      if (closed_opt->count() > 0) seq_args.closed_n = closed_n;
      if (level_opt->count() > 0) seq_args.level = level;
      if (seq_threads_opt->count() > 0) seq_args.threads = seq_threads;
      return pxpdrive::cmd_seqstats(seq_args);
    }
    if (*preset) {
      if (p_length_opt->count() > 0) preset_args.options.length = p_length;
      if (p_cycles_opt->count() > 0) preset_args.options.cycles = p_cycles;
      if (p_grid_opt->count() > 0) preset_args.options.grid = p_grid;
      if (p_seed_opt->count() > 0) preset_args.options.seed = p_seed;
      if (p_wdt_opt->count() > 0) preset_args.options.w_dT = p_wdt;
      if (p_threads_opt->count() > 0) preset_args.threads = p_threads;
      return pxpdrive::cmd_preset(preset_args);
    }
  } catch (const pxp::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
