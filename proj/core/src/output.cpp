#include "pxp/output.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pxp/error.hpp"
#include "pxp/version.hpp"

namespace pxp {

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "m,M,F\n";
  for (const auto& r : traj.records) {
    os << r.m << ',' << format_fixed17(r.magnetization) << ',' << format_fixed17(r.fidelity) << '\n';
  }
}

void write_scan_csv(std::ostream& os, const ScanResult& result) {
  os << "axis1,axis2,metric,censored,seed\n";
  for (const auto& c : result.cells) {
    os << format_roundtrip(c.axis1) << ',' << format_roundtrip(c.axis2) << ','
       << (c.error.empty() ? format_fixed17(c.metric) : std::string("nan")) << ','
       << (c.censored ? 1 : 0) << ',' << c.seed << '\n';
  }
}

void write_check_csv(std::ostream& os, const std::vector<CheckRow>& rows) {
  os << "check,quantity,value,reference,residual,tolerance,pass\n";
  for (const auto& r : rows) {
    os << r.check << ',' << r.quantity << ',' << format_fixed17(r.value) << ','
       << format_fixed17(r.reference) << ',' << format_fixed17(r.residual) << ','
       << format_fixed17(r.tolerance) << ',' << (r.pass ? "pass" : "fail") << '\n';
  }
}

RunConfig scan_base_config(const ScanSpec& spec) {
  RunConfig c;
  c.protocol = spec.kind;
  c.length = spec.length;
  c.bc = spec.bc;
  c.drive = spec.base;
  c.cycles = spec.cycles;
  c.realizations = spec.realizations;
  c.epsilon = spec.epsilon;
  return c;
}

namespace {

nlohmann::ordered_json config_json(const RunConfig& config) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config_entries(config)) obj[k] = v;
  return obj;
}

nlohmann::ordered_json header(const char* kind) {
  nlohmann::ordered_json doc;
  doc["library"] = kLibraryName;
  doc["version"] = kLibraryVersion;
  doc["kind"] = kind;
  return doc;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw RuntimeFailure("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw RuntimeFailure("write failed for " + path.string());
}

}  // namespace

std::string trajectory_meta_json(const RunConfig& config, const Trajectory& traj) {
  auto doc = header("trajectory");
  doc["config"] = config_json(config);
  doc["seed"] = traj.params.seed;
  doc["realizations"] = traj.realizations;
  doc["max_norm_drift"] = traj.max_norm_drift;
  return doc.dump(2) + "\n";
}

std::string scan_meta_json(const ScanSpec& spec, const std::string& out) {
  auto doc = header("scan");
  RunConfig base = scan_base_config(spec);
  base.out = out;
  doc["config"] = config_json(base);
  doc["seed"] = spec.base.seed;
  doc["metric"] = std::string(to_string(spec.metric));
  for (const auto* axis : {&spec.axis1, &spec.axis2}) {
    nlohmann::ordered_json a;
    a["name"] = axis->name;
    a["values"] = axis->values;
    doc[axis == &spec.axis1 ? "axis1" : "axis2"] = a;
  }
  return doc.dump(2) + "\n";
}

std::filesystem::path output_stem(const std::filesystem::path& out) {
  std::filesystem::path stem = out;
  if (stem.extension() == ".csv") stem.replace_extension();
  return stem;
}

std::filesystem::path emit_trajectory(const RunConfig& config, const Trajectory& traj) {
  const auto stem = output_stem(config.out);
  std::ostringstream csv;
  write_trajectory_csv(csv, traj);
  const std::filesystem::path csv_path = stem.string() + ".csv";
  write_file(csv_path, csv.str());
  write_file(stem.string() + ".meta.json", trajectory_meta_json(config, traj));
  return csv_path;
}

std::filesystem::path emit_scan(const ScanSpec& spec, const ScanResult& result,
                                const std::filesystem::path& out) {
  const auto stem = output_stem(out);
  std::ostringstream csv;
  write_scan_csv(csv, result);
  const std::filesystem::path csv_path = stem.string() + ".csv";
  write_file(csv_path, csv.str());
  write_file(stem.string() + ".meta.json", scan_meta_json(spec, out.string()));
  return csv_path;
}

ScanSpec read_scan_meta(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  if (doc.value("kind", "") != "scan") throw ValidationError(path.string() + ": not a scan sidecar");
  RunConfig c;
  for (const auto& [k, v] : doc.at("config").items()) apply_setting(c, k, v.get<std::string>());
  ScanSpec spec;
  spec.kind = c.protocol;
  spec.base = c.drive;
  spec.length = c.length;
  spec.bc = c.bc;
  spec.cycles = c.cycles;
  spec.realizations = c.realizations;
  spec.epsilon = c.threshold();
  const auto metric = parse_metric(doc.at("metric").get<std::string>());
  if (!metric) throw ValidationError(path.string() + ": unknown metric");
  spec.metric = *metric;
  spec.axis1.name = doc.at("axis1").at("name").get<std::string>();
  spec.axis1.values = doc.at("axis1").at("values").get<std::vector<double>>();
  spec.axis2.name = doc.at("axis2").at("name").get<std::string>();
  spec.axis2.values = doc.at("axis2").at("values").get<std::vector<double>>();
  return spec;
}

}  // namespace pxp
