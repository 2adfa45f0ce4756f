#include "pxp/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "pxp/error.hpp"
#include "pxp/experiments.hpp"

namespace pxp {

DriveParams RunConfig::default_drive() {
  DriveParams d;
  d.w = 1.0;
  d.lambda = 10.0;
  d.delta_w = 0.0;
  d.delta_lambda = 0.0;
  d.period = 4.0;
  d.jitter = std::numbers::pi / 20.0;
  d.eta_mode = EtaMode::Binary;
  d.seed = 1;
  return d;
}

double RunConfig::threshold() const { return epsilon ? *epsilon : default_epsilon(protocol); }

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "protocol", "L",    "bc",   "w",      "lambda",       "dw",      "dlambda", "T",
      "dT",       "eta",  "seed", "cycles", "realizations", "epsilon", "out",     "format",
  };
  return keys;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view expected, std::string_view text) {
  throw ValidationError(std::string(key) + ": expected " + std::string(expected) + ", got '" +
                        std::string(text) + "'");
}

}  // namespace

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    bad_value(key, "a number", text);
  }
  return v;
}

std::uint64_t parse_uint(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    bad_value(key, "a non-negative integer", text);
  }
  return v;
}

std::string format_roundtrip(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_fixed17(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  if (key == "protocol") {
    const auto p = parse_protocol(value);
    if (!p) bad_value(key, "one of u3|u4|u5|dp-periodic|dp-random|dp-fib|dp-tm", value);
    c.protocol = *p;
  } else if (key == "L") {
    const auto v = parse_uint(key, value);
    if (v > 1000) bad_value(key, "a chain length", value);
    c.length = static_cast<int>(v);
  } else if (key == "bc") {
    const auto bc = parse_boundary(value);
    if (!bc) bad_value(key, "pbc or obc", value);
    c.bc = *bc;
  } else if (key == "w") {
    c.drive.w = parse_double(key, value);
  } else if (key == "lambda") {
    c.drive.lambda = parse_double(key, value);
  } else if (key == "dw") {
    c.drive.delta_w = parse_double(key, value);
  } else if (key == "dlambda") {
    c.drive.delta_lambda = parse_double(key, value);
  } else if (key == "T") {
    c.drive.period = parse_double(key, value);
  } else if (key == "dT") {
    c.drive.jitter = parse_double(key, value);
  } else if (key == "eta") {
    const auto e = parse_eta_mode(value);
    if (!e) bad_value(key, "binary or uniform", value);
    c.drive.eta_mode = *e;
  } else if (key == "seed") {
    c.drive.seed = parse_uint(key, value);
  } else if (key == "cycles") {
    c.cycles = parse_uint(key, value);
  } else if (key == "realizations") {
    c.realizations = parse_uint(key, value);
  } else if (key == "epsilon") {
    if (value == "default") {
      c.epsilon.reset();
    } else {
      c.epsilon = parse_double(key, value);
    }
  } else if (key == "out") {
    if (value.empty()) bad_value(key, "a path", value);
    c.out = std::string(value);
  } else if (key == "format") {
    if (value != "csv") bad_value(key, "csv", value);
    c.format = std::string(value);
  } else {
    throw ValidationError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_settings(RunConfig& config, const ConfigEntries& entries) {
  for (const auto& [k, v] : entries) apply_setting(config, k, v);
}

ConfigEntries parse_config_text(std::string_view text) {
  ConfigEntries out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) {
      throw ValidationError("config line " + std::to_string(line_no) + ": empty key");
    }
    out.emplace_back(key, std::string(trim(line.substr(eq + 1))));
  }
  return out;
}

ConfigEntries read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (path.extension() == ".json") {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
      throw ValidationError(path.string() + ": " + e.what());
    }
    if (!doc.contains("config") || !doc["config"].is_object()) {
      throw ValidationError(path.string() + ": missing \"config\" object");
    }
    ConfigEntries out;
    for (const auto& [k, v] : doc["config"].items()) {
      if (!v.is_string()) throw ValidationError(k + ": expected a string value in " + path.string());
      out.emplace_back(k, v.get<std::string>());
    }
    return out;
  }
  return parse_config_text(text);
}

ConfigEntries config_entries(const RunConfig& c) {
  return {
      {"protocol", std::string(to_string(c.protocol))},
      {"L", std::to_string(c.length)},
      {"bc", std::string(to_string(c.bc))},
      {"w", format_roundtrip(c.drive.w)},
      {"lambda", format_roundtrip(c.drive.lambda)},
      {"dw", format_roundtrip(c.drive.delta_w)},
      {"dlambda", format_roundtrip(c.drive.delta_lambda)},
      {"T", format_roundtrip(c.drive.period)},
      {"dT", format_roundtrip(c.drive.jitter)},
      {"eta", std::string(to_string(c.drive.eta_mode))},
      {"seed", std::to_string(c.drive.seed)},
      {"cycles", std::to_string(c.cycles)},
      {"realizations", std::to_string(c.realizations)},
      {"epsilon", c.epsilon ? format_roundtrip(*c.epsilon) : std::string("default")},
      {"out", c.out},
      {"format", c.format},
  };
}

std::string serialize_config(const RunConfig& config) {
  std::string out;
  for (const auto& [k, v] : config_entries(config)) out += k + " = " + v + "\n";
  return out;
}

std::vector<std::string> validate_config(const RunConfig& c) {
  if (c.length < kMinChainLength || c.length > kMaxChainLength) {
    throw ValidationError("L: must lie in [" + std::to_string(kMinChainLength) + ", " +
                          std::to_string(kMaxChainLength) + "]");
  }
  if (c.cycles < 1) throw ValidationError("cycles: must be at least 1");
  if (c.realizations < 1) throw ValidationError("realizations: must be at least 1");
  if (c.epsilon && !(*c.epsilon > 0.0)) throw ValidationError("epsilon: must be positive");
  std::vector<std::string> warnings = c.drive.validate(c.protocol);
  if (c.length % 2 != 0) warnings.emplace_back("L is odd; the reference numerics use even L");
  return warnings;
}

}  // namespace pxp
