#include "scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cavex::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trim(item));
  return parts;
}

int parse_int(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer for '" + key + "': " + value);
  }
}

double parse_real(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size() || !std::isfinite(v))
      throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid number for '" + key + "': " + value);
  }
}

AmplitudeKind parse_kind(const std::string& value) {
  if (value == "photonic") return AmplitudeKind::photonic;
  if (value == "atomic") return AmplitudeKind::atomic;
  throw ConfigError("initial amplitude kind must be photonic or atomic, got " +
                    value);
}

EvolutionMethod parse_method(const std::string& value) {
  if (value == "exact") return EvolutionMethod::exact;
  if (value == "closed-form") return EvolutionMethod::closed_form;
  if (value == "large-hopping") return EvolutionMethod::large_hopping;
  if (value == "small-hopping") return EvolutionMethod::small_hopping;
  throw ConfigError("unknown evolution method: " + value);
}

void parse_observable(const std::string& value, ScenarioConfig& config) {
  if (value == "populations") {
    config.populations = true;
    return;
  }
  if (value == "probabilities") {
    config.probabilities = true;
    return;
  }
  if (value.rfind("concurrence:", 0) == 0) {
    const auto parts = split(value.substr(12), ',');
    if (parts.size() != 2)
      throw ConfigError("concurrence observable needs two site indices: " +
                        value);
    config.concurrence_pairs.emplace_back(parse_int(parts[0], "observable"),
                                          parse_int(parts[1], "observable"));
    return;
  }
  throw ConfigError("unknown observable: " + value);
}

}  // namespace

ScenarioConfig parse_scenario_config(std::istream& in) {
  ScenarioConfig config;
  bool have_n = false, have_xi = false, have_tmax = false, have_dt = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "n") {
      config.n = parse_int(value, key);
      have_n = true;
    } else if (key == "xi") {
      config.xi = parse_real(value, key);
      have_xi = true;
    } else if (key == "tan_theta0") {
      config.tan_theta0 = parse_real(value, key);
    } else if (key == "t_max") {
      config.t_max = parse_real(value, key);
      have_tmax = true;
    } else if (key == "dt") {
      config.dt = parse_real(value, key);
      have_dt = true;
    } else if (key == "method") {
      config.method = parse_method(value);
    } else if (key == "output") {
      config.output = value;
    } else if (key == "initial") {
      const auto parts = split(value, ',');
      if (parts.size() != 4)
        throw ConfigError("initial amplitude needs 'site,kind,re,im', got " +
                          value);
      ScenarioConfig::InitialAmplitude amp;
      amp.site = parse_int(parts[0], key);
      amp.kind = parse_kind(parts[1]);
      amp.re = parse_real(parts[2], key);
      amp.im = parse_real(parts[3], key);
      config.initial.push_back(amp);
    } else if (key == "observable") {
      parse_observable(value, config);
    } else {
      throw ConfigError("unknown key '" + key + "' on line " +
                        std::to_string(line_no));
    }
  }

  if (!have_n) throw ConfigError("missing required key 'n'");
  if (!have_xi) throw ConfigError("missing required key 'xi'");
  if (!have_tmax) throw ConfigError("missing required key 't_max'");
  if (!have_dt) throw ConfigError("missing required key 'dt'");
  if (config.initial.empty())
    throw ConfigError("at least one 'initial' amplitude is required");
  if (config.output.empty()) throw ConfigError("missing required key 'output'");
  if (config.n < 1) throw ConfigError("n must be >= 1");
  if (!(config.tan_theta0 > 0.0)) throw ConfigError("tan_theta0 must be > 0");
  if (!(config.dt > 0.0)) throw ConfigError("dt must be > 0");
  if (config.t_max < 0.0) throw ConfigError("t_max must be >= 0");
  for (const auto& amp : config.initial)
    if (amp.site < 0 || amp.site >= config.n)
      throw ConfigError("initial amplitude site out of range: " +
                        std::to_string(amp.site));
  for (const auto& [a, b] : config.concurrence_pairs)
    if (a < 0 || a >= config.n || b < 0 || b >= config.n || a == b)
      throw ConfigError("concurrence pair out of range");
  return config;
}

ScenarioConfig parse_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_scenario_config(in);
}

ManifoldState build_initial_state(const ScenarioConfig& config,
                                  std::ostream& warnings) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(2 * config.n);
  for (const auto& amp : config.initial) {
    const int offset = amp.kind == AmplitudeKind::photonic ? 0 : 1;
    amps(2 * amp.site + offset) += Complex(amp.re, amp.im);
  }
  const double norm = amps.norm();
  if (std::abs(norm - 1.0) > 1e-3)
    throw ConfigError("initial state norm " + std::to_string(norm) +
                      " is too far from 1");
  if (std::abs(norm - 1.0) > 1e-9) {
    warnings << "warning: initial state norm " << norm
             << " rescaled to 1\n";
    amps /= norm;
  }
  return ManifoldState(std::move(amps));
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_time_series_csv(const std::string& path, const TimeSeries& series) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  for (std::size_t c = 0; c < series.columns.size(); ++c) {
    if (c) out << ',';
    out << series.columns[c];
  }
  out << '\n';
  for (const auto& row : series.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_double(row[c]);
    }
    out << '\n';
  }
  if (!out) throw ConfigError("failed while writing: " + path);
}

}  // namespace cavex::cli
