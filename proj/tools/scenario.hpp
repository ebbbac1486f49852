// Scenario configuration files and CSV emission for the command-line tool.
//
// The config format is flat text, one `key = value` per line, `#` comments.
// Repeated `initial = site,kind,re,im` lines build the initial state and
// repeated `observable = ...` lines select extra output columns.
#pragma once

#include <iosfwd>
#include <string>

#include "cavex/analysis.hpp"
#include "cavex/types.hpp"

namespace cavex::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
  int n = 0;
  double xi = 0.0;
  double tan_theta0 = 1.0;

  struct InitialAmplitude {
    int site = 0;
    AmplitudeKind kind = AmplitudeKind::photonic;
    double re = 0.0;
    double im = 0.0;
  };
  std::vector<InitialAmplitude> initial;

  double t_max = 0.0;
  double dt = 0.0;
  EvolutionMethod method = EvolutionMethod::exact;

  bool populations = false;
  bool probabilities = false;
  std::vector<std::pair<int, int>> concurrence_pairs;

  std::string output;
};

ScenarioConfig parse_scenario_config(const std::string& path);
ScenarioConfig parse_scenario_config(std::istream& in);

/// Assembles the initial state. A norm within 1e-9 of 1 is accepted as
/// given; a norm off by up to 1e-3 is rescaled with a warning on
/// `warnings`; anything worse is a ConfigError.
ManifoldState build_initial_state(const ScenarioConfig& config,
                                  std::ostream& warnings);

/// Comma-separated CSV with a header row, LF line endings, every number
/// printed with 17 significant digits.
void write_time_series_csv(const std::string& path, const TimeSeries& series);

std::string format_double(double value);

}  // namespace cavex::cli
