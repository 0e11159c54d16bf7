#pragma once

#include <string>
#include <vector>

namespace thetaspline {

/// Everything a CLI run depends on. Serializes to JSON; loading rejects
/// unknown keys so that typos in config files fail loudly.
struct RunConfig {
  std::string command;
  std::string which;       // sub-selection for identity/mellin/probe/converge
  std::string family = "chebyshev-T";
  std::string kind = "omega_squared";
  int d = 0;
  double lambda = 0.0;
  double u = 1.0;
  int N = 4;
  int nu = 1;
  int m = 0;
  double s = 1.0;
  double r = 0.0;  // 0: d+2 for theta-mellin, 2-d for rbeta
  double y = 2.0;
  double sigma = 1.0;
  std::vector<double> t;
  std::vector<int> N_list;
  std::vector<double> t_grid;
  std::vector<double> s_list;
  std::vector<double> v_grid;
  std::vector<std::string> omega;
  std::vector<double> zeros;
  std::string format = "csv";
  std::string output;  // empty: standard output
  int max_bits = 0;    // 0: default or THETASPLINE_MAX_BITS
  int threads = 0;
  bool timing = false;

  std::string to_json() const;
  /// ValidationError on malformed JSON, wrong types or unknown keys.
  static RunConfig from_json(const std::string& text);
  bool operator==(const RunConfig&) const = default;
};

}  // namespace thetaspline
