#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "elastodisk/types.hpp"

namespace elastodisk::cli {

using nlohmann::json;

struct SweepSpec {
  std::string param;
  double start = 0.0, stop = 0.0;
  int count = 0;
  bool log = false;

  std::vector<double> values() const;
};

/// Resolved run configuration: material / contrast / geometry blocks plus the
/// per-command extras.  Flags override the config file; exactly one of
/// (delta, tau) fixes the second contrast parameter.
struct RunConfig {
  double lambda = 1.0, mu = 1.0, rho = 1.0;
  double epsilon = 1e-4;
  std::optional<double> delta;
  std::optional<double> tau;
  double radius = 1.0;
  int nodes = 256;

  Complex omega{1e-2, 0.0};
  double direction_deg = 0.0;
  std::vector<double> angles;
  std::vector<double> radii;
  double alpha_x = M_PI, alpha_y = 0.0;
  double scale = 0.1;
  bool dilute = false;
  std::optional<SweepSpec> sweep;

  std::string out = "-";
  std::string format = "json";

  ElasticMedium medium() const;
  ContrastParams contrast() const;
  json to_json() const;
};

SweepSpec parse_sweep(const std::string& text);
void apply_config_file(RunConfig& cfg, const std::string& path);

json complex_to_json(Complex z);

/// Writes `text` to cfg.out ("-" = stdout).
void write_artifact(const RunConfig& cfg, const std::string& text);
void write_named(const std::string& path, const std::string& text);

std::string csv_line(const std::vector<std::string>& cells);

}  // namespace elastodisk::cli
