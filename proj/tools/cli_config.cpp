#include "cli_config.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace elastodisk::cli {

std::vector<double> SweepSpec::values() const {
  std::vector<double> v;
  if (count <= 1) {
    v.push_back(start);
    return v;
  }
  for (int i = 0; i < count; ++i) {
    double t = double(i) / (count - 1);
    v.push_back(log ? start * std::pow(stop / start, t) : start + t * (stop - start));
  }
  return v;
}

SweepSpec parse_sweep(const std::string& text) {
  // param=start:stop:count[:log]
  auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("sweep: expected param=start:stop:count[:log]");
  SweepSpec s;
  s.param = text.substr(0, eq);
  std::string rest = text.substr(eq + 1);
  std::replace(rest.begin(), rest.end(), ':', ' ');
  std::istringstream is(rest);
  std::string logtok;
  if (!(is >> s.start >> s.stop >> s.count)) throw std::invalid_argument("sweep: bad numeric fields");
  if (is >> logtok) {
    if (logtok != "log" && logtok != "lin") throw std::invalid_argument("sweep: trailing token must be 'log'");
    s.log = (logtok == "log");
  }
  if (s.count < 1) throw std::invalid_argument("sweep: count must be >= 1");
  if (s.log && (s.start <= 0.0 || s.stop <= 0.0))
    throw std::invalid_argument("sweep: log spacing needs positive endpoints");
  return s;
}

ElasticMedium RunConfig::medium() const { return ElasticMedium(lambda, mu, rho); }

ContrastParams RunConfig::contrast() const {
  if (delta && tau) throw std::invalid_argument("config: give only one of --delta / --tau");
  if (delta) return ContrastParams::from_delta_epsilon(*delta, epsilon);
  return ContrastParams::from_epsilon_tau(epsilon, tau.value_or(1.0));
}

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json RunConfig::to_json() const {
  ContrastParams c = contrast();
  json j{{"material", {{"lambda", lambda}, {"mu", mu}, {"rho", rho}}},
         {"contrast", {{"epsilon", c.epsilon}, {"delta", c.delta}, {"tau", c.tau}}},
         {"geometry", {{"radius", radius}, {"nodes", nodes}}},
         {"format", format}};
  j["omega"] = complex_to_json(omega);
  j["direction_deg"] = direction_deg;
  j["alpha"] = {alpha_x, alpha_y};
  j["scale"] = scale;
  j["dilute"] = dilute;
  if (!angles.empty()) j["angles"] = angles;
  if (!radii.empty()) j["radii"] = radii;
  if (sweep)
    j["sweep"] = {{"param", sweep->param}, {"start", sweep->start}, {"stop", sweep->stop},
                  {"count", sweep->count}, {"log", sweep->log}};
  return j;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  json j = json::parse(in);
  auto get = [&](const json& o, const char* k, auto& target) {
    if (o.contains(k)) target = o.at(k).get<std::decay_t<decltype(target)>>();
  };
  if (j.contains("material")) {
    get(j["material"], "lambda", cfg.lambda);
    get(j["material"], "mu", cfg.mu);
    get(j["material"], "rho", cfg.rho);
  }
  if (j.contains("contrast")) {
    get(j["contrast"], "epsilon", cfg.epsilon);
    if (j["contrast"].contains("delta")) cfg.delta = j["contrast"]["delta"].get<double>();
    if (j["contrast"].contains("tau")) cfg.tau = j["contrast"]["tau"].get<double>();
  }
  if (j.contains("geometry")) {
    get(j["geometry"], "radius", cfg.radius);
    get(j["geometry"], "nodes", cfg.nodes);
  }
  if (j.contains("omega"))
    cfg.omega = Complex(j["omega"].value("re", 0.0), j["omega"].value("im", 0.0));
  get(j, "direction_deg", cfg.direction_deg);
  if (j.contains("angles")) cfg.angles = j["angles"].get<std::vector<double>>();
  if (j.contains("radii")) cfg.radii = j["radii"].get<std::vector<double>>();
  if (j.contains("alpha")) {
    cfg.alpha_x = j["alpha"][0].get<double>();
    cfg.alpha_y = j["alpha"][1].get<double>();
  }
  get(j, "scale", cfg.scale);
  get(j, "dilute", cfg.dilute);
  get(j, "out", cfg.out);
  get(j, "format", cfg.format);
  if (j.contains("sweep")) {
    SweepSpec s;
    s.param = j["sweep"].value("param", "");
    s.start = j["sweep"].value("start", 0.0);
    s.stop = j["sweep"].value("stop", 0.0);
    s.count = j["sweep"].value("count", 1);
    s.log = j["sweep"].value("log", false);
    cfg.sweep = s;
  }
}

void write_named(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_artifact(const RunConfig& cfg, const std::string& text) { write_named(cfg.out, text); }

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ",";
    line += cells[i];
  }
  line += "\n";
  return line;
}

}  // namespace elastodisk::cli
