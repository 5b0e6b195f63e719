// Command-line front end: resonance sweeps, scattering, far fields, phononic
// bandgaps and the built-in verification suite.
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli_config.hpp"
#include "elastodisk/phononic.hpp"
#include "elastodisk/resonance.hpp"
#include "elastodisk/verify.hpp"

using namespace elastodisk;
using namespace elastodisk::cli;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitSolverError = 3;

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json resonance_record(const ResonanceResult& r) {
  return json{{"index", r.index},
              {"omega_hat", complex_to_json(r.omega_hat)},
              {"omega_hat_frozen", complex_to_json(r.omega_hat_frozen)},
              {"residual", r.residual},
              {"multiplicity_note", r.multiplicity_note},
              {"method", r.method == ResonanceMethod::leading_order ? "leading_order" : "svd_dip"}};
}

const char* regime_name(ScatterRegime r) {
  switch (r) {
    case ScatterRegime::quasi_static: return "quasi_static";
    case ScatterRegime::resonant: return "resonant";
    default: return "post_resonant";
  }
}

int cmd_resonances(const RunConfig& cfg) {
  ElasticMedium m = cfg.medium();
  if (cfg.sweep) {
    if (cfg.sweep->param != "epsilon")
      throw std::invalid_argument("resonances: only --sweep epsilon=... is supported");
    std::string csv = csv_line({"epsilon", "re_omega", "im_omega", "residual"});
    for (double eps : cfg.sweep->values()) {
      ContrastParams c = cfg.delta ? ContrastParams::from_delta_epsilon(*cfg.delta, eps)
                                   : ContrastParams::from_epsilon_tau(eps, cfg.tau.value_or(1.0));
      for (const auto& r : solve_resonances(cfg.radius, m, c))
        csv += csv_line({num(eps), num(r.omega_hat.real()), num(r.omega_hat.imag()), num(r.residual)});
    }
    write_artifact(cfg, csv);
    return kExitOk;
  }
  ContrastParams c = cfg.contrast();
  auto roots = solve_resonances(cfg.radius, m, c);
  CaseTag tag = classify_case(cfg.radius, m);

  // brute-force cross-check on a reduced grid
  DiskBoundary b = make_disk(cfg.radius, std::min(cfg.nodes, 48));
  json dips = json::array();
  for (int idx : {0, 2}) {
    DipResult dip = svd_dip_search(roots[idx].omega_hat.real(), 0.15, 13, c, b, m);
    dips.push_back({{"index", roots[idx].index},
                    {"omega_dip", dip.omega_dip},
                    {"sigma_min", dip.sigma_min},
                    {"rel_distance",
                     std::abs(dip.omega_dip - roots[idx].omega_hat.real()) / roots[idx].omega_hat.real()}});
  }
  json out{{"config", cfg.to_json()},
           {"case", tag.tag == DiskCase::Case1 ? "Case1" : "Case2"},
           {"case_margin", tag.margin},
           {"roots", json::array()},
           {"svd_dips", dips}};
  for (const auto& r : roots) out["roots"].push_back(resonance_record(r));
  write_artifact(cfg, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_scatter(const RunConfig& cfg) {
  ElasticMedium m = cfg.medium();
  ContrastParams c = cfg.contrast();
  DiskBoundary b = make_disk(cfg.radius, cfg.nodes);
  const Vec2 d(std::cos(cfg.direction_deg * M_PI / 180.0), std::sin(cfg.direction_deg * M_PI / 180.0));

  if (cfg.sweep) {
    if (cfg.sweep->param != "omega")
      throw std::invalid_argument("scatter: only --sweep omega=... is supported");
    std::string csv = csv_line({"omega", "abs_xi1", "abs_xi2", "abs_xi3", "regime"});
    for (double om : cfg.sweep->values()) {
      ScatterSolution s = solve_scattering(Complex(om, 0.0), d, b, m, c);
      csv += csv_line({num(om), num(std::abs(s.xi[0])), num(std::abs(s.xi[1])), num(std::abs(s.xi[2])),
                       regime_name(s.regime)});
    }
    write_artifact(cfg, csv);
    return kExitOk;
  }

  ScatterSolution s = solve_scattering(cfg.omega, d, b, m, c);
  json out{{"config", cfg.to_json()},
           {"xi", {complex_to_json(s.xi[0]), complex_to_json(s.xi[1]), complex_to_json(s.xi[2])}},
           {"zeta", {complex_to_json(s.zeta[0]), complex_to_json(s.zeta[1])}},
           {"regime", regime_name(s.regime)},
           {"regime_parameter", s.regime_parameter},
           {"condition_estimate", s.condition_estimate},
           {"solve_residual", s.solve_residual}};
  if (s.near_resonance_warning) out["warning"] = "near-resonance conditioning";
  write_artifact(cfg, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_farfield(const RunConfig& cfg) {
  ElasticMedium m = cfg.medium();
  ContrastParams c = cfg.contrast();
  DiskBoundary b = make_disk(cfg.radius, cfg.nodes);
  const Vec2 d(std::cos(cfg.direction_deg * M_PI / 180.0), std::sin(cfg.direction_deg * M_PI / 180.0));
  std::vector<double> angles = cfg.angles;
  if (angles.empty())
    for (int a = 0; a < 24; ++a) angles.push_back(2.0 * M_PI * a / 24);
  std::vector<double> radii = cfg.radii;
  if (radii.empty()) radii = {20.0 * cfg.radius, 40.0 * cfg.radius, 80.0 * cfg.radius};

  ScatterSolution s = solve_scattering(cfg.omega, d, b, m, c);
  FarField ff = far_field(s, cfg.omega, angles, radii, b, m);

  // decay-residual table and projector checks
  const Complex ke = std::sqrt(m.rho) * cfg.omega;
  const Complex kp = ke / std::sqrt(m.lame_p());
  const Complex ks = ke / std::sqrt(m.mu);
  json decay = json::array();
  for (double rr : radii) {
    double worst = 0.0;
    for (size_t a = 0; a < angles.size(); ++a) {
      Vec2 xh(std::cos(angles[a]), std::sin(angles[a]));
      CVec2 u_num = eval_field(Side::exterior, s.phi_ext, rr * xh, ke, b, m);
      CVec2 model = ff.u_p[a] * std::exp(Complex(0, 1) * kp * rr) / std::sqrt(rr) +
                    ff.u_s[a] * std::exp(Complex(0, 1) * ks * rr) / std::sqrt(rr);
      worst = std::max(worst, (u_num - model).norm() * std::pow(rr, 1.5));
    }
    decay.push_back({{"radius", rr}, {"scaled_residual", worst}});
  }

  auto checks = [&](size_t a) {
    Vec2 xh(std::cos(angles[a]), std::sin(angles[a]));
    Vec2 th(-xh.y(), xh.x());
    double sc = std::max(ff.u_p[a].norm() + ff.u_s[a].norm(), 1e-300);
    bool p_ok = std::abs(ff.u_p[a].dot(th.cast<Complex>())) / sc < 1e-10;
    bool s_ok = std::abs(ff.u_s[a].dot(xh.cast<Complex>())) / sc < 1e-10;
    return std::pair<bool, bool>(p_ok, s_ok);
  };

  if (cfg.format == "csv") {
    std::string csv = csv_line({"angle", "re_up_x", "im_up_x", "re_up_y", "im_up_y", "re_us_x",
                                "im_us_x", "re_us_y", "im_us_y", "p_parallel_ok", "s_orthogonal_ok"});
    for (size_t a = 0; a < angles.size(); ++a) {
      auto [pok, sok] = checks(a);
      csv += csv_line({num(angles[a]), num(ff.u_p[a].x().real()), num(ff.u_p[a].x().imag()),
                       num(ff.u_p[a].y().real()), num(ff.u_p[a].y().imag()), num(ff.u_s[a].x().real()),
                       num(ff.u_s[a].x().imag()), num(ff.u_s[a].y().real()), num(ff.u_s[a].y().imag()),
                       pok ? "true" : "false", sok ? "true" : "false"});
    }
    write_artifact(cfg, csv);
    if (cfg.out != "-") {
      std::string dcsv = csv_line({"radius", "scaled_residual"});
      for (auto& row : decay)
        dcsv += csv_line({num(row["radius"].get<double>()), num(row["scaled_residual"].get<double>())});
      write_named(cfg.out + ".decay.csv", dcsv);
    }
    return kExitOk;
  }

  json samples = json::array();
  for (size_t a = 0; a < angles.size(); ++a) {
    auto [pok, sok] = checks(a);
    samples.push_back({{"angle", angles[a]},
                       {"u_p", {complex_to_json(ff.u_p[a].x()), complex_to_json(ff.u_p[a].y())}},
                       {"u_s", {complex_to_json(ff.u_s[a].x()), complex_to_json(ff.u_s[a].y())}},
                       {"p_parallel_ok", pok},
                       {"s_orthogonal_ok", sok}});
  }
  json out{{"config", cfg.to_json()}, {"samples", samples}, {"decay_residuals", decay}};
  write_artifact(cfg, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_bandgap(const RunConfig& cfg) {
  ElasticMedium m = cfg.medium();
  ContrastParams c = cfg.contrast();
  DiskBoundary base = make_disk(cfg.radius, std::min(cfg.nodes, 64));

  if (cfg.sweep) {
    if (cfg.sweep->param == "scale") {
      std::string csv = csv_line({"scale", "omega_star_full", "omega_star_dilute", "relative_gap"});
      for (double s : cfg.sweep->values()) {
        BandgapResult full = bandgap_edge(s, base, m, c, BandgapMode::full, 16);
        BandgapResult dil = bandgap_edge(s, base, m, c, BandgapMode::dilute);
        csv += csv_line({num(s), num(full.omega_star), num(dil.omega_star),
                         num(std::abs(full.omega_star - dil.omega_star) / dil.omega_star)});
      }
      write_artifact(cfg, csv);
      return kExitOk;
    }
    if (cfg.sweep->param == "epsilon") {
      std::string csv = csv_line({"epsilon", "omega_star"});
      for (double eps : cfg.sweep->values()) {
        ContrastParams cc = ContrastParams::from_epsilon_tau(eps, c.tau);
        BandgapResult bg = bandgap_edge(cfg.scale, base, m, cc,
                                        cfg.dilute ? BandgapMode::dilute : BandgapMode::full, 16);
        csv += csv_line({num(eps), num(bg.omega_star)});
      }
      write_artifact(cfg, csv);
      return kExitOk;
    }
    throw std::invalid_argument("bandgap: sweep parameter must be scale or epsilon");
  }

  BandgapResult bg = bandgap_edge(cfg.scale, base, m, c,
                                  cfg.dilute ? BandgapMode::dilute : BandgapMode::full, 16);
  if (cfg.format == "csv" && !cfg.dilute) {
    std::string csv = csv_line({"alpha_x", "alpha_y", "lambda_max"});
    for (size_t i = 0; i < bg.alpha_grid.size(); ++i)
      csv += csv_line({num(bg.alpha_grid[i].x()), num(bg.alpha_grid[i].y()), num(bg.lambda_max[i])});
    write_artifact(cfg, csv);
    return kExitOk;
  }
  json out{{"config", cfg.to_json()},
           {"omega_star", bg.omega_star},
           {"mode", bg.method == BandgapMode::dilute ? "dilute" : "full"},
           {"regime_parameter", bg.regime_parameter}};
  if (bg.regime_warning) out["warning"] = "dilute regime assumption |eps/(s^2 ln s)| << 1 violated";
  if (bg.method == BandgapMode::dilute) out["t"] = complex_to_json(bg.dilute_t);
  if (!bg.alpha_grid.empty()) {
    json tab = json::array();
    for (size_t i = 0; i < bg.alpha_grid.size(); ++i)
      tab.push_back({{"alpha", {bg.alpha_grid[i].x(), bg.alpha_grid[i].y()}}, {"lambda_max", bg.lambda_max[i]}});
    out["q_alpha_table"] = tab;
  }
  write_artifact(cfg, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  auto results = run_acceptance_checks(&std::cerr);
  json out{{"config", cfg.to_json()}, {"checks", json::array()}};
  int failures = 0;
  for (const auto& r : results) {
    out["checks"].push_back(
        {{"id", r.id}, {"passed", r.passed}, {"runtime_seconds", r.runtime_seconds}, {"detail", r.detail}});
    if (!r.passed) ++failures;
  }
  out["failures"] = failures;
  write_artifact(cfg, out.dump(2) + "\n");
  return failures == 0 ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary-integral solver for subwavelength resonances of a high-contrast elastic disk"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, sweep_text, omega_text, alpha_text;

  app.add_option("--config", config_path, "JSON config file (flags override)");

  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--lambda", cfg.lambda, "first Lame parameter");
    sub->add_option("--mu", cfg.mu, "shear modulus");
    sub->add_option("--rho", cfg.rho, "background density");
    sub->add_option("--radius", cfg.radius, "disk radius");
    sub->add_option("--nodes", cfg.nodes, "boundary nodes (even, >= 16)");
    sub->add_option("--epsilon", cfg.epsilon, "density contrast");
    auto* d = sub->add_option("--delta", [&cfg](const CLI::results_t& v) {
      cfg.delta = std::stod(v[0]);
      return true;
    }, "stiffness contrast (excludes --tau)");
    auto* t = sub->add_option("--tau", [&cfg](const CLI::results_t& v) {
      cfg.tau = std::stod(v[0]);
      return true;
    }, "wave speed ratio (excludes --delta)");
    d->excludes(t);
    t->excludes(d);
    sub->add_option("--out", cfg.out, "output path ('-' = stdout)");
    sub->add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--sweep", sweep_text, "param=start:stop:count[:log]");
  };

  CLI::App* reso = app.add_subcommand("resonances", "subwavelength resonance roots");
  add_shared(reso);
  CLI::App* scat = app.add_subcommand("scatter", "plane-wave scattering solve");
  add_shared(scat);
  scat->add_option("--omega", omega_text, "incident frequency re[,im]");
  scat->add_option("--direction", cfg.direction_deg, "incidence direction (degrees)");
  CLI::App* farf = app.add_subcommand("farfield", "far-field patterns and decay residuals");
  add_shared(farf);
  farf->add_option("--omega", omega_text, "incident frequency re[,im]");
  farf->add_option("--direction", cfg.direction_deg, "incidence direction (degrees)");
  farf->add_option("--angles", cfg.angles, "observation angles (radians)");
  farf->add_option("--radii", cfg.radii, "evaluation radii");
  CLI::App* band = app.add_subcommand("bandgap", "phononic bandgap edge");
  add_shared(band);
  band->add_option("--alpha", alpha_text, "quasi-momentum ax,ay");
  band->add_option("--scale", cfg.scale, "inclusion scale s");
  band->add_flag("--dilute", cfg.dilute, "dilute closed form instead of the alpha grid");
  CLI::App* veri = app.add_subcommand("verify", "run the acceptance checks");
  add_shared(veri);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      RunConfig file_cfg;
      apply_config_file(file_cfg, config_path);
      // flags win: start from file values, then re-parse the command line
      std::swap(cfg, file_cfg);
      app.clear();
      CLI11_PARSE(app, argc, argv);
    }
    if (!sweep_text.empty()) cfg.sweep = parse_sweep(sweep_text);
    if (!omega_text.empty()) {
      double re = 0.0, im = 0.0;
      if (std::sscanf(omega_text.c_str(), "%lf,%lf", &re, &im) < 1)
        throw std::invalid_argument("--omega: expected re[,im]");
      cfg.omega = Complex(re, im);
    }
    if (!alpha_text.empty()) {
      double ax = 0.0, ay = 0.0;
      if (std::sscanf(alpha_text.c_str(), "%lf,%lf", &ax, &ay) != 2)
        throw std::invalid_argument("--alpha: expected ax,ay");
      cfg.alpha_x = ax;
      cfg.alpha_y = ay;
    }

    if (reso->parsed()) return cmd_resonances(cfg);
    if (scat->parsed()) return cmd_scatter(cfg);
    if (farf->parsed()) return cmd_farfield(cfg);
    if (band->parsed()) return cmd_bandgap(cfg);
    if (veri->parsed()) return cmd_verify(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolverError;
  }
  return kExitConfigError;
}
