// Command-line front end: parameter sweeps, figure presets, single-point
// evaluation, threshold temperatures, and contour extraction.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 the requested
// grid contains NaN cells (per-point numeric failures never abort a sweep).

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hubbard/dimer_analytic.hpp"
#include "hubbard/sweep.hpp"

namespace {

using namespace hubbard;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

Axis parse_axis(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) {
    throw std::domain_error("axis must be NAME:MIN:MAX:STEPS, got: " + text);
  }
  Axis a;
  a.name = axis_name_from_string(parts[0]);
  a.min = std::stod(parts[1]);
  a.max = std::stod(parts[2]);
  a.steps = std::stoi(parts[3]);
  return a;
}

void parse_ensemble(const std::string& text, EnsembleDescriptor& ens) {
  const auto parts = split(text, ':');
  if (parts[0] == "ground") {
    if (parts.size() != 1) throw std::domain_error("ground ensemble takes no temperature");
    ens.kind = EnsembleKind::ground;
    ens.temperature = 0.0;
    return;
  }
  if (parts.size() != 2) {
    throw std::domain_error("thermal ensemble must be canonical:T or grand:T");
  }
  if (parts[0] == "canonical") {
    ens.kind = EnsembleKind::canonical;
  } else if (parts[0] == "grand" || parts[0] == "grand_canonical") {
    ens.kind = EnsembleKind::grand_canonical;
    ens.scope = SectorScope::all;
  } else {
    throw std::domain_error("unknown ensemble kind: " + parts[0]);
  }
  ens.temperature = std::stod(parts[1]);
}

SectorScope parse_scope(const std::string& text) {
  if (text == "half" || text == "half_filling") return SectorScope::half_filling;
  if (text == "all") return SectorScope::all;
  throw std::domain_error("scope must be half or all");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Flags shared by `sweep` and `contour`.
struct SweepCli {
  std::string preset;
  std::string config_path;
  std::string x_spec;
  std::string y_spec;
  std::string ensemble_spec;
  std::string scope_spec;
  std::string obs_spec;
  std::string out_path;
  std::string format;
  bool oracle = false;
  double base_U = 0.0, base_V = 0.0, base_mu = 0.0, base_B = 0.0, global_mu = 0.0;

  CLI::App* attach(CLI::App& app, const char* name, const char* desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--preset", preset, "figure preset fig1..fig7");
    cmd->add_option("--config", config_path, "JSON config file (flags override it)");
    cmd->add_option("--x", x_spec, "x axis as NAME:MIN:MAX:STEPS");
    cmd->add_option("--y", y_spec, "y axis as NAME:MIN:MAX:STEPS");
    cmd->add_option("--ensemble", ensemble_spec, "ground | canonical:T | grand:T");
    cmd->add_option("--scope", scope_spec, "sector scope: half | all");
    cmd->add_option("--obs", obs_spec, "comma-separated observables");
    cmd->add_option("--out", out_path, "output path (default stdout)");
    cmd->add_option("--format", format, "csv | json");
    cmd->add_flag("--oracle", oracle, "use the closed dimer forms instead of ED");
    cmd->add_option("-U,--U", base_U, "base on-site coupling");
    cmd->add_option("-V,--V", base_V, "base nearest-neighbor coupling");
    cmd->add_option("--mu", base_mu, "staggered local potential (+mu, -mu)");
    cmd->add_option("-B,--B", base_B, "staggered Zeeman field (+B, -B)");
    cmd->add_option("--global-mu", global_mu, "global chemical potential");
    return cmd;
  }

  SweepConfig build(const CLI::App* cmd) const {
    if (!preset.empty() && !config_path.empty()) {
      throw std::domain_error("--preset and --config are mutually exclusive");
    }
    SweepConfig cfg;
    if (!preset.empty()) {
      cfg = figure_preset(figure_preset_from_string(preset));
    } else if (!config_path.empty()) {
      cfg = config_from_json_string(slurp(config_path));
    }

    if (cmd->count("--U")) cfg.base.U = base_U;
    if (cmd->count("--V")) cfg.base.V = base_V;
    if (cmd->count("--mu")) {
      for (int j = 0; j < cfg.base.num_sites; ++j) {
        cfg.base.mu[j] = (j % 2 == 0) ? base_mu : -base_mu;
      }
    }
    if (cmd->count("--B")) {
      for (int j = 0; j < cfg.base.num_sites; ++j) {
        cfg.base.B[j] = (j % 2 == 0) ? base_B : -base_B;
      }
    }
    if (cmd->count("--global-mu")) cfg.base.global_mu = global_mu;
    if (!x_spec.empty()) cfg.x = parse_axis(x_spec);
    if (!y_spec.empty()) cfg.y = parse_axis(y_spec);
    if (!ensemble_spec.empty()) parse_ensemble(ensemble_spec, cfg.ensemble);
    if (!scope_spec.empty()) cfg.ensemble.scope = parse_scope(scope_spec);
    if (!obs_spec.empty()) {
      cfg.observables.clear();
      for (const auto& name : split(obs_spec, ',')) {
        cfg.observables.push_back(observable_from_string(name));
      }
    }
    if (cmd->count("--out")) cfg.output_path = out_path;
    if (!format.empty()) {
      if (format == "csv") {
        cfg.format = SweepConfig::Format::csv;
      } else if (format == "json") {
        cfg.format = SweepConfig::Format::json;
      } else {
        throw std::domain_error("format must be csv or json");
      }
    }
    if (cmd->count("--oracle")) cfg.use_analytic_oracle = oracle;
    return cfg;
  }
};

int run_sweep_command(const SweepConfig& cfg) {
  const SweepGrid grid = run_sweep(cfg);
  std::optional<SweepGrid> edge;
  if (cfg.t_zero_edge) edge = t_zero_edge_grid(cfg);

  std::ostringstream body;
  if (cfg.format == SweepConfig::Format::csv) {
    body << to_string(grid.x.name) << ',' << to_string(grid.y.name);
    for (Observable o : grid.observables) body << ',' << to_string(o);
    body << '\n';
    if (edge) emit_csv_rows(*edge, body);
    emit_csv_rows(grid, body);
  } else {
    if (edge) {
      emit_json_with_edge(*edge, grid, body);
    } else {
      emit_json(grid, body);
    }
  }

  if (cfg.output_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + cfg.output_path);
    out << body.str();
    if (!out) throw std::runtime_error("write failed: " + cfg.output_path);
  }

  const bool nan_cells = grid.has_nan() || (edge && edge->has_nan());
  if (nan_cells) {
    std::cerr << "warning: grid contains NaN cells (per-point numeric failures)\n";
    return 2;
  }
  return 0;
}

int run_contour_command(const SweepConfig& cfg, double level, const std::string& obs_name,
                        const std::string& out_path) {
  const SweepGrid grid = run_sweep(cfg);
  const Observable obs =
      obs_name.empty() ? cfg.observables.front() : observable_from_string(obs_name);
  const auto polylines = contour_zero(grid, obs, level);

  std::ostringstream body;
  emit_contour_csv(polylines, body);
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    out << body.str();
  }
  if (grid.has_nan()) {
    std::cerr << "warning: grid contains NaN cells\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extended Hubbard dimer: exact diagonalization and fermionic concurrence"};
  app.require_subcommand(1);

  SweepCli sweep_cli;
  CLI::App* sweep_cmd = sweep_cli.attach(app, "sweep", "evaluate a 2-axis parameter grid");

  SweepCli contour_cli;
  CLI::App* contour_cmd =
      contour_cli.attach(app, "contour", "extract a level set from a 2-axis grid");
  double contour_level = 0.0;
  std::string contour_obs;
  std::string contour_out;
  contour_cmd->add_option("--level", contour_level, "contour level")->required();
  contour_cmd->add_option("--contour-obs", contour_obs, "observable to contour (default: first)");
  contour_cmd->add_option("--contour-out", contour_out, "polyline CSV path (default stdout)");

  CLI::App* tth_cmd = app.add_subcommand("tth", "threshold temperature of the bare dimer");
  double tth_u = 0.0, tth_v = 0.0;
  tth_cmd->add_option("-u,--u", tth_u, "on-site coupling U")->required();
  tth_cmd->add_option("-v,--v", tth_v, "nearest-neighbor coupling V")->required();

  CLI::App* point_cmd = app.add_subcommand("point", "evaluate one parameter point");
  double p_U = 0.0, p_V = 0.0, p_mu = 0.0, p_B = 0.0, p_gmu = 0.0;
  std::string p_ensemble = "ground";
  std::string p_scope;
  point_cmd->add_option("-U,--U", p_U, "on-site coupling");
  point_cmd->add_option("-V,--V", p_V, "nearest-neighbor coupling");
  point_cmd->add_option("--mu", p_mu, "staggered local potential");
  point_cmd->add_option("-B,--B", p_B, "staggered Zeeman field");
  point_cmd->add_option("--global-mu", p_gmu, "global chemical potential");
  point_cmd->add_option("--ensemble", p_ensemble, "ground | canonical:T | grand:T");
  point_cmd->add_option("--scope", p_scope, "sector scope: half | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (sweep_cmd->parsed()) {
      return run_sweep_command(sweep_cli.build(sweep_cmd));
    }
    if (contour_cmd->parsed()) {
      return run_contour_command(contour_cli.build(contour_cmd), contour_level, contour_obs,
                                 contour_out);
    }
    if (tth_cmd->parsed()) {
      const auto result = threshold_temperature(tth_u, tth_v);
      if (!result) {
        std::cout << "t_th nan (sin 2 theta = 0, the concurrence never turns on)\n";
        return 0;
      }
      std::cout << "t_th " << fmt(result->t_th) << "\n"
                << "residual " << fmt(result->residual) << "\n"
                << "bracket [" << fmt(result->bracket_lo) << ", " << fmt(result->bracket_hi)
                << "]\n";
      return 0;
    }
    if (point_cmd->parsed()) {
      ModelParams params = dimer_params(p_U, p_V, p_mu, p_B);
      params.global_mu = p_gmu;
      EnsembleDescriptor ens;
      parse_ensemble(p_ensemble, ens);
      if (!p_scope.empty()) ens.scope = parse_scope(p_scope);

      const PointResult r = evaluate_pipeline(params, ens);
      std::cout << "energy " << fmt(r.energy) << "\n"
                << "log_z " << fmt(r.log_z) << "\n"
                << "z " << fmt(r.rdm.z) << "\n"
                << "u_plus " << fmt(r.rdm.u_plus) << "\n"
                << "w1 " << fmt(r.rdm.w1) << "\n"
                << "w2 " << fmt(r.rdm.w2) << "\n"
                << "u_minus " << fmt(r.rdm.u_minus) << "\n"
                << "c_wootters " << fmt(r.concurrence.c_wootters) << "\n"
                << "c_xform " << fmt(r.concurrence.c_xform) << "\n"
                << "c_eq5 " << fmt(r.concurrence.c_eq5) << "\n"
                << "e_f " << fmt(r.concurrence.e_f) << "\n";
      if (p_mu == 0.0 && p_B == 0.0) {
        const auto th = threshold_temperature(p_U, p_V);
        std::cout << "t_th " << fmt(th ? th->t_th : std::nan("")) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
