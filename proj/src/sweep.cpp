#include "hubbard/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hubbard/dimer_analytic.hpp"
#include "json.hpp"

namespace hubbard {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_g12(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// Names
// ---------------------------------------------------------------------------

std::string to_string(AxisName name) {
  switch (name) {
    case AxisName::U: return "U";
    case AxisName::V: return "V";
    case AxisName::T: return "T";
    case AxisName::mu: return "mu";
    case AxisName::B: return "B";
  }
  return "?";
}

AxisName axis_name_from_string(const std::string& s) {
  if (s == "U") return AxisName::U;
  if (s == "V") return AxisName::V;
  if (s == "T") return AxisName::T;
  if (s == "mu") return AxisName::mu;
  if (s == "B") return AxisName::B;
  throw std::domain_error("unknown axis name: " + s);
}

std::string to_string(Observable obs) {
  switch (obs) {
    case Observable::c_wootters: return "c_wootters";
    case Observable::c_eq5: return "c_eq5";
    case Observable::e_f: return "e_f";
    case Observable::z: return "z";
    case Observable::u_minus: return "u_minus";
    case Observable::energy: return "energy";
    case Observable::t_th: return "t_th";
  }
  return "?";
}

Observable observable_from_string(const std::string& s) {
  for (Observable o : {Observable::c_wootters, Observable::c_eq5, Observable::e_f,
                       Observable::z, Observable::u_minus, Observable::energy,
                       Observable::t_th}) {
    if (s == to_string(o)) return o;
  }
  throw std::domain_error("unknown observable: " + s);
}

// ---------------------------------------------------------------------------
// Axis / config validation
// ---------------------------------------------------------------------------

double Axis::value(int k) const {
  if (steps == 1) return min;  // degenerate single-row block (T = 0 edge)
  return min + k * (max - min) / (steps - 1);
}

void Axis::validate() const {
  if (steps < 2) throw std::domain_error("Axis: steps must be >= 2");
  if (!(min < max)) throw std::domain_error("Axis: min must be < max");
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw std::domain_error("Axis: bounds must be finite");
  }
}

void SweepConfig::validate() const {
  base.validate();
  x.validate();
  y.validate();
  if (x.name == y.name) throw std::domain_error("SweepConfig: axis names must differ");
  if (observables.empty()) throw std::domain_error("SweepConfig: no observables requested");
  {
    std::set<Observable> seen(observables.begin(), observables.end());
    if (seen.size() != observables.size()) {
      throw std::domain_error("SweepConfig: duplicate observables");
    }
  }

  const bool has_t_axis = (x.name == AxisName::T || y.name == AxisName::T);
  const bool wants_tth =
      std::find(observables.begin(), observables.end(), Observable::t_th) != observables.end();
  if (wants_tth && has_t_axis) {
    throw std::domain_error("SweepConfig: t_th observable requires neither axis to be T");
  }
  if (has_t_axis && ensemble.kind == EnsembleKind::ground) {
    throw std::domain_error("SweepConfig: a T axis needs a thermal ensemble kind");
  }
  if (ensemble.kind == EnsembleKind::grand_canonical && ensemble.scope != SectorScope::all) {
    throw std::domain_error("SweepConfig: grand-canonical runs span all sectors");
  }
  if (t_zero_edge && y.name != AxisName::T) {
    throw std::domain_error("SweepConfig: the T = 0 edge block needs y to be the T axis");
  }

  const bool wants_pipeline = std::any_of(
      observables.begin(), observables.end(), [](Observable o) { return o != Observable::t_th; });
  if (wants_pipeline && base.num_sites < 2) {
    throw std::domain_error("SweepConfig: concurrence observables need L >= 2");
  }

  if (use_analytic_oracle) {
    for (Observable o : observables) {
      if (o != Observable::c_wootters && o != Observable::c_eq5 && o != Observable::e_f &&
          o != Observable::t_th) {
        throw std::domain_error("SweepConfig: analytic oracle only provides concurrence and t_th");
      }
    }
    if (wants_pipeline) {
      const bool dimer_fields_zero =
          std::all_of(base.mu.begin(), base.mu.end(), [](double v) { return v == 0.0; }) &&
          std::all_of(base.B.begin(), base.B.end(), [](double v) { return v == 0.0; });
      if (base.num_sites != 2 || base.t != 1.0 || base.boundary != Boundary::periodic ||
          base.global_mu != 0.0 || !dimer_fields_zero ||
          ensemble.kind == EnsembleKind::grand_canonical ||
          ensemble.scope != SectorScope::half_filling ||
          x.name == AxisName::mu || x.name == AxisName::B || y.name == AxisName::mu ||
          y.name == AxisName::B) {
        throw std::domain_error(
            "SweepConfig: the analytic oracle covers the bare dimer at half filling only");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

double SweepGrid::at(int ix, int iy, std::size_t obs_index) const {
  const std::size_t row = static_cast<std::size_t>(iy) * x.steps + ix;
  return values[row * observables.size() + obs_index];
}

bool SweepGrid::has_nan() const {
  return std::any_of(values.begin(), values.end(), [](double v) { return std::isnan(v); });
}

PointResult evaluate_pipeline(const ModelParams& params, const EnsembleDescriptor& ens) {
  const auto keys = ens.scope == SectorScope::half_filling
                        ? half_filling_sector_keys(params.num_sites)
                        : all_sector_keys(params.num_sites);
  const Spectrum spectrum = diagonalize_sectors(params, keys);

  EnsembleSpec spec;
  spec.kind = ens.kind;
  spec.temperature = ens.temperature;
  if (ens.kind == EnsembleKind::canonical) spec.sectors = keys;
  const ThermalWeights weights = thermal_weights(spectrum, spec);

  PointResult out;
  out.rdm = two_site_rdm(spectrum, weights, 0, 1, Spin::up);
  out.concurrence = concurrence_of(out.rdm);
  out.energy = energy_expectation(spectrum, weights);
  out.log_z = weights.log_z;
  return out;
}

namespace {

void assign_axis(AxisName name, double value, ModelParams& params, EnsembleDescriptor& ens) {
  switch (name) {
    case AxisName::U: params.U = value; break;
    case AxisName::V: params.V = value; break;
    case AxisName::T: ens.temperature = value; break;
    case AxisName::mu:
      for (int j = 0; j < params.num_sites; ++j) params.mu[j] = (j % 2 == 0) ? value : -value;
      break;
    case AxisName::B:
      for (int j = 0; j < params.num_sites; ++j) params.B[j] = (j % 2 == 0) ? value : -value;
      break;
  }
}

std::vector<double> evaluate_point(const SweepConfig& config, ModelParams params,
                                   EnsembleDescriptor ens) {
  std::vector<double> row;
  row.reserve(config.observables.size());

  const bool wants_pipeline = std::any_of(
      config.observables.begin(), config.observables.end(),
      [](Observable o) { return o != Observable::t_th; });

  double c = kNaN;
  PointResult point;
  if (wants_pipeline) {
    if (config.use_analytic_oracle) {
      c = ens.kind == EnsembleKind::ground
              ? ground_concurrence(params.U, params.V)
              : thermal_concurrence(params.U, params.V, ens.temperature);
    } else {
      point = evaluate_pipeline(params, ens);
    }
  }

  for (Observable obs : config.observables) {
    switch (obs) {
      case Observable::c_wootters:
        row.push_back(config.use_analytic_oracle ? c : point.concurrence.c_wootters);
        break;
      case Observable::c_eq5:
        row.push_back(config.use_analytic_oracle ? c : point.concurrence.c_eq5);
        break;
      case Observable::e_f:
        row.push_back(config.use_analytic_oracle ? entanglement_of_formation(c)
                                                 : point.concurrence.e_f);
        break;
      case Observable::z: row.push_back(point.rdm.z); break;
      case Observable::u_minus: row.push_back(point.rdm.u_minus); break;
      case Observable::energy: row.push_back(point.energy); break;
      case Observable::t_th: {
        const auto th = threshold_temperature(params.U, params.V);
        row.push_back(th ? th->t_th : kNaN);
        break;
      }
    }
  }
  return row;
}

SweepGrid run_rows(const SweepConfig& config, const Axis& y_axis,
                   const EnsembleDescriptor& base_ens) {
  SweepGrid grid;
  grid.x = config.x;
  grid.y = y_axis;
  grid.observables = config.observables;
  grid.values.reserve(static_cast<std::size_t>(config.x.steps) * y_axis.steps *
                      config.observables.size());

  for (int iy = 0; iy < y_axis.steps; ++iy) {
    for (int ix = 0; ix < config.x.steps; ++ix) {
      ModelParams params = config.base;
      EnsembleDescriptor ens = base_ens;
      assign_axis(config.x.name, config.x.value(ix), params, ens);
      assign_axis(y_axis.name, y_axis.value(iy), params, ens);
      std::vector<double> row;
      try {
        row = evaluate_point(config, params, ens);
      } catch (const std::exception&) {
        row.assign(config.observables.size(), kNaN);  // NaN cell, keep sweeping
      }
      grid.values.insert(grid.values.end(), row.begin(), row.end());
    }
  }
  return grid;
}

}  // namespace

SweepGrid run_sweep(const SweepConfig& config) {
  config.validate();
  return run_rows(config, config.y, config.ensemble);
}

SweepGrid t_zero_edge_grid(const SweepConfig& config) {
  config.validate();
  if (!config.t_zero_edge) {
    throw std::domain_error("t_zero_edge_grid: config has no T = 0 edge");
  }
  Axis edge;
  edge.name = AxisName::T;
  edge.min = edge.max = 0.0;
  edge.steps = 1;
  EnsembleDescriptor ens = config.ensemble;
  ens.kind = EnsembleKind::ground;
  ens.temperature = 0.0;
  return run_rows(config, edge, ens);
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

FigurePreset figure_preset_from_string(const std::string& s) {
  const std::map<std::string, FigurePreset> names{
      {"fig1", FigurePreset::fig1}, {"fig2", FigurePreset::fig2},
      {"fig3", FigurePreset::fig3}, {"fig4", FigurePreset::fig4},
      {"fig5", FigurePreset::fig5}, {"fig6", FigurePreset::fig6},
      {"fig7", FigurePreset::fig7}};
  const auto it = names.find(s);
  if (it == names.end()) throw std::domain_error("unknown preset: " + s);
  return it->second;
}

SweepConfig figure_preset(FigurePreset preset) {
  SweepConfig c;
  c.base = dimer_params(0.0, 0.0);
  c.x = Axis{AxisName::U, -8.0, 8.0, 161};
  c.y = Axis{AxisName::V, -8.0, 8.0, 161};
  c.observables = {Observable::c_wootters, Observable::c_eq5};
  c.format = SweepConfig::Format::csv;

  switch (preset) {
    case FigurePreset::fig1:
      c.ensemble = {EnsembleKind::ground, 0.0, SectorScope::half_filling};
      c.output_path = "fig1.csv";
      break;
    case FigurePreset::fig2:
      // V = 0 slice; the T = 0 column is evaluated with the ground kind and
      // written as a separate leading row block.
      c.y = Axis{AxisName::T, 0.05, 5.0, 161};
      c.ensemble = {EnsembleKind::canonical, 0.05, SectorScope::half_filling};
      c.t_zero_edge = true;
      c.output_path = "fig2.csv";
      break;
    case FigurePreset::fig3:
      c.observables = {Observable::t_th};
      c.use_analytic_oracle = true;
      c.ensemble = {EnsembleKind::ground, 0.0, SectorScope::half_filling};
      c.output_path = "fig3.csv";
      break;
    case FigurePreset::fig4:
    case FigurePreset::fig5:
    case FigurePreset::fig6:
    case FigurePreset::fig7: {
      // U = 2 with a staggered field axis. V >= 0 keeps the window on the
      // singlet / one-particle crossing structure; at V < 0 the unpinned
      // grand-canonical ground state is the empty or fully filled trivial
      // phase and the surface carries no occupation coherence.
      c.base = dimer_params(2.0, 0.0);
      const bool zeeman = preset == FigurePreset::fig6 || preset == FigurePreset::fig7;
      c.x = Axis{zeeman ? AxisName::B : AxisName::mu, -4.0, 4.0, 161};
      c.y = Axis{AxisName::V, 0.0, 8.0, 161};
      const bool thermal = preset == FigurePreset::fig5 || preset == FigurePreset::fig7;
      c.ensemble = thermal
                       ? EnsembleDescriptor{EnsembleKind::grand_canonical, 0.1, SectorScope::all}
                       : EnsembleDescriptor{EnsembleKind::ground, 0.0, SectorScope::all};
      c.output_path = "fig" + std::to_string(static_cast<int>(preset) + 1) + ".csv";
      break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

void emit_csv_rows(const SweepGrid& grid, std::ostream& out) {
  const std::size_t nobs = grid.observables.size();
  for (int iy = 0; iy < grid.y.steps; ++iy) {
    for (int ix = 0; ix < grid.x.steps; ++ix) {
      out << format_g12(grid.x.value(ix)) << ',' << format_g12(grid.y.value(iy));
      for (std::size_t k = 0; k < nobs; ++k) out << ',' << format_g12(grid.at(ix, iy, k));
      out << '\n';
    }
  }
}

void emit_csv(const SweepGrid& grid, std::ostream& out) {
  out << to_string(grid.x.name) << ',' << to_string(grid.y.name);
  for (Observable o : grid.observables) out << ',' << to_string(o);
  out << '\n';
  emit_csv_rows(grid, out);
}

namespace {

nlohmann::json axis_to_json(const Axis& a) {
  return {{"name", to_string(a.name)}, {"min", a.min}, {"max", a.max}, {"steps", a.steps}};
}

nlohmann::json grid_to_json(const SweepGrid& grid) {
  nlohmann::json j;
  j["x_axis"] = axis_to_json(grid.x);
  j["y_axis"] = axis_to_json(grid.y);
  j["observables"] = nlohmann::json::array();
  for (Observable o : grid.observables) j["observables"].push_back(to_string(o));
  auto rows = nlohmann::json::array();
  for (int iy = 0; iy < grid.y.steps; ++iy) {
    for (int ix = 0; ix < grid.x.steps; ++ix) {
      auto row = nlohmann::json::array();
      row.push_back(grid.x.value(ix));
      row.push_back(grid.y.value(iy));
      for (std::size_t k = 0; k < grid.observables.size(); ++k) {
        const double v = grid.at(ix, iy, k);
        if (std::isnan(v)) {
          row.push_back(nullptr);  // JSON has no NaN literal
        } else {
          row.push_back(v);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  j["rows"] = std::move(rows);
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void emit_json(const SweepGrid& grid, std::ostream& out) {
  out << grid_to_json(grid).dump(1) << '\n';
}

void emit_json_with_edge(const SweepGrid& edge, const SweepGrid& grid, std::ostream& out) {
  nlohmann::json j;
  j["t_zero_edge"] = grid_to_json(edge);
  j["grid"] = grid_to_json(grid);
  out << j.dump(1) << '\n';
}

void emit_csv(const SweepGrid& grid, const std::string& path) {
  std::ostringstream ss;
  emit_csv(grid, ss);
  write_file(path, ss.str());
}

void emit_json(const SweepGrid& grid, const std::string& path) {
  std::ostringstream ss;
  emit_json(grid, ss);
  write_file(path, ss.str());
}

// ---------------------------------------------------------------------------
// Marching squares
// ---------------------------------------------------------------------------

namespace {

// Edges are identified by their lower-left grid node and orientation, so the
// crossing point of a shared edge is computed once per identity and chains
// stitch exactly.
struct EdgeId {
  int ix;
  int iy;
  bool horizontal;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct EdgeCut {
  EdgeId a;
  EdgeId b;
};

}  // namespace

std::vector<Polyline> contour_zero(const SweepGrid& grid, Observable obs, double level) {
  const auto it = std::find(grid.observables.begin(), grid.observables.end(), obs);
  if (it == grid.observables.end()) {
    throw std::domain_error("contour_zero: observable not present in grid");
  }
  const std::size_t k = static_cast<std::size_t>(it - grid.observables.begin());

  const auto f = [&](int ix, int iy) { return grid.at(ix, iy, k); };
  const auto inside = [&](double v) { return v >= level; };

  std::vector<EdgeCut> segments;
  for (int iy = 0; iy + 1 < grid.y.steps; ++iy) {
    for (int ix = 0; ix + 1 < grid.x.steps; ++ix) {
      const double f00 = f(ix, iy), f10 = f(ix + 1, iy);
      const double f11 = f(ix + 1, iy + 1), f01 = f(ix, iy + 1);
      if (std::isnan(f00) || std::isnan(f10) || std::isnan(f11) || std::isnan(f01)) continue;

      const int code = (inside(f00) ? 1 : 0) | (inside(f10) ? 2 : 0) | (inside(f11) ? 4 : 0) |
                       (inside(f01) ? 8 : 0);
      if (code == 0 || code == 15) continue;

      const EdgeId bottom{ix, iy, true};
      const EdgeId top{ix, iy + 1, true};
      const EdgeId left{ix, iy, false};
      const EdgeId right{ix + 1, iy, false};

      const auto emit = [&](EdgeId a, EdgeId b) { segments.push_back({a, b}); };
      switch (code) {
        case 1: emit(left, bottom); break;
        case 2: emit(bottom, right); break;
        case 3: emit(left, right); break;
        case 4: emit(right, top); break;
        case 6: emit(bottom, top); break;
        case 7: emit(left, top); break;
        case 8: emit(top, left); break;
        case 9: emit(bottom, top); break;
        case 11: emit(right, top); break;
        case 12: emit(right, left); break;
        case 13: emit(bottom, right); break;
        case 14: emit(left, bottom); break;
        case 5: {  // saddle: corners 00 and 11 inside
          const double center = 0.25 * (f00 + f10 + f11 + f01);
          if (inside(center)) {
            emit(bottom, right);
            emit(top, left);
          } else {
            emit(left, bottom);
            emit(right, top);
          }
          break;
        }
        case 10: {  // saddle: corners 10 and 01 inside
          const double center = 0.25 * (f00 + f10 + f11 + f01);
          if (inside(center)) {
            emit(left, bottom);
            emit(right, top);
          } else {
            emit(bottom, right);
            emit(top, left);
          }
          break;
        }
        default: break;
      }
    }
  }

  // Crossing coordinates. Horizontal edges run left -> right, vertical ones
  // bottom -> top; the orientation is fixed so t is reproducible.
  const auto cut_point = [&](EdgeId e) {
    double fa, fb, xa, ya, xb, yb;
    if (e.horizontal) {
      fa = f(e.ix, e.iy);
      fb = f(e.ix + 1, e.iy);
      xa = grid.x.value(e.ix);
      xb = grid.x.value(e.ix + 1);
      ya = yb = grid.y.value(e.iy);
    } else {
      fa = f(e.ix, e.iy);
      fb = f(e.ix, e.iy + 1);
      xa = xb = grid.x.value(e.ix);
      ya = grid.y.value(e.iy);
      yb = grid.y.value(e.iy + 1);
    }
    const double t = (fb == fa) ? 0.5 : (level - fa) / (fb - fa);
    return ContourPoint{xa + t * (xb - xa), ya + t * (yb - ya)};
  };

  // Stitch segments into chains; every edge joins at most two segments.
  std::map<EdgeId, std::vector<std::size_t>> by_edge;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    by_edge[segments[i].a].push_back(i);
    by_edge[segments[i].b].push_back(i);
  }

  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> polylines;

  const auto other_end = [&](std::size_t seg, EdgeId from) {
    return segments[seg].a == from ? segments[seg].b : segments[seg].a;
  };
  const auto next_segment = [&](EdgeId at) -> std::ptrdiff_t {
    for (std::size_t cand : by_edge[at]) {
      if (!used[cand]) return static_cast<std::ptrdiff_t>(cand);
    }
    return -1;
  };

  for (std::size_t start = 0; start < segments.size(); ++start) {
    if (used[start]) continue;
    used[start] = true;

    std::vector<EdgeId> chain{segments[start].a, segments[start].b};
    // extend forward
    for (;;) {
      const auto nxt = next_segment(chain.back());
      if (nxt < 0) break;
      used[static_cast<std::size_t>(nxt)] = true;
      chain.push_back(other_end(static_cast<std::size_t>(nxt), chain.back()));
      if (chain.back() == chain.front()) break;  // closed loop
    }
    // extend backward unless already closed
    if (chain.back() != chain.front()) {
      for (;;) {
        const auto nxt = next_segment(chain.front());
        if (nxt < 0) break;
        used[static_cast<std::size_t>(nxt)] = true;
        chain.insert(chain.begin(), other_end(static_cast<std::size_t>(nxt), chain.front()));
      }
    }

    Polyline line;
    line.reserve(chain.size());
    for (EdgeId e : chain) line.push_back(cut_point(e));
    polylines.push_back(std::move(line));
  }

  return polylines;
}

void emit_contour_csv(const std::vector<Polyline>& polylines, std::ostream& out) {
  out << "polyline,x,y\n";
  for (std::size_t i = 0; i < polylines.size(); ++i) {
    for (const ContourPoint& p : polylines[i]) {
      out << i << ',' << format_g12(p.x) << ',' << format_g12(p.y) << '\n';
    }
  }
}

void emit_contour_csv(const std::vector<Polyline>& polylines, const std::string& path) {
  std::ostringstream ss;
  emit_contour_csv(polylines, ss);
  write_file(path, ss.str());
}

// ---------------------------------------------------------------------------
// Config JSON
// ---------------------------------------------------------------------------

namespace {

Axis axis_from_json(const nlohmann::json& j) {
  Axis a;
  a.name = axis_name_from_string(j.at("name").get<std::string>());
  a.min = j.at("min").get<double>();
  a.max = j.at("max").get<double>();
  a.steps = j.at("steps").get<int>();
  return a;
}

}  // namespace

SweepConfig config_from_json_string(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  SweepConfig c;

  if (j.contains("base")) {
    const auto& b = j["base"];
    const int L = b.value("L", 2);
    c.base = dimer_params(0.0, 0.0);
    if (L != 2) {
      c.base.num_sites = L;
      c.base.mu.assign(L, 0.0);
      c.base.B.assign(L, 0.0);
    }
    c.base.t = b.value("t", 1.0);
    c.base.U = b.value("U", 0.0);
    c.base.V = b.value("V", 0.0);
    c.base.global_mu = b.value("global_mu", 0.0);
    const double mu = b.value("mu", 0.0);
    const double B = b.value("B", 0.0);
    for (int s = 0; s < c.base.num_sites; ++s) {
      c.base.mu[s] = (s % 2 == 0) ? mu : -mu;
      c.base.B[s] = (s % 2 == 0) ? B : -B;
    }
    const std::string boundary = b.value("boundary", "periodic");
    if (boundary == "periodic") {
      c.base.boundary = Boundary::periodic;
    } else if (boundary == "open") {
      c.base.boundary = Boundary::open;
    } else {
      throw std::domain_error("config: boundary must be periodic or open");
    }
  }

  if (j.contains("x_axis")) c.x = axis_from_json(j["x_axis"]);
  if (j.contains("y_axis")) c.y = axis_from_json(j["y_axis"]);

  if (j.contains("ensemble")) {
    const auto& e = j["ensemble"];
    const std::string kind = e.value("kind", "ground");
    if (kind == "ground") {
      c.ensemble.kind = EnsembleKind::ground;
    } else if (kind == "canonical") {
      c.ensemble.kind = EnsembleKind::canonical;
    } else if (kind == "grand_canonical" || kind == "grand") {
      c.ensemble.kind = EnsembleKind::grand_canonical;
    } else {
      throw std::domain_error("config: unknown ensemble kind " + kind);
    }
    c.ensemble.temperature = e.value("T", 0.0);
    const std::string scope = e.value(
        "scope", c.ensemble.kind == EnsembleKind::grand_canonical ? "all" : "half_filling");
    if (scope == "half_filling") {
      c.ensemble.scope = SectorScope::half_filling;
    } else if (scope == "all") {
      c.ensemble.scope = SectorScope::all;
    } else {
      throw std::domain_error("config: unknown sector scope " + scope);
    }
  }

  if (j.contains("observables")) {
    c.observables.clear();
    for (const auto& name : j["observables"]) {
      c.observables.push_back(observable_from_string(name.get<std::string>()));
    }
  }
  c.output_path = j.value("output", c.output_path);
  const std::string format = j.value("format", "csv");
  if (format == "csv") {
    c.format = SweepConfig::Format::csv;
  } else if (format == "json") {
    c.format = SweepConfig::Format::json;
  } else {
    throw std::domain_error("config: format must be csv or json");
  }
  c.use_analytic_oracle = j.value("analytic_oracle", false);
  c.t_zero_edge = j.value("t_zero_edge", false);
  return c;
}

std::string config_to_json_string(const SweepConfig& c) {
  nlohmann::json j;
  j["base"] = {{"L", c.base.num_sites},
               {"t", c.base.t},
               {"U", c.base.U},
               {"V", c.base.V},
               {"mu", c.base.mu.empty() ? 0.0 : c.base.mu[0]},
               {"B", c.base.B.empty() ? 0.0 : c.base.B[0]},
               {"boundary", c.base.boundary == Boundary::periodic ? "periodic" : "open"},
               {"global_mu", c.base.global_mu}};
  j["x_axis"] = axis_to_json(c.x);
  j["y_axis"] = axis_to_json(c.y);
  const char* kind = c.ensemble.kind == EnsembleKind::ground
                         ? "ground"
                         : (c.ensemble.kind == EnsembleKind::canonical ? "canonical"
                                                                       : "grand_canonical");
  j["ensemble"] = {{"kind", kind},
                   {"T", c.ensemble.temperature},
                   {"scope", c.ensemble.scope == SectorScope::all ? "all" : "half_filling"}};
  j["observables"] = nlohmann::json::array();
  for (Observable o : c.observables) j["observables"].push_back(to_string(o));
  j["output"] = c.output_path;
  j["format"] = c.format == SweepConfig::Format::csv ? "csv" : "json";
  j["analytic_oracle"] = c.use_analytic_oracle;
  j["t_zero_edge"] = c.t_zero_edge;
  return j.dump(1) + "\n";
}

}  // namespace hubbard
