// Two-axis parameter sweeps over the dimer pipeline, figure presets, CSV and
// JSON emission, and marching-squares level sets.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hubbard/entanglement.hpp"
#include "hubbard/model.hpp"
#include "hubbard/spectra.hpp"

namespace hubbard {

enum class AxisName { U, V, T, mu, B };

std::string to_string(AxisName name);
AxisName axis_name_from_string(const std::string& s);

struct Axis {
  AxisName name = AxisName::U;
  double min = 0.0;
  double max = 1.0;
  int steps = 2;  // >= 2

  double value(int k) const;  // min + k (max - min) / (steps - 1)
  void validate() const;
};

enum class Observable { c_wootters, c_eq5, e_f, z, u_minus, energy, t_th };

std::string to_string(Observable obs);
Observable observable_from_string(const std::string& s);

/// Which sectors span the ensemble's state space.
enum class SectorScope { half_filling, all };

struct EnsembleDescriptor {
  EnsembleKind kind = EnsembleKind::ground;
  double temperature = 0.0;  // thermal kinds only
  SectorScope scope = SectorScope::half_filling;
};

struct SweepConfig {
  ModelParams base = dimer_params(0.0, 0.0);
  Axis x;
  Axis y;
  EnsembleDescriptor ensemble;
  std::vector<Observable> observables{Observable::c_wootters, Observable::c_eq5};
  std::string output_path;
  enum class Format { csv, json } format = Format::csv;

  // Presets may route concurrence observables through the closed dimer
  // forms instead of the ED pipeline (fig3's threshold surface does).
  bool use_analytic_oracle = false;

  // fig2 only: prepend a T = 0 row block computed with the ground kind.
  bool t_zero_edge = false;

  void validate() const;  // throws std::domain_error on inconsistent configs
};

/// Row-major table of (x, y, observables...); y is the outer loop.
struct SweepGrid {
  Axis x;
  Axis y;
  std::vector<Observable> observables;
  std::vector<double> values;  // [(iy * x.steps + ix) * nobs + k]

  double at(int ix, int iy, std::size_t obs_index) const;
  std::size_t rows() const { return static_cast<std::size_t>(x.steps) * y.steps; }
  bool has_nan() const;
};

/// Everything the pipeline produces at a single parameter point.
struct PointResult {
  SpinSectorRDM rdm;
  ConcurrenceResult concurrence;
  double energy = 0.0;
  double log_z = 0.0;
};

PointResult evaluate_pipeline(const ModelParams& params, const EnsembleDescriptor& ens);

/// Evaluate every grid point. Numeric failures become NaN cells (the grid is
/// never aborted); callers detect them with SweepGrid::has_nan.
SweepGrid run_sweep(const SweepConfig& config);

enum class FigurePreset { fig1, fig2, fig3, fig4, fig5, fig6, fig7 };

FigurePreset figure_preset_from_string(const std::string& s);
SweepConfig figure_preset(FigurePreset preset);

/// CSV with header `x,y,<obs...>`, one row per grid point in table order,
/// 12 significant digits, NaN spelled `nan`.
void emit_csv(const SweepGrid& grid, std::ostream& out);
void emit_csv(const SweepGrid& grid, const std::string& path);
void emit_csv_rows(const SweepGrid& grid, std::ostream& out);  // no header
void emit_json(const SweepGrid& grid, std::ostream& out);
void emit_json(const SweepGrid& grid, const std::string& path);
void emit_json_with_edge(const SweepGrid& edge, const SweepGrid& grid, std::ostream& out);

/// fig2's ground-kind T = 0 edge, emitted as the first row block.
SweepGrid t_zero_edge_grid(const SweepConfig& config);

// ---------------------------------------------------------------------------
// Level sets
// ---------------------------------------------------------------------------

struct ContourPoint {
  double x = 0.0;
  double y = 0.0;
};

using Polyline = std::vector<ContourPoint>;

/// Marching-squares level set with linear interpolation on cell edges;
/// saddle cells are split by the cell-center value. Cells containing NaN
/// are skipped. The result may be empty.
std::vector<Polyline> contour_zero(const SweepGrid& grid, Observable obs, double level);

void emit_contour_csv(const std::vector<Polyline>& polylines, std::ostream& out);
void emit_contour_csv(const std::vector<Polyline>& polylines, const std::string& path);

// JSON round trip for SweepConfig (the CLI's --config format).
SweepConfig config_from_json_string(const std::string& text);
std::string config_to_json_string(const SweepConfig& config);

}  // namespace hubbard
