#include "hubbard/sweep.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "hubbard/dimer_analytic.hpp"

using namespace hubbard;

namespace {

SweepConfig small_ground_config() {
  SweepConfig cfg;
  cfg.base = dimer_params(0.0, 0.0);
  cfg.x = Axis{AxisName::U, -8.0, 8.0, 5};
  cfg.y = Axis{AxisName::V, -8.0, 8.0, 5};
  cfg.ensemble = {EnsembleKind::ground, 0.0, SectorScope::half_filling};
  cfg.observables = {Observable::c_wootters};
  return cfg;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += (c == '\n');
  return n;
}

}  // namespace

TEST_CASE("axis grid points hit the end points exactly") {
  const Axis a{AxisName::T, 0.05, 5.0, 161};
  CHECK(a.value(0) == 0.05);
  CHECK(a.value(160) == 5.0);
  CHECK_THROWS_AS((Axis{AxisName::U, 0.0, 1.0, 1}.validate()), std::domain_error);
  CHECK_THROWS_AS((Axis{AxisName::U, 1.0, 0.0, 5}.validate()), std::domain_error);
}

TEST_CASE("config validation") {
  SweepConfig cfg = small_ground_config();
  SUBCASE("axis names must differ") {
    cfg.y.name = AxisName::U;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  }
  SUBCASE("t_th cannot ride a temperature axis") {
    cfg.y = Axis{AxisName::T, 0.1, 5.0, 5};
    cfg.ensemble = {EnsembleKind::canonical, 0.1, SectorScope::half_filling};
    cfg.observables = {Observable::t_th};
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  }
  SUBCASE("a T axis needs a thermal kind") {
    cfg.y = Axis{AxisName::T, 0.1, 5.0, 5};
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  }
  SUBCASE("grand canonical spans all sectors") {
    cfg.ensemble = {EnsembleKind::grand_canonical, 0.5, SectorScope::half_filling};
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  }
  SUBCASE("oracle mode rejects field axes") {
    cfg.use_analytic_oracle = true;
    cfg.x.name = AxisName::mu;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  }
}

TEST_CASE("sweep evaluation matches single-point evaluation") {
  const SweepConfig cfg = small_ground_config();
  const SweepGrid grid = run_sweep(cfg);
  REQUIRE(grid.rows() == 25);

  for (int iy : {0, 2, 4}) {
    for (int ix : {1, 3}) {
      ModelParams p = cfg.base;
      p.U = cfg.x.value(ix);
      p.V = cfg.y.value(iy);
      const auto point = evaluate_pipeline(p, cfg.ensemble);
      CHECK(grid.at(ix, iy, 0) == point.concurrence.c_wootters);
    }
  }
}

TEST_CASE("sweeps agree with the closed forms cell by cell") {
  SUBCASE("ground-state map") {
    SweepConfig cfg = small_ground_config();
    cfg.x.steps = 9;
    cfg.y.steps = 9;
    const SweepGrid ed = run_sweep(cfg);
    cfg.use_analytic_oracle = true;
    const SweepGrid oracle = run_sweep(cfg);
    for (int iy = 0; iy < 9; ++iy) {
      for (int ix = 0; ix < 9; ++ix) {
        CHECK(std::abs(ed.at(ix, iy, 0) - oracle.at(ix, iy, 0)) < 1e-10);
      }
    }
  }
  SUBCASE("thermal map, monotone along T") {
    SweepConfig cfg = figure_preset(FigurePreset::fig2);
    cfg.x.steps = 9;
    cfg.y.steps = 9;
    cfg.t_zero_edge = false;
    const SweepGrid ed = run_sweep(cfg);
    cfg.use_analytic_oracle = true;
    const SweepGrid oracle = run_sweep(cfg);
    for (int iy = 0; iy < 9; ++iy) {
      for (int ix = 0; ix < 9; ++ix) {
        CHECK(std::abs(ed.at(ix, iy, 0) - oracle.at(ix, iy, 0)) < 1e-10);
        if (iy > 0) CHECK(ed.at(ix, iy, 0) <= ed.at(ix, iy - 1, 0) + 1e-12);
      }
    }
  }
}

TEST_CASE("csv emission") {
  SweepConfig cfg = small_ground_config();
  cfg.x.steps = 2;
  cfg.y.steps = 2;
  const SweepGrid grid = run_sweep(cfg);

  std::ostringstream out;
  emit_csv(grid, out);
  const std::string text = out.str();
  CHECK(count_lines(text) == 5);  // header + 4 rows
  CHECK(text.rfind("U,V,c_wootters\n", 0) == 0);

  SUBCASE("re-running the same config is byte-identical") {
    std::ostringstream again;
    emit_csv(run_sweep(cfg), again);
    CHECK(text == again.str());
  }

  SUBCASE("round trip at printed precision") {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    int row = 0;
    while (std::getline(in, line)) {
      const int iy = row / grid.x.steps;
      const int ix = row % grid.x.steps;
      double x, y, v;
      REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &v) == 3);
      CHECK(std::abs(v - grid.at(ix, iy, 0)) <=
            1e-11 * std::max(1.0, std::abs(grid.at(ix, iy, 0))));
      ++row;
    }
    CHECK(row == 4);
  }
}

TEST_CASE("nan cells survive emission and flag the grid") {
  SweepConfig cfg = small_ground_config();
  // T below the thermal floor fails per point without aborting the sweep
  cfg.x = Axis{AxisName::U, -2.0, 2.0, 3};
  cfg.y = Axis{AxisName::T, 1e-8, 1.0, 3};
  cfg.ensemble = {EnsembleKind::canonical, 0.1, SectorScope::half_filling};
  const SweepGrid grid = run_sweep(cfg);
  CHECK(grid.has_nan());
  CHECK(std::isnan(grid.at(0, 0, 0)));
  CHECK_FALSE(std::isnan(grid.at(0, 2, 0)));

  std::ostringstream out;
  emit_csv(grid, out);
  CHECK(out.str().find("nan") != std::string::npos);
}

TEST_CASE("figure presets") {
  SUBCASE("fig1 is the ground-state U-V map") {
    const SweepConfig cfg = figure_preset(FigurePreset::fig1);
    CHECK(cfg.x.name == AxisName::U);
    CHECK(cfg.y.name == AxisName::V);
    CHECK(cfg.x.steps == 161);
    CHECK(cfg.ensemble.kind == EnsembleKind::ground);
    CHECK(cfg.ensemble.scope == SectorScope::half_filling);
    cfg.validate();
  }
  SUBCASE("fig2 carries the T = 0 edge block") {
    const SweepConfig cfg = figure_preset(FigurePreset::fig2);
    CHECK(cfg.y.name == AxisName::T);
    CHECK(cfg.y.min == 0.05);
    CHECK(cfg.t_zero_edge);
    cfg.validate();
  }
  SUBCASE("fig3 maps the threshold temperature") {
    const SweepConfig cfg = figure_preset(FigurePreset::fig3);
    CHECK(cfg.observables == std::vector<Observable>{Observable::t_th});
    CHECK(cfg.use_analytic_oracle);
    cfg.validate();
  }
  SUBCASE("fig4..fig7 scan the staggered fields at U = 2") {
    for (auto preset :
         {FigurePreset::fig4, FigurePreset::fig5, FigurePreset::fig6, FigurePreset::fig7}) {
      const SweepConfig cfg = figure_preset(preset);
      CHECK(cfg.base.U == 2.0);
      CHECK(cfg.ensemble.scope == SectorScope::all);
      CHECK(cfg.y.name == AxisName::V);
      cfg.validate();
    }
    CHECK(figure_preset(FigurePreset::fig4).x.name == AxisName::mu);
    CHECK(figure_preset(FigurePreset::fig6).x.name == AxisName::B);
    CHECK(figure_preset(FigurePreset::fig5).ensemble.temperature == 0.1);
  }
  SUBCASE("unknown preset names are usage errors") {
    CHECK_THROWS_AS(figure_preset_from_string("fig8"), std::domain_error);
  }
}

TEST_CASE("fig2 zero-temperature edge block") {
  SweepConfig cfg = figure_preset(FigurePreset::fig2);
  cfg.x.steps = 5;
  cfg.y.steps = 4;
  const SweepGrid edge = t_zero_edge_grid(cfg);
  CHECK(edge.rows() == 5);
  // the edge is the ground-state curve at V = 0
  for (int ix = 0; ix < 5; ++ix) {
    CHECK(std::abs(edge.at(ix, 0, 0) - ground_concurrence(cfg.x.value(ix), 0.0)) < 1e-10);
  }

  std::ostringstream out;
  emit_csv_rows(edge, out);
  CHECK(count_lines(out.str()) == 5);
  CHECK(out.str().find(",0,") != std::string::npos);  // T column pinned to 0
}

TEST_CASE("contour extraction") {
  SweepGrid grid;
  grid.x = Axis{AxisName::U, -1.0, 1.0, 5};
  grid.y = Axis{AxisName::V, 0.0, 1.0, 4};
  grid.observables = {Observable::c_wootters};

  SUBCASE("constant grid has no level set") {
    grid.values.assign(grid.rows(), 0.5);
    CHECK(contour_zero(grid, Observable::c_wootters, 0.4).empty());
    CHECK(contour_zero(grid, Observable::c_wootters, 0.6).empty());
  }

  SUBCASE("f(x, y) = x at level 0 is the vertical line x = 0") {
    grid.values.clear();
    for (int iy = 0; iy < grid.y.steps; ++iy) {
      for (int ix = 0; ix < grid.x.steps; ++ix) grid.values.push_back(grid.x.value(ix));
    }
    const auto lines = contour_zero(grid, Observable::c_wootters, 0.0);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].size() == static_cast<std::size_t>(grid.y.steps));
    for (const auto& p : lines[0]) CHECK(p.x == 0.0);
    CHECK(lines[0].front().y != lines[0].back().y);
  }

  SUBCASE("missing observable is rejected") {
    grid.values.assign(grid.rows(), 0.0);
    CHECK_THROWS_AS(contour_zero(grid, Observable::e_f, 0.0), std::domain_error);
  }

  SUBCASE("a bump produces a closed loop") {
    grid.x = Axis{AxisName::U, -2.0, 2.0, 9};
    grid.y = Axis{AxisName::V, -2.0, 2.0, 9};
    grid.values.clear();
    for (int iy = 0; iy < 9; ++iy) {
      for (int ix = 0; ix < 9; ++ix) {
        const double x = grid.x.value(ix), y = grid.y.value(iy);
        grid.values.push_back(std::exp(-(x * x + y * y)));
      }
    }
    const auto lines = contour_zero(grid, Observable::c_wootters, 0.5);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].front().x == lines[0].back().x);
    CHECK(lines[0].front().y == lines[0].back().y);
  }
}

TEST_CASE("the near-maximum level set hugs the line V = U/2") {
  SweepConfig cfg = small_ground_config();
  cfg.x.steps = 41;
  cfg.y.steps = 41;
  cfg.use_analytic_oracle = true;
  const SweepGrid grid = run_sweep(cfg);
  const auto lines = contour_zero(grid, Observable::c_wootters, 0.999);
  REQUIRE_FALSE(lines.empty());
  const double cell = 16.0 / 40;
  for (const auto& line : lines) {
    for (const auto& p : line) CHECK(std::abs(p.y - p.x / 2) < cell);
  }
}

TEST_CASE("config json round trip") {
  SweepConfig cfg = figure_preset(FigurePreset::fig5);
  cfg.observables = {Observable::c_wootters, Observable::c_eq5, Observable::e_f};
  cfg.output_path = "out.csv";
  const SweepConfig copy = config_from_json_string(config_to_json_string(cfg));
  CHECK(copy.base.U == cfg.base.U);
  CHECK(copy.base.mu == cfg.base.mu);
  CHECK(copy.x.name == cfg.x.name);
  CHECK(copy.x.steps == cfg.x.steps);
  CHECK(copy.y.max == cfg.y.max);
  CHECK(copy.ensemble.kind == cfg.ensemble.kind);
  CHECK(copy.ensemble.temperature == cfg.ensemble.temperature);
  CHECK(copy.ensemble.scope == cfg.ensemble.scope);
  CHECK(copy.observables == cfg.observables);
  CHECK(copy.output_path == cfg.output_path);
  CHECK(copy.format == cfg.format);
}

TEST_CASE("json emission carries the grid") {
  SweepConfig cfg = small_ground_config();
  cfg.x.steps = 2;
  cfg.y.steps = 2;
  const SweepGrid grid = run_sweep(cfg);
  std::ostringstream out;
  emit_json(grid, out);
  const std::string text = out.str();
  CHECK(text.find("\"x_axis\"") != std::string::npos);
  CHECK(text.find("\"rows\"") != std::string::npos);
  CHECK(text.find("c_wootters") != std::string::npos);
}
