#pragma once

// Canned scenarios reproducing the collapse/revival figures, the basin
// tangle sweep, Q-function snapshots, and the oracle verification harness.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tavis/dynamics.hpp"
#include "tavis/io.hpp"
#include "tavis/model.hpp"
#include "tavis/observables.hpp"

namespace tavis {

struct FigureOverrides {
  std::optional<double> nbar;
  std::optional<double> theta;
  std::optional<int> samples;
  std::vector<double> times_over_tr;  // qfunc snapshot times; empty = defaults
};

inline const std::vector<std::string> kFigureNames = {"fig1", "fig2", "fig3", "fig4", "qfunc"};
inline const std::vector<double> kDefaultQTimes = {0.0, 0.05, 0.25, 0.45, 0.75, 1.0};

// Time-series scenarios: fig1 (one qubit from |g>), fig2 and fig4 (two
// qubits from (|ee> + |gg>)/sqrt 2). qfunc uses the fig2 scenario.
ScenarioConfig figure_config(const std::string& name, const FigureOverrides& overrides = {});

// Real a over [-1/sqrt 2, 1/sqrt 2] against the pure tangle of the basin state.
CsvTable basin_tangle_sweep(int points = 401);

// Q-function grid as a CSV with columns re, im, Q.
CsvTable q_grid_table(const QGrid& grid);

// Writes the figure's data files into out_dir; returns the written paths.
std::vector<std::filesystem::path> run_figure(const std::string& name, const FigureOverrides& overrides,
                                              const std::filesystem::path& out_dir, RunManifest* manifest = nullptr);

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t max_dim = kDenseOracleCap;
  HamiltonianFault fault = HamiltonianFault::none;
};

// Largest amplitude deviation between block and dense evolution over random
// joint states and random times in [0, t_max].
double oracle_max_deviation(const ModelParams& params, int num_states, int num_times, double t_max,
                            std::uint64_t seed, HamiltonianFault fault = HamiltonianFault::none);

std::vector<VerifyCheck> verify(const VerifyOptions& options = {});

}  // namespace tavis
