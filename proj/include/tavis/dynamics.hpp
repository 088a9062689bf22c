#pragma once

// Scenario orchestration: timescales, time grids, trajectory simulation and
// attractor-time search. Times are in units of 1/coupling.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tavis/model.hpp"
#include "tavis/states.hpp"

namespace tavis {

struct Timescales {
  double collapse = 0.0;  // sqrt(2) / coupling
  double revival = 0.0;   // 2 pi sqrt(nbar) / coupling
};

Timescales characteristic_times(double nbar, double coupling);

// Initial qubit register specifiers.
struct ConfigurationSpec {
  std::string label;  // e.g. "g", "gg"
};
struct BasinSpec {
  cplx a = 0.0;
};
struct AttractorSpec {
  Branch branch = Branch::plus;
};
struct DickeSpec {
  int k = 0;
};
struct AmplitudesSpec {
  std::vector<cplx> amplitudes;
};
using QubitSpecifier = std::variant<ConfigurationSpec, BasinSpec, AttractorSpec, DickeSpec, AmplitudesSpec>;

struct TimeGrid {
  double t_max_over_tr = 1.1;
  int samples = 2000;
};

// Column names understood by `simulate`, in output order. Probabilities of
// single configurations are requested as "p_<label>", e.g. "p_gg".
inline const std::vector<std::string> kObservableOrder = {
    "p_initial", "p_attractor_plus", "p_attractor_minus", "entropy", "mixed_tangle", "field_purity", "norm"};

struct ScenarioConfig {
  std::string name = "scenario";
  int num_qubits = 1;
  double nbar = 50.0;
  double theta = 0.0;
  double coupling = 1.0;
  double frequency = 0.0;
  Frame frame = Frame::interaction;
  std::optional<int> fock_dim;
  std::size_t max_dimension = std::size_t{1} << 20;
  QubitSpecifier initial = ConfigurationSpec{"g"};
  // Phase of the attractor/basin states; defaults to the field phase theta.
  std::optional<double> attractor_theta;
  Branch branch = Branch::plus;
  TimeGrid grid;
  std::vector<std::string> observables = {"p_initial", "p_attractor_plus", "entropy"};

  int resolved_fock_dim() const;
  double resolved_attractor_theta() const { return attractor_theta.value_or(theta); }
  ModelParams model_params() const;
  Timescales timescales() const { return characteristic_times(nbar, coupling); }
};

// Throws ConfigError naming the offending field.
void validate(const ScenarioConfig& config);

QubitRegisterState initial_qubits(const ScenarioConfig& config);

// Composes the initial joint state and checks truncation against the blocks.
PureState initial_state(const ScenarioConfig& config, const ExcitationBlockSet& blocks);

struct TimeSeries {
  std::vector<double> times;
  std::vector<std::string> columns;       // observable names, without t / t_over_tr
  std::vector<std::vector<double>> rows;  // rows[i][j] = value of columns[j] at times[i]
  ScenarioConfig config;
  double revival_time = 0.0;

  std::vector<double> column(const std::string& name) const;
  std::size_t column_index(const std::string& name) const;
};

std::vector<double> sample_times(const ScenarioConfig& config);

TimeSeries simulate(const ScenarioConfig& config);

// Same observables evaluated at caller-chosen times.
TimeSeries simulate_at(const ScenarioConfig& config, const std::vector<double>& times);

struct AttractorPeak {
  double time = 0.0;
  double fidelity = 0.0;
};

// Argmax of attractor fidelity (config.branch) over a sampled window followed
// by a golden-section refinement to `resolution`. The window is in absolute
// time and must lie inside [0, t_max].
AttractorPeak locate_attractor_time(const ScenarioConfig& config, double window_begin, double window_end,
                                    double resolution);

// Prepared scenario: blocks and initial state built once, evolved on demand.
class Trajectory {
 public:
  explicit Trajectory(const ScenarioConfig& config);

  PureState at(double t) const { return evolve(initial_, t, blocks_); }
  const ExcitationBlockSet& blocks() const { return blocks_; }
  const PureState& initial() const { return initial_; }
  const QubitRegisterState& initial_register() const { return register_; }

 private:
  ExcitationBlockSet blocks_;
  QubitRegisterState register_;
  PureState initial_;
};

}  // namespace tavis
