#include "tavis/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <type_traits>

#include "tavis/error.hpp"
#include "tavis/hilbert.hpp"
#include "tavis/observables.hpp"
#include "tavis/parallel.hpp"

namespace tavis {

namespace {

constexpr int kMinWindowSamples = 64;

bool is_known_observable(const std::string& name, int num_qubits) {
  if (std::find(kObservableOrder.begin(), kObservableOrder.end(), name) != kObservableOrder.end()) return true;
  if (name.size() == 2 + static_cast<std::size_t>(num_qubits) && name.rfind("p_", 0) == 0) {
    return name.find_first_not_of("eg", 2) == std::string::npos;
  }
  return false;
}

QubitRegisterState build_register(const ScenarioConfig& c) {
  const double phase = c.resolved_attractor_theta();
  return std::visit(
      [&](const auto& spec) -> QubitRegisterState {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ConfigurationSpec>) {
          if (spec.label.size() != static_cast<std::size_t>(c.num_qubits)) {
            throw DomainError("configuration '" + spec.label + "' does not have " + std::to_string(c.num_qubits) +
                              " letters");
          }
          return configuration_state(c.num_qubits, parse_configuration(spec.label));
        } else if constexpr (std::is_same_v<T, BasinSpec>) {
          return basin_state({c.num_qubits, spec.a, phase});
        } else if constexpr (std::is_same_v<T, AttractorSpec>) {
          return attractor_state(c.num_qubits, phase, spec.branch);
        } else if constexpr (std::is_same_v<T, DickeSpec>) {
          return dicke_state(c.num_qubits, spec.k);
        } else {
          CVector v(static_cast<Eigen::Index>(spec.amplitudes.size()));
          for (std::size_t i = 0; i < spec.amplitudes.size(); ++i) v[static_cast<Eigen::Index>(i)] = spec.amplitudes[i];
          return QubitRegisterState(c.num_qubits, std::move(v));
        }
      },
      c.initial);
}

struct ObservableContext {
  const QubitRegisterState& initial;
  QubitRegisterState attractor_plus;
  QubitRegisterState attractor_minus;
};

double evaluate(const std::string& name, const PureState& state, const DensityMatrix& rho_q, const ObservableContext& ctx) {
  if (name == "p_initial") return fidelity(ctx.initial, rho_q);
  if (name == "p_attractor_plus") return fidelity(ctx.attractor_plus, rho_q);
  if (name == "p_attractor_minus") return fidelity(ctx.attractor_minus, rho_q);
  if (name == "entropy") return von_neumann_entropy(rho_q);
  if (name == "mixed_tangle") return mixed_tangle(rho_q);
  // Schmidt: the field and register reductions of a pure state share purity.
  if (name == "field_purity") return rho_q.purity();
  if (name == "norm") return state.norm();
  return configuration_probability(state, parse_configuration(std::string_view(name).substr(2)));
}

}  // namespace

Timescales characteristic_times(double nbar, double coupling) {
  if (!(nbar > 0.0) || !std::isfinite(nbar)) throw DomainError("nbar must be positive");
  if (!(coupling > 0.0) || !std::isfinite(coupling)) throw DomainError("coupling must be positive");
  return {std::numbers::sqrt2 / coupling, 2.0 * std::numbers::pi * std::sqrt(nbar) / coupling};
}

int ScenarioConfig::resolved_fock_dim() const { return fock_dim.value_or(default_fock_dim(nbar)); }

ModelParams ScenarioConfig::model_params() const {
  return {num_qubits, coupling, frequency, frame, resolved_fock_dim(), max_dimension};
}

void validate(const ScenarioConfig& c) {
  if (c.num_qubits < 1 || c.num_qubits > 20) throw ConfigError("num_qubits", "must be in [1, 20]");
  if (!(c.nbar > 0.0) || !std::isfinite(c.nbar)) throw ConfigError("nbar", "must be positive and finite");
  if (!std::isfinite(c.theta)) throw ConfigError("theta", "must be finite");
  if (!(c.coupling > 0.0) || !std::isfinite(c.coupling)) throw ConfigError("coupling", "must be positive");
  if (!(c.frequency >= 0.0) || !std::isfinite(c.frequency)) throw ConfigError("frequency", "must be nonnegative");
  if (c.fock_dim && *c.fock_dim < 2) throw ConfigError("fock_dim", "must be at least 2");
  if (c.attractor_theta && !std::isfinite(*c.attractor_theta)) throw ConfigError("attractor_theta", "must be finite");
  if (c.grid.samples < 2) throw ConfigError("time.samples", "must be at least 2");
  if (!(c.grid.t_max_over_tr > 0.0) || !std::isfinite(c.grid.t_max_over_tr)) {
    throw ConfigError("time.t_max_over_tr", "must be positive");
  }
  if (c.observables.empty()) throw ConfigError("observables", "at least one observable is required");
  for (const auto& name : c.observables) {
    if (!is_known_observable(name, c.num_qubits)) throw ConfigError("observables", "unknown observable '" + name + "'");
    if (name == "mixed_tangle" && c.num_qubits != 2) {
      throw ConfigError("observables", "mixed_tangle is only defined for two qubits");
    }
  }
  try {
    (void)build_register(c);
  } catch (const Error& e) {
    throw ConfigError("initial", e.what());
  }
}

QubitRegisterState initial_qubits(const ScenarioConfig& config) { return build_register(config); }

PureState initial_state(const ScenarioConfig& config, const ExcitationBlockSet& blocks) {
  const int fock_dim = blocks.params().fock_dim;
  const CVector field = coherent_field({config.nbar, config.theta, fock_dim});
  PureState state = compose_state(build_register(config), field, fock_dim);
  const double boundary = blocks.boundary_occupancy(state);
  if (boundary >= kTruncationTailTol) {
    throw TruncationError("initial state has weight " + std::to_string(boundary) +
                          " on excitation blocks cut by the Fock truncation");
  }
  return state;
}

Trajectory::Trajectory(const ScenarioConfig& config)
    : blocks_(build_blocks(config.model_params())),
      register_(build_register(config)),
      initial_(initial_state(config, blocks_)) {}

std::vector<double> TimeSeries::column(const std::string& name) const {
  const std::size_t j = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[j]);
  return out;
}

std::size_t TimeSeries::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column '" + name + "' in time series");
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> sample_times(const ScenarioConfig& config) {
  const double t_end = config.grid.t_max_over_tr * config.timescales().revival;
  const int n = config.grid.samples;
  std::vector<double> times(static_cast<std::size_t>(n));
  // t_end * (i / (n-1)) keeps the grid nested when n-1 doubles.
  for (int i = 0; i < n; ++i) times[static_cast<std::size_t>(i)] = t_end * (static_cast<double>(i) / (n - 1));
  return times;
}

TimeSeries simulate_at(const ScenarioConfig& config, const std::vector<double>& times) {
  validate(config);
  const Trajectory trajectory(config);
  const double phase = config.resolved_attractor_theta();
  const ObservableContext ctx{trajectory.initial_register(), attractor_state(config.num_qubits, phase, Branch::plus),
                              attractor_state(config.num_qubits, phase, Branch::minus)};

  TimeSeries series;
  series.times = times;
  series.columns = config.observables;
  series.config = config;
  series.revival_time = config.timescales().revival;
  series.rows.assign(times.size(), std::vector<double>(config.observables.size()));
  parallel_for(times.size(), [&](std::size_t i) {
    const PureState state = trajectory.at(times[i]);
    const DensityMatrix rho_q = reduce_to_qubits(state);
    for (std::size_t j = 0; j < config.observables.size(); ++j) {
      series.rows[i][j] = evaluate(config.observables[j], state, rho_q, ctx);
    }
  });
  return series;
}

TimeSeries simulate(const ScenarioConfig& config) {
  validate(config);
  return simulate_at(config, sample_times(config));
}

AttractorPeak locate_attractor_time(const ScenarioConfig& config, double window_begin, double window_end,
                                    double resolution) {
  validate(config);
  const double t_max = config.grid.t_max_over_tr * config.timescales().revival;
  if (!(window_end > window_begin)) throw DomainError("empty search window");
  if (window_begin < 0.0 || window_end > t_max * (1.0 + 1e-12)) {
    throw DomainError("search window lies outside the simulated range [0, t_max]");
  }
  if (!(resolution > 0.0)) throw DomainError("resolution must be positive");

  const Trajectory trajectory(config);
  const QubitRegisterState reference =
      attractor_state(config.num_qubits, config.resolved_attractor_theta(), config.branch);
  auto score = [&](double t) { return fidelity(reference, reduce_to_qubits(trajectory.at(t))); };

  const double span = window_end - window_begin;
  const int n = std::max(kMinWindowSamples, static_cast<int>(std::ceil(config.grid.samples * span / t_max))) + 1;
  std::vector<double> values(static_cast<std::size_t>(n));
  auto t_at = [&](int i) { return window_begin + span * (static_cast<double>(i) / (n - 1)); };
  parallel_for(values.size(), [&](std::size_t i) { values[i] = score(t_at(static_cast<int>(i))); });
  const int best = static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());

  AttractorPeak peak{t_at(best), values[static_cast<std::size_t>(best)]};
  double lo = t_at(std::max(best - 1, 0));
  double hi = t_at(std::min(best + 1, n - 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = score(x1);
  double f2 = score(x2);
  while (hi - lo > resolution) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = score(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = score(x2);
    }
  }
  const double t_mid = 0.5 * (lo + hi);
  const double f_mid = score(t_mid);
  if (f_mid > peak.fidelity) peak = {t_mid, f_mid};
  return peak;
}

}  // namespace tavis
