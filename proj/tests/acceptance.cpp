// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Expected values are computed here (closed forms, dense propagation) rather
// than taken from the library paths under test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tavis/dynamics.hpp"
#include "tavis/figures.hpp"
#include "tavis/observables.hpp"
#include "tavis/states.hpp"

using namespace tavis;

namespace {

constexpr double kTimeLimitSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double revival() { return characteristic_times(50.0, 1.0).revival; }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string fmt_beta(cplx b) { return "(" + fmt("%+.2f", b.real()) + fmt("%+.2fi", b.imag()) + ")"; }

cplx random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

cplx random_basin_a(std::mt19937_64& rng, int num_qubits) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = basin_max_abs_a(num_qubits) * std::sqrt(u(rng));
  return std::polar(r, 2 * std::numbers::pi * u(rng));
}

ScenarioConfig with_observables(ScenarioConfig c, std::vector<std::string> obs) {
  c.observables = std::move(obs);
  return c;
}

double at_time(const ScenarioConfig& c, const std::string& observable, double t) {
  return simulate_at(with_observables(c, {observable}), {t}).rows[0][0];
}

// Times on [a, b] with n points.
std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = a + (b - a) * i / (n - 1);
  return t;
}

// --- criteria -------------------------------------------------------------

Outcome timescales() {
  const double tr = revival();
  const ScenarioConfig c = with_observables(figure_config("fig1"), {"p_initial"});
  const auto collapse = simulate_at(c, linspace(3.0, 0.7 * tr, 4000)).column("p_initial");
  const auto rev = simulate_at(c, linspace(0.85 * tr, 1.15 * tr, 2000)).column("p_initial");
  double worst_collapsed = 0.0;
  for (double p : collapse) worst_collapsed = std::max(worst_collapsed, std::abs(p - 0.5));
  double best_revival = 0.0;
  for (double p : rev) best_revival = std::max(best_revival, std::abs(p - 0.5));
  return {worst_collapsed <= 0.05 && best_revival > 0.05,
          "max|P-1/2| on [3, 0.7 t_r] = " + fmt("%.4f", worst_collapsed) + ", on [0.85, 1.15] t_r = " +
              fmt("%.4f", best_revival) + " (band 0.05)"};
}

Outcome one_qubit_attractor() {
  const double tr = revival();
  const ScenarioConfig c = figure_config("fig1");
  const AttractorPeak plus = locate_attractor_time(c, 0.3 * tr, 0.7 * tr, 1e-4);
  const double entropy = at_time(c, "entropy", plus.time);

  ScenarioConfig m = c;
  m.branch = Branch::minus;
  m.grid.t_max_over_tr = 2.0;
  const AttractorPeak minus = locate_attractor_time(m, 1.3 * tr, 1.7 * tr, 1e-4);

  const double dev_plus = std::abs(plus.time - tr / 2) / (tr / 2);
  const double dev_minus = std::abs(minus.time - 1.5 * tr) / (1.5 * tr);
  const bool ok = dev_plus <= 0.02 && plus.fidelity >= 0.98 && dev_minus <= 0.02 && entropy <= 0.1;
  return {ok, "+: t*/t_r = " + fmt("%.4f", plus.time / tr) + ", F = " + fmt("%.4f", plus.fidelity) +
                  ", S = " + fmt("%.4f", entropy) + " nats; -: t*/t_r = " + fmt("%.4f", minus.time / tr) +
                  ", F = " + fmt("%.4f", minus.fidelity)};
}

Outcome initial_state_independence() {
  const double tr = revival();
  std::mt19937_64 rng(kSeed);
  double worst = 1.0;
  for (int i = 0; i < 10; ++i) {
    const cplx cg = random_complex(rng);
    const cplx ce = random_complex(rng);
    const double n = std::sqrt(std::norm(cg) + std::norm(ce));
    ScenarioConfig c = figure_config("fig1");
    c.initial = AmplitudesSpec{{cg / n, ce / n}};  // index 0 = |g>, 1 = |e>
    worst = std::min(worst, at_time(c, "p_attractor_plus", tr / 2));
  }
  return {worst >= 0.95, "min fidelity at t_r/2 over 10 random states = " + fmt("%.4f", worst)};
}

Outcome two_qubit_attractor() {
  const double tr = revival();
  const ScenarioConfig c = figure_config("fig2");
  const AttractorPeak peak = locate_attractor_time(c, 0.15 * tr, 0.35 * tr, 1e-4);
  const double entropy = at_time(c, "entropy", peak.time);
  const double dev = std::abs(peak.time - tr / 4) / (tr / 4);

  std::mt19937_64 rng(kSeed + 1);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  double worst = 1.0;
  for (int i = 0; i < 10; ++i) {
    ScenarioConfig r = c;
    r.initial = BasinSpec{random_basin_a(rng, 2)};
    r.theta = phase(rng);
    r.attractor_theta.reset();  // attractor phase follows the field
    worst = std::min(worst, locate_attractor_time(r, 0.15 * tr, 0.35 * tr, 1e-4).fidelity);
  }
  const bool ok = peak.fidelity >= 0.98 && dev <= 0.02 && entropy <= 0.15 && worst >= 0.95;
  return {ok, "t*/t_r = " + fmt("%.4f", peak.time / tr) + ", F = " + fmt("%.4f", peak.fidelity) + ", S = " +
                  fmt("%.4f", entropy) + " nats; min peak over 10 random basins = " + fmt("%.4f", worst)};
}

Outcome basin_sweep() {
  const CsvTable t = basin_tangle_sweep(401);
  double worst = 0.0;
  for (const auto& r : t.rows) worst = std::max(worst, std::abs(r[1] - std::pow(4 * r[0] * r[0] - 1, 2)));

  // Near-zero local minima of the sampled curve must sit next to a = +-1/2.
  const double step = std::sqrt(2.0) / 400;
  std::vector<double> zeros;
  for (std::size_t i = 1; i + 1 < t.rows.size(); ++i) {
    const double v = t.rows[i][1];
    if (v <= t.rows[i - 1][1] && v <= t.rows[i + 1][1] && v < 1e-3) zeros.push_back(t.rows[i][0]);
  }
  bool zeros_ok = zeros.size() == 2;
  for (double a : zeros) zeros_ok = zeros_ok && std::abs(std::abs(a) - 0.5) <= step;
  const double exact = std::max(pure_tangle(basin_state({2, 0.5, 0.0})), pure_tangle(basin_state({2, -0.5, 0.0})));
  zeros_ok = zeros_ok && exact <= 1e-12;

  std::string where;
  for (double a : zeros) where += fmt(" %+.4f", a);
  return {worst <= 1e-12 && zeros_ok, "max |tau - (4a^2-1)^2| = " + fmt("%.2e", worst) +
                                          "; near-zero minima at a =" + where + "; tau(+-1/2) = " + fmt("%.1e", exact)};
}

Outcome entanglement_revival() {
  const double tr = revival();
  const ScenarioConfig c = with_observables(figure_config("fig4"), {"mixed_tangle"});
  const TimeSeries s = simulate(c);
  const auto tau = s.column("mixed_tangle");
  double plateau = 1e300;
  double revival_peak = 0.0;
  double revival_time = 0.0;
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    const double x = s.times[i] / tr;
    if (x >= 0.2 && x <= 0.3) plateau = std::min(plateau, tau[i]);
    if (x > 0.3 && x < 1.1 && tau[i] > revival_peak) {
      revival_peak = tau[i];
      revival_time = x;
    }
  }
  // Unclamped Wootters margin shows how far below zero the concurrence sits.
  const Trajectory traj(c);
  const double margin = concurrence_margin(reduce_to_qubits(traj.at(0.25 * tr)));

  const bool ok = std::abs(tau[0] - 1.0) <= 1e-8 && plateau > 0.0 && plateau < 0.02 && revival_peak > 10 * plateau;
  return {ok, "tau(0) - 1 = " + fmt("%.1e", tau[0] - 1.0) + "; plateau min on [0.2, 0.3] t_r = " +
                  fmt("%.3e", plateau) + " (unclamped concurrence at t_r/4 = " + fmt("%.4f", margin) +
                  "); revival peak = " + fmt("%.4f", revival_peak) + " at t/t_r = " + fmt("%.3f", revival_time)};
}

Outcome cat_encoding() {
  const double tr = revival();
  ScenarioConfig c = figure_config("fig2");
  const int dim = c.resolved_fock_dim();
  const cplx alpha = coherent_amplitude(c.nbar, c.theta);

  const DensityMatrix rho = reduce_to_field(Trajectory(c).at(tr / 4));
  const double cat = fidelity(field_cat_reference({2, 1 / std::sqrt(2.0), c.theta}, c.nbar, dim), rho);

  c.initial = BasinSpec{0.5};
  const DensityMatrix rho_half = reduce_to_field(Trajectory(c).at(tr / 4));
  const double minus_alpha = fidelity(coherent_field(-alpha, dim), rho_half);
  // Where the single lobe actually sits, for the record.
  const cplx i{0.0, 1.0};
  const double minus_i_alpha = fidelity(coherent_field(-i * alpha, dim), rho_half);
  const double plus_i_alpha = fidelity(coherent_field(i * alpha, dim), rho_half);

  return {cat >= 0.98 && minus_alpha >= 0.99,
          "F(cat reference) = " + fmt("%.4f", cat) + "; a = 1/2: F(|-alpha>) = " + fmt("%.4f", minus_alpha) +
              ", F(|-i alpha>) = " + fmt("%.4f", minus_i_alpha) + ", F(|+i alpha>) = " + fmt("%.4f", plus_i_alpha)};
}

Outcome q_topology() {
  const double tr = revival();
  const ScenarioConfig c = figure_config("qfunc");
  const cplx alpha = coherent_amplitude(c.nbar, c.theta);
  const Trajectory traj(c);
  const QGridSpec spec = default_q_grid(c.nbar);
  const auto peaks0 = local_maxima(q_function(reduce_to_field(traj.at(0.0)), spec), 0.1);
  const auto peaks1 = local_maxima(q_function(reduce_to_field(traj.at(tr / 4)), spec), 0.1);

  bool ok = peaks0.size() == 1 && peaks1.size() == 2;
  if (ok) {
    const bool direct = std::abs(peaks1[0].beta - alpha) <= 1.5 && std::abs(peaks1[1].beta + alpha) <= 1.5;
    const bool swapped = std::abs(peaks1[0].beta + alpha) <= 1.5 && std::abs(peaks1[1].beta - alpha) <= 1.5;
    ok = direct || swapped;
  }
  std::string detail = "t = 0: " + std::to_string(peaks0.size()) + " max";
  for (const auto& p : peaks0) detail += " " + fmt_beta(p.beta);
  detail += "; t_r/4: " + std::to_string(peaks1.size()) + " max";
  for (const auto& p : peaks1) detail += " " + fmt_beta(p.beta);
  detail += "; alpha = " + fmt_beta(alpha);
  return {ok, detail};
}

Outcome oracle_equivalence() {
  const double tr = revival();
  struct Case {
    int n;
    int d;
  };
  double worst = 0.0;
  std::string detail;
  std::uint64_t seed = kSeed + 10;
  for (const Case k : {Case{1, 32}, Case{2, 24}, Case{3, 16}}) {
    ModelParams p;
    p.num_qubits = k.n;
    p.fock_dim = k.d;
    const double dev = oracle_max_deviation(p, 20, 20, tr, seed++);
    worst = std::max(worst, dev);
    detail += "(" + std::to_string(k.n) + "," + std::to_string(k.d) + "): " + fmt("%.2e", dev) + "  ";
  }
  return {worst <= 1e-8, detail + "(limit 1e-8)"};
}

Outcome metric_oracles() {
  std::mt19937_64 rng(kSeed + 20);
  double worst_pure = 0.0;
  for (int i = 0; i < 100; ++i) {
    CVector v(4);
    for (int k = 0; k < 4; ++k) v[k] = random_complex(rng);
    v.normalize();
    const QubitRegisterState q(2, v);
    // Basis order gg, eg, ge, ee (bit i = qubit i excited).
    const double expected = 4 * std::norm(v[3] * v[0] - v[1] * v[2]);
    const double mixed = mixed_tangle(DensityMatrix(Subsystem::qubits, v * v.adjoint()));
    worst_pure = std::max({worst_pure, std::abs(mixed - expected), std::abs(pure_tangle(q) - expected)});
  }

  CVector singlet = CVector::Zero(4);
  singlet[1] = 1 / std::sqrt(2.0);
  singlet[2] = -1 / std::sqrt(2.0);
  const CMatrix bell = singlet * singlet.adjoint();
  double worst_werner = 0.0;
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.6, 0.9, 1.0}) {
    const CMatrix rho = p * bell + (1 - p) * CMatrix::Identity(4, 4) / 4.0;
    const double expected = std::pow(std::max(0.0, (3 * p - 1) / 2), 2);
    worst_werner = std::max(worst_werner, std::abs(mixed_tangle(DensityMatrix(Subsystem::qubits, rho)) - expected));
  }
  return {worst_pure <= 1e-8 && worst_werner <= 1e-10,
          "pure vs mixed max dev = " + fmt("%.2e", worst_pure) + " (1e-8); Werner max dev = " +
              fmt("%.2e", worst_werner) + " (1e-10)"};
}

// Fidelity to (e^{-i phi}|e..e> + e^{i phi}|g..g>)/sqrt 2 maximized over phi.
double best_ghz_fidelity(const DensityMatrix& rho) {
  const std::size_t top = rho.dim() - 1;
  return 0.5 * (rho(top, top).real() + rho(0, 0).real()) + std::abs(rho(top, 0));
}

Outcome three_qubit_revival() {
  const double tr = revival();
  std::mt19937_64 rng(kSeed + 30);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  ScenarioConfig c;
  c.name = "three_qubit";
  c.num_qubits = 3;
  c.nbar = 50.0;
  c.initial = BasinSpec{random_basin_a(rng, 3)};
  c.theta = phase(rng);
  c.observables = {"p_attractor_plus"};
  const AttractorPeak peak = locate_attractor_time(c, 0.0, tr, 1e-4);

  const Trajectory traj(c);
  double ghz = 0.0;
  double ghz_time = 0.0;
  // Scan after the attractor has dispersed again.
  for (double t : linspace(2 * peak.time, 1.1 * tr, 1000)) {
    const double f = best_ghz_fidelity(reduce_to_qubits(traj.at(t)));
    if (f > ghz) {
      ghz = f;
      ghz_time = t;
    }
  }
  const cplx a = std::get<BasinSpec>(c.initial).a;
  return {peak.fidelity >= 0.9, "a = " + fmt_beta(a) + ", theta = " + fmt("%.3f", c.theta) +
                                    ": attractor peak F = " + fmt("%.4f", peak.fidelity) + " at t/t_r = " +
                                    fmt("%.4f", peak.time / tr) + "; GHZ fidelity (reported) = " + fmt("%.4f", ghz) +
                                    " at t/t_r = " + fmt("%.4f", ghz_time / tr)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "collapse and revival timescales", timescales},
      {2, "one-qubit attractor", one_qubit_attractor},
      {3, "initial-state independence", initial_state_independence},
      {4, "two-qubit attractor", two_qubit_attractor},
      {5, "basin tangle sweep", basin_sweep},
      {6, "entanglement collapse and revival", entanglement_revival},
      {7, "cat-state encoding", cat_encoding},
      {8, "Q-function topology", q_topology},
      {9, "oracle equivalence", oracle_equivalence},
      {10, "metric oracles", metric_oracles},
      {11, "three-qubit revival", three_qubit_revival},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kTimeLimitSeconds) o.passed = false;
    if (!o.passed) ++failures;
    std::printf("%s %2d %-34s %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
