#include "tavis/figures.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "tavis/error.hpp"
#include "tavis/observables.hpp"
#include "tavis/states.hpp"

namespace tavis {

namespace {

CVector random_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVector v(n);
  for (auto& z : v) z = {normal(rng), normal(rng)};
  return v.normalized();
}

std::string format_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string q_file_name(double t_over_tr) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "qfunc_t%.4f.csv", t_over_tr);
  return buf;
}

VerifyCheck make_check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

}  // namespace

ScenarioConfig figure_config(const std::string& name, const FigureOverrides& overrides) {
  ScenarioConfig c;
  c.name = name;
  c.nbar = overrides.nbar.value_or(50.0);
  c.theta = overrides.theta.value_or(0.0);
  if (overrides.samples) c.grid.samples = *overrides.samples;
  if (name == "fig1") {
    c.num_qubits = 1;
    c.initial = ConfigurationSpec{"g"};
    c.observables = {"p_initial", "p_attractor_plus", "entropy"};
  } else if (name == "fig2" || name == "qfunc") {
    c.num_qubits = 2;
    c.initial = BasinSpec{1.0 / std::numbers::sqrt2};
    c.observables = {"entropy", "p_gg", "p_attractor_plus"};
  } else if (name == "fig4") {
    c.num_qubits = 2;
    c.initial = BasinSpec{1.0 / std::numbers::sqrt2};
    c.observables = {"entropy", "p_gg", "mixed_tangle"};
  } else {
    throw DomainError("no time-series scenario named '" + name + "'");
  }
  validate(c);
  return c;
}

CsvTable basin_tangle_sweep(int points) {
  if (points < 2) throw DomainError("sweep needs at least two points");
  CsvTable table{{"a", "pure_tangle"}, {}};
  const double a_max = basin_max_abs_a(2);
  for (int i = 0; i < points; ++i) {
    const double a = -a_max + 2.0 * a_max * (static_cast<double>(i) / (points - 1));
    table.rows.push_back({a, pure_tangle(basin_state({2, a, 0.0}))});
  }
  return table;
}

CsvTable q_grid_table(const QGrid& grid) {
  CsvTable table{{"re", "im", "Q"}, {}};
  table.rows.reserve(grid.values.size());
  for (int j = 0; j < grid.im.count; ++j) {
    for (int i = 0; i < grid.re.count; ++i) table.rows.push_back({grid.re.at(i), grid.im.at(j), grid.at(i, j)});
  }
  return table;
}

std::vector<std::filesystem::path> run_figure(const std::string& name, const FigureOverrides& overrides,
                                              const std::filesystem::path& out_dir, RunManifest* manifest) {
  if (std::find(kFigureNames.begin(), kFigureNames.end(), name) == kFigureNames.end()) {
    throw DomainError("unknown figure '" + name + "'");
  }
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::filesystem::path& path, const CsvTable& table) {
    write_csv(path, table);
    written.push_back(path);
    if (manifest) add_file(*manifest, path);
  };

  if (name == "fig3") {
    if (manifest) manifest->config = {{"figure", name}, {"points", 401}};
    emit(out_dir / "fig3.csv", basin_tangle_sweep(401));
    return written;
  }

  const ScenarioConfig config = figure_config(name, overrides);
  if (manifest) manifest->config = to_json(config);
  if (name != "qfunc") {
    emit(out_dir / (name + ".csv"), to_table(simulate(config)));
    return written;
  }

  const auto& times = overrides.times_over_tr.empty() ? kDefaultQTimes : overrides.times_over_tr;
  const Trajectory trajectory(config);
  const double t_r = config.timescales().revival;
  const QGridSpec spec = default_q_grid(config.nbar);
  for (double x : times) {
    const DensityMatrix rho_f = reduce_to_field(trajectory.at(x * t_r));
    emit(out_dir / q_file_name(x), q_grid_table(q_function(rho_f, spec)));
  }
  return written;
}

double oracle_max_deviation(const ModelParams& params, int num_states, int num_times, double t_max,
                            std::uint64_t seed, HamiltonianFault fault) {
  const ExcitationBlockSet blocks = build_blocks(params, fault);
  const DenseEvolution dense(params, std::max(params.dimension(), kDenseOracleCap));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, t_max);
  double worst = 0.0;
  for (int s = 0; s < num_states; ++s) {
    const PureState psi(params.num_qubits, params.fock_dim,
                        random_vector(static_cast<Eigen::Index>(params.dimension()), rng));
    for (int k = 0; k < num_times; ++k) {
      const double t = uniform(rng);
      const CVector diff = evolve(psi, t, blocks).amplitudes() - dense.evolve(psi, t).amplitudes();
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

std::vector<VerifyCheck> verify(const VerifyOptions& options) {
  std::vector<VerifyCheck> checks;
  const double t_r = characteristic_times(50.0, 1.0).revival;

  struct OracleCase {
    int num_qubits;
    int fock_dim;
    Frame frame;
  };
  const std::vector<OracleCase> cases = {
      {1, 32, Frame::interaction}, {2, 24, Frame::interaction}, {3, 16, Frame::interaction}, {2, 24, Frame::lab}};
  std::uint64_t seed = 1;
  for (const auto& oc : cases) {
    ModelParams p{oc.num_qubits, 1.0, oc.frame == Frame::lab ? 3.0 : 0.0, oc.frame, oc.fock_dim};
    const std::string name = "oracle_equivalence(N=" + std::to_string(oc.num_qubits) +
                             ",fock=" + std::to_string(oc.fock_dim) +
                             (oc.frame == Frame::lab ? ",lab" : "") + ")";
    if (p.dimension() > options.max_dim) {
      checks.push_back(make_check(name, true, "skipped: dimension above --max-dim"));
      continue;
    }
    const double dev = oracle_max_deviation(p, 20, 20, t_r, seed++, options.fault);
    checks.push_back(make_check(name, dev <= 1e-8, "max deviation " + format_short(dev)));
  }

  {
    // Coherent-field scenario: basin state (x) |alpha>, nbar = 4.
    ModelParams p{2, 1.0, 0.0, Frame::interaction, 24};
    if (p.dimension() <= options.max_dim) {
      const ExcitationBlockSet blocks = build_blocks(p, options.fault);
      const DenseEvolution dense(p);
      const PureState psi = compose_state(basin_state({2, 0.3, 0.0}), coherent_field({4.0, 0.0, 24}), 24);
      double dev = 0.0;
      for (int k = 0; k <= 20; ++k) {
        const double t = characteristic_times(4.0, 1.0).revival * k / 10.0;
        dev = std::max(dev, (evolve(psi, t, blocks).amplitudes() - dense.evolve(psi, t).amplitudes()).cwiseAbs().maxCoeff());
      }
      checks.push_back(make_check("oracle_coherent(N=2,fock=24,nbar=4)", dev <= 1e-8, "max deviation " + format_short(dev)));
    }
  }

  {
    ModelParams p{3, 1.0, 0.0, Frame::interaction, 16};
    const ExcitationBlockSet blocks = build_blocks(p, options.fault);
    double recon = 0.0;
    double unitarity = 0.0;
    std::vector<double> block_energies;
    for (const auto& b : blocks.blocks()) {
      const CMatrix h = restricted_hamiltonian(p, b.indices);
      recon = std::max(recon, (b.eigenvectors * b.energies.asDiagonal() * b.eigenvectors.adjoint() - h).cwiseAbs().maxCoeff());
      const auto s = static_cast<Eigen::Index>(b.indices.size());
      unitarity = std::max(unitarity, (b.eigenvectors.adjoint() * b.eigenvectors - CMatrix::Identity(s, s)).cwiseAbs().maxCoeff());
      block_energies.insert(block_energies.end(), b.energies.begin(), b.energies.end());
    }
    checks.push_back(make_check("block_reconstruction", recon <= 1e-9 && unitarity <= 1e-9,
                                "max |V E V^+ - H| " + format_short(recon) + ", max |V^+V - I| " + format_short(unitarity)));
    const DenseEvolution dense(p);
    std::sort(block_energies.begin(), block_energies.end());
    double spec_dev = 0.0;
    for (std::size_t i = 0; i < block_energies.size(); ++i) {
      spec_dev = std::max(spec_dev, std::abs(block_energies[i] - dense.energies()[static_cast<Eigen::Index>(i)]));
    }
    checks.push_back(make_check("spectrum_union", spec_dev <= 1e-9, "max eigenvalue deviation " + format_short(spec_dev)));
  }

  {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> nq(1, 6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const int n = nq(rng);
      const cplx a = std::polar(basin_max_abs_a(n) * unit(rng), 2.0 * std::numbers::pi * unit(rng));
      const auto state = basin_state({n, a, 2.0 * std::numbers::pi * unit(rng)});
      // QubitRegisterState renormalizes; test the raw identity sum |A|^2 C(N,k).
      double sum = 0.0;
      const double odd = basin_max_abs_a(n) * basin_max_abs_a(n) - std::norm(a);
      for (int k = 0; k <= n; ++k) {
        const double c = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
        sum += (k % 2 == 0 ? std::norm(a) : odd) * c;
      }
      worst = std::max({worst, std::abs(sum - 1.0), std::abs(state.amplitudes().norm() - 1.0)});
    }
    checks.push_back(make_check("basin_normalization", worst <= 1e-12, "max |norm - 1| " + format_short(worst)));
  }

  {
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const QubitRegisterState psi(2, random_vector(4, rng));
      const DensityMatrix rho(Subsystem::qubits, psi.amplitudes() * psi.amplitudes().adjoint());
      worst = std::max(worst, std::abs(mixed_tangle(rho) - pure_tangle(psi)));
    }
    checks.push_back(make_check("tangle_pure_vs_mixed", worst <= 1e-8, "max deviation " + format_short(worst)));
  }

  {
    CVector phi = CVector::Zero(4);
    phi[0] = phi[3] = 1.0 / std::numbers::sqrt2;
    double worst = 0.0;
    for (double p : {0.0, 0.2, 1.0 / 3.0, 0.6, 0.9, 1.0}) {
      const DensityMatrix rho(Subsystem::qubits, p * phi * phi.adjoint() + (1.0 - p) * CMatrix::Identity(4, 4) / 4.0);
      const double c = std::max(0.0, (3.0 * p - 1.0) / 2.0);
      worst = std::max(worst, std::abs(mixed_tangle(rho) - c * c));
    }
    checks.push_back(make_check("werner_tangle", worst <= 1e-10, "max deviation " + format_short(worst)));
  }
  return checks;
}

}  // namespace tavis
