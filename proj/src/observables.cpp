#include "tavis/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tavis/error.hpp"
#include "tavis/parallel.hpp"
#include "tavis/states.hpp"

namespace tavis {

namespace {

constexpr double kTopLevelTol = 1e-8;
// Eigenvalues of a unit-trace matrix at or below this are treated as exact zeros.
constexpr double kNullEigenvalue = 1e-14;

void check_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("two-qubit density matrix must be 4x4, got " + std::to_string(rho.dim()));
}

// sy x sy in the configuration basis: |gg> <-> -|ee>, |eg> <-> |ge>.
CMatrix spin_flip() {
  CMatrix y = CMatrix::Zero(4, 4);
  y(0, 3) = -1.0;
  y(3, 0) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  return y;
}

}  // namespace

double configuration_probability(const PureState& state, Configuration config) {
  if (config >= state.qubit_dim()) throw DomainError("configuration out of range for register");
  return std::clamp(state.as_matrix().row(config).squaredNorm(), 0.0, 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double p : rho.eigenvalues()) {
    if (p > 0.0) s -= p * std::log(p);
  }
  return std::max(s, 0.0);
}

double pure_tangle(const QubitRegisterState& qubits) {
  if (qubits.num_qubits() != 2) throw DimensionError("pure tangle is defined for two qubits");
  const cplx ee = qubits[parse_configuration("ee")];
  const cplx eg = qubits[parse_configuration("eg")];
  const cplx ge = qubits[parse_configuration("ge")];
  const cplx gg = qubits[parse_configuration("gg")];
  return std::clamp(4.0 * std::norm(ee * gg - eg * ge), 0.0, 1.0);
}

double concurrence_margin(const DensityMatrix& rho) {
  check_two_qubit(rho);
  // With rho = W W^+ (W = V sqrt(p), one column per retained eigenvector),
  // the square roots of the eigenvalues of rho (sy sy) rho* (sy sy) are the
  // singular values of the symmetric matrix W^T (sy sy) W.
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.entries());
  const RVector& p = solver.eigenvalues();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > kNullEigenvalue) kept.push_back(i);
  }
  CMatrix w(4, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) {
    w.col(static_cast<Eigen::Index>(j)) = solver.eigenvectors().col(kept[j]) * std::sqrt(p[kept[j]]);
  }
  const CMatrix t = w.transpose() * spin_flip() * w;
  RVector mu = RVector::Zero(4);
  mu.head(t.rows()) = Eigen::JacobiSVD<CMatrix>(t).singularValues();  // decreasing
  return mu[0] - mu[1] - mu[2] - mu[3];
}

double concurrence(const DensityMatrix& rho) { return std::clamp(concurrence_margin(rho), 0.0, 1.0); }

double mixed_tangle(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  return c * c;
}

QGridSpec default_q_grid(double nbar) {
  const double r = 1.5 * std::sqrt(nbar);
  return {{-r, r, 201}, {-r, r, 201}, false};
}

QGrid q_function(const DensityMatrix& rho_field, const QGridSpec& spec) {
  const auto fock_dim = static_cast<int>(rho_field.dim());
  for (const GridAxis* axis : {&spec.re, &spec.im}) {
    if (axis->count < 1 || !std::isfinite(axis->min) || !std::isfinite(axis->max) || axis->max < axis->min) {
      throw DomainError("invalid Q-function grid axis");
    }
  }
  if (std::abs(rho_field(rho_field.dim() - 1, rho_field.dim() - 1)) >= kTopLevelTol) {
    throw TruncationError("field state occupies the top Fock level; increase fock_dim");
  }
  const double max_re = std::max(std::abs(spec.re.min), std::abs(spec.re.max));
  const double max_im = std::max(std::abs(spec.im.min), std::abs(spec.im.max));
  if (max_re * max_re + max_im * max_im > 4.0 * fock_dim) {
    throw TruncationError("Q-function grid extends beyond the radius supported by fock_dim " + std::to_string(fock_dim));
  }

  QGrid grid{spec.re, spec.im, std::vector<double>(static_cast<std::size_t>(spec.re.count) * spec.im.count)};
  const double scale = spec.divide_by_pi ? 1.0 / std::numbers::pi : 1.0;
  parallel_for(static_cast<std::size_t>(spec.im.count), [&](std::size_t row) {
    const double im = spec.im.at(static_cast<int>(row));
    CMatrix kets(fock_dim, spec.re.count);
    for (int i = 0; i < spec.re.count; ++i) kets.col(i) = coherent_amplitudes({spec.re.at(i), im}, fock_dim);
    const CMatrix rho_kets = rho_field.entries() * kets;
    for (int i = 0; i < spec.re.count; ++i) {
      const double q = kets.col(i).dot(rho_kets.col(i)).real();
      grid.values[row * spec.re.count + i] = std::max(q, 0.0) * scale;
    }
  });
  return grid;
}

std::vector<GridPeak> local_maxima(const QGrid& grid, double relative_threshold) {
  const double global = *std::max_element(grid.values.begin(), grid.values.end());
  std::vector<GridPeak> peaks;
  for (int j = 0; j < grid.im.count; ++j) {
    for (int i = 0; i < grid.re.count; ++i) {
      const double v = grid.at(i, j);
      if (v < relative_threshold * global || v <= 0.0) continue;
      bool is_max = true;
      for (int dj = -1; dj <= 1 && is_max; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          const int ni = i + di;
          const int nj = j + dj;
          if (ni < 0 || nj < 0 || ni >= grid.re.count || nj >= grid.im.count) continue;
          if (grid.at(ni, nj) >= v) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) peaks.push_back({grid.point(i, j), v});
    }
  }
  std::sort(peaks.begin(), peaks.end(), [](const GridPeak& a, const GridPeak& b) { return a.value > b.value; });
  return peaks;
}

}  // namespace tavis
