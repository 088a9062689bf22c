#include "tavis/model.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "tavis/error.hpp"

namespace tavis {

namespace {

void check_params(const ModelParams& p) {
  if (p.num_qubits < 1 || p.num_qubits > 20) throw DimensionError("num_qubits must be in [1, 20]");
  if (p.fock_dim < 2) throw DimensionError("fock_dim must be at least 2");
  if (!(p.coupling > 0.0) || !std::isfinite(p.coupling)) throw DomainError("coupling must be positive");
  if (!(p.frequency >= 0.0) || !std::isfinite(p.frequency)) throw DomainError("frequency must be nonnegative");
}

void check_cap(const ModelParams& p, std::size_t cap) {
  if (p.dimension() > cap) {
    throw DimensionCapError("joint dimension " + std::to_string(p.dimension()) + " exceeds cap " +
                            std::to_string(cap));
  }
}

CVector eigen_phases(const RVector& energies, double t) {
  CVector phases(energies.size());
  for (Eigen::Index k = 0; k < energies.size(); ++k) phases[k] = std::polar(1.0, -energies[k] * t);
  return phases;
}

}  // namespace

int excitation_number(Configuration q, int n) { return std::popcount(q) + n; }

CMatrix restricted_hamiltonian(const ModelParams& params, const std::vector<std::size_t>& indices,
                               HamiltonianFault fault) {
  const auto dim = params.dimension();
  const auto fock = static_cast<std::size_t>(params.fock_dim);
  std::vector<Eigen::Index> local(dim, -1);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= dim) throw DimensionError("basis index out of range");
    local[indices[i]] = static_cast<Eigen::Index>(i);
  }

  const auto n_local = static_cast<Eigen::Index>(indices.size());
  CMatrix h = CMatrix::Zero(n_local, n_local);
  const double w = params.frequency;
  for (Eigen::Index i = 0; i < n_local; ++i) {
    const auto q = static_cast<Configuration>(indices[static_cast<std::size_t>(i)] / fock);
    const auto n = static_cast<int>(indices[static_cast<std::size_t>(i)] % fock);
    if (params.frame == Frame::lab) {
      h(i, i) = w * n + 0.5 * w * (2 * std::popcount(q) - params.num_qubits);
    }
    if (n == 0) continue;
    // a s+_b : (q, n) -> (q | 1<<b, n - 1) with amplitude sqrt(n)
    for (int b = 0; b < params.num_qubits; ++b) {
      if ((q >> b) & 1U) continue;
      const std::size_t target = (q | (Configuration{1} << b)) * fock + static_cast<std::size_t>(n - 1);
      const Eigen::Index j = local[target];
      if (j < 0) continue;
      double g = params.coupling * std::sqrt(static_cast<double>(n));
      if (fault == HamiltonianFault::flipped_coupling_sign && b == 0) g = -g;
      h(j, i) += g;
      h(i, j) += g;
    }
  }
  return h;
}

CMatrix dense_hamiltonian(const ModelParams& params, std::size_t cap) {
  check_params(params);
  check_cap(params, cap);
  std::vector<std::size_t> all(params.dimension());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return restricted_hamiltonian(params, all);
}

ExcitationBlockSet::ExcitationBlockSet(ModelParams params, std::vector<ExcitationBlock> blocks)
    : params_(params), blocks_(std::move(blocks)) {}

double ExcitationBlockSet::boundary_occupancy(const PureState& state) const {
  if (state.dim() != dimension()) throw DimensionError("state dimension does not match model");
  double p = 0.0;
  for (const auto& block : blocks_) {
    if (!block.touches_truncation) continue;
    for (auto i : block.indices) p += std::norm(state[i]);
  }
  return p;
}

ExcitationBlockSet build_blocks(const ModelParams& params, HamiltonianFault fault) {
  check_params(params);
  check_cap(params, params.max_dimension);

  const int max_excitation = params.fock_dim - 1 + params.num_qubits;
  const auto qdim = Configuration{1} << params.num_qubits;
  std::vector<ExcitationBlock> blocks;
  blocks.reserve(static_cast<std::size_t>(max_excitation) + 1);
  for (int e = 0; e <= max_excitation; ++e) {
    ExcitationBlock block;
    block.excitation = e;
    block.touches_truncation = e >= params.fock_dim - 1;
    for (Configuration q = 0; q < qdim; ++q) {
      const int n = e - std::popcount(q);
      if (n < 0 || n >= params.fock_dim) continue;
      block.indices.push_back(static_cast<std::size_t>(q) * params.fock_dim + n);
    }
    const CMatrix h = restricted_hamiltonian(params, block.indices, fault);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    if (solver.info() != Eigen::Success) throw DomainError("block eigendecomposition failed");
    block.energies = solver.eigenvalues();
    block.eigenvectors = solver.eigenvectors();
    blocks.push_back(std::move(block));
  }
  return ExcitationBlockSet(params, std::move(blocks));
}

PureState evolve(const PureState& state, double t, const ExcitationBlockSet& blocks) {
  const auto& p = blocks.params();
  if (state.num_qubits() != p.num_qubits || state.fock_dim() != p.fock_dim) {
    throw DimensionError("state dimensions do not match the excitation blocks");
  }
  CVector out(static_cast<Eigen::Index>(state.dim()));
  for (const auto& block : blocks.blocks()) {
    const auto s = static_cast<Eigen::Index>(block.indices.size());
    CVector c(s);
    for (Eigen::Index k = 0; k < s; ++k) c[k] = state[block.indices[static_cast<std::size_t>(k)]];
    const CVector rotated =
        block.eigenvectors * (eigen_phases(block.energies, t).array() * (block.eigenvectors.adjoint() * c).array()).matrix();
    for (Eigen::Index k = 0; k < s; ++k) out[static_cast<Eigen::Index>(block.indices[static_cast<std::size_t>(k)])] = rotated[k];
  }
  return PureState(state.num_qubits(), state.fock_dim(), std::move(out));
}

double expected_excitation(const PureState& state) {
  double total = 0.0;
  for (Configuration q = 0; q < state.qubit_dim(); ++q) {
    for (int n = 0; n < state.fock_dim(); ++n) total += excitation_number(q, n) * std::norm(state[state.index(q, n)]);
  }
  return total;
}

double expected_energy(const PureState& state, const ExcitationBlockSet& blocks) {
  if (state.dim() != blocks.dimension()) throw DimensionError("state dimension does not match model");
  double total = 0.0;
  for (const auto& block : blocks.blocks()) {
    const auto s = static_cast<Eigen::Index>(block.indices.size());
    CVector c(s);
    for (Eigen::Index k = 0; k < s; ++k) c[k] = state[block.indices[static_cast<std::size_t>(k)]];
    const CVector weights = block.eigenvectors.adjoint() * c;
    for (Eigen::Index k = 0; k < s; ++k) total += block.energies[k] * std::norm(weights[k]);
  }
  return total;
}

DenseEvolution::DenseEvolution(const ModelParams& params, std::size_t cap) : params_(params) {
  const CMatrix h = dense_hamiltonian(params, cap);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw DomainError("dense eigendecomposition failed");
  energies_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

PureState DenseEvolution::evolve(const PureState& state, double t) const {
  if (state.num_qubits() != params_.num_qubits || state.fock_dim() != params_.fock_dim) {
    throw DimensionError("state dimensions do not match the dense model");
  }
  CVector out = eigenvectors_ *
                (eigen_phases(energies_, t).array() * (eigenvectors_.adjoint() * state.amplitudes()).array()).matrix();
  return PureState(state.num_qubits(), state.fock_dim(), std::move(out));
}

}  // namespace tavis
