#include "tavis/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tavis/error.hpp"

namespace tavis {

namespace {

constexpr double kInputNormTol = 1e-8;
constexpr int kMaxQubits = 20;

void check_unit_norm(const CVector& v, const char* what) {
  const double n = v.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kInputNormTol) {
    throw NormalizationError(std::string(what) + " is not normalized (norm " + std::to_string(n) + ")");
  }
}

RVector clipped_spectrum(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("eigendecomposition failed");
  RVector ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < -kPsdTol) {
      throw DomainError("density matrix has negative eigenvalue " + std::to_string(ev[i]));
    }
    if (ev[i] < 0.0) ev[i] = 0.0;
  }
  return ev;
}

}  // namespace

Configuration parse_configuration(std::string_view label) {
  if (label.empty() || label.size() > kMaxQubits) {
    throw DomainError("configuration label must have 1.." + std::to_string(kMaxQubits) + " letters");
  }
  Configuration q = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == 'e') {
      q |= Configuration{1} << i;
    } else if (label[i] != 'g') {
      throw DomainError("configuration label '" + std::string(label) + "' may only contain 'e' and 'g'");
    }
  }
  return q;
}

std::string configuration_label(Configuration config, int num_qubits) {
  std::string s(static_cast<std::size_t>(num_qubits), 'g');
  for (int i = 0; i < num_qubits; ++i) {
    if ((config >> i) & 1U) s[static_cast<std::size_t>(i)] = 'e';
  }
  return s;
}

QubitRegisterState::QubitRegisterState(int num_qubits, CVector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw DimensionError("number of qubits out of range: " + std::to_string(num_qubits));
  }
  if (amplitudes_.size() != (Eigen::Index{1} << num_qubits)) {
    throw DimensionError("register of " + std::to_string(num_qubits) + " qubits needs " +
                         std::to_string(1 << num_qubits) + " amplitudes, got " +
                         std::to_string(amplitudes_.size()));
  }
  check_unit_norm(amplitudes_, "qubit register state");
  amplitudes_.normalize();
}

PureState::PureState(int num_qubits, int fock_dim, CVector amplitudes)
    : num_qubits_(num_qubits), fock_dim_(fock_dim), amplitudes_(std::move(amplitudes)) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) throw DimensionError("number of qubits out of range");
  if (fock_dim < 1) throw DimensionError("fock_dim must be positive");
  if (static_cast<std::size_t>(amplitudes_.size()) != qubit_dim() * static_cast<std::size_t>(fock_dim)) {
    throw DimensionError("amplitude vector length does not match 2^num_qubits * fock_dim");
  }
  check_unit_norm(amplitudes_, "joint state");
}

DensityMatrix::DensityMatrix(Subsystem subsystem, CMatrix entries)
    : subsystem_(subsystem), entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= kAlgebraicTol)) throw DomainError("density matrix is not Hermitian");
  const cplx tr = entries_.trace();
  if (!(std::abs(tr - 1.0) <= kAlgebraicTol)) {
    throw DomainError("density matrix trace is " + std::to_string(tr.real()));
  }
  eigenvalues_ = clipped_spectrum(entries_);
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return entries_.squaredNorm();
}

PureState compose_state(const QubitRegisterState& qubits, const CVector& field, int fock_dim) {
  if (field.size() > fock_dim) {
    throw DimensionError("field has " + std::to_string(field.size()) + " amplitudes but fock_dim is " +
                         std::to_string(fock_dim));
  }
  check_unit_norm(field, "field state");
  const auto qdim = static_cast<Eigen::Index>(qubits.dim());
  CVector joint = CVector::Zero(qdim * fock_dim);
  for (Eigen::Index q = 0; q < qdim; ++q) {
    joint.segment(q * fock_dim, field.size()) = qubits.amplitudes()[q] * field;
  }
  return PureState(qubits.num_qubits(), fock_dim, std::move(joint));
}

PureState compose_state(const QubitRegisterState& qubits, const CVector& field) {
  return compose_state(qubits, field, static_cast<int>(field.size()));
}

DensityMatrix reduce_to_qubits(const PureState& state) {
  const auto m = state.as_matrix();
  CMatrix rho = m * m.adjoint();
  // Enforce exact Hermiticity against rounding in the product.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(Subsystem::qubits, std::move(rho));
}

DensityMatrix reduce_to_field(const PureState& state) {
  const auto m = state.as_matrix();
  // rho^F[n, n'] = sum_q psi[q, n] conj(psi[q, n'])
  CMatrix rho = m.transpose() * m.conjugate();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(Subsystem::field, std::move(rho));
}

double fidelity(const CVector& reference, const DensityMatrix& rho) {
  if (static_cast<std::size_t>(reference.size()) != rho.dim()) {
    throw DimensionError("reference dimension " + std::to_string(reference.size()) +
                         " does not match density matrix dimension " + std::to_string(rho.dim()));
  }
  const cplx value = reference.dot(rho.entries() * reference);
  if (std::abs(value.imag()) > kEigenTol) {
    throw DomainError("fidelity has imaginary residue " + std::to_string(value.imag()));
  }
  return std::clamp(value.real(), 0.0, 1.0);
}

double fidelity(const QubitRegisterState& reference, const DensityMatrix& rho) {
  return fidelity(reference.amplitudes(), rho);
}

}  // namespace tavis
