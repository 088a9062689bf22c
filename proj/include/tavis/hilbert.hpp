#pragma once

// Joint qubit-register x Fock-space state representation.
//
// Basis convention: index = q * fock_dim + n, where bit i of the
// configuration q is set iff qubit i is excited and n is the photon number.
// Qubit i corresponds to the (i+1)-th letter of a configuration label, so
// "eg" means qubit 1 excited, qubit 2 ground (q = 1).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace tavis {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

using Configuration = std::uint32_t;

inline constexpr double kAlgebraicTol = 1e-10;
inline constexpr double kEigenTol = 1e-8;
inline constexpr double kPsdTol = 1e-9;

// Parses "eg", "gge", ... into a configuration bitstring.
Configuration parse_configuration(std::string_view label);
std::string configuration_label(Configuration config, int num_qubits);

// Amplitudes of an N-qubit register ordered by configuration bitstring.
// Inputs within 1e-8 of unit norm are accepted and renormalized.
class QubitRegisterState {
 public:
  QubitRegisterState(int num_qubits, CVector amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const CVector& amplitudes() const { return amplitudes_; }
  cplx operator[](Configuration q) const { return amplitudes_[q]; }

 private:
  int num_qubits_;
  CVector amplitudes_;
};

class PureState {
 public:
  // Validates length and unit norm (within 1e-8).
  PureState(int num_qubits, int fock_dim, CVector amplitudes);

  int num_qubits() const { return num_qubits_; }
  int fock_dim() const { return fock_dim_; }
  std::size_t qubit_dim() const { return std::size_t{1} << num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  std::size_t index(Configuration q, int n) const {
    return static_cast<std::size_t>(q) * fock_dim_ + n;
  }
  const CVector& amplitudes() const { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[i]; }
  double norm() const { return amplitudes_.norm(); }

  // Amplitudes viewed as a (qubit_dim x fock_dim) matrix, row = configuration.
  Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
  as_matrix() const {
    return {amplitudes_.data(), static_cast<Eigen::Index>(qubit_dim()), fock_dim_};
  }

 private:
  int num_qubits_;
  int fock_dim_;
  CVector amplitudes_;
};

enum class Subsystem { qubits, field };

// Hermitian, unit-trace, numerically PSD matrix. Invariants are checked at
// construction (Hermitian and trace within 1e-10, eigenvalues >= -1e-9).
class DensityMatrix {
 public:
  DensityMatrix(Subsystem subsystem, CMatrix entries);

  Subsystem subsystem() const { return subsystem_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  cplx operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  // Ascending eigenvalues with entries in [-1e-9, 0) clipped to zero.
  const RVector& eigenvalues() const { return eigenvalues_; }
  double purity() const;

 private:
  Subsystem subsystem_;
  CMatrix entries_;
  RVector eigenvalues_;
};

// |psi>|phi>, with `field` zero-padded up to fock_dim.
PureState compose_state(const QubitRegisterState& qubits, const CVector& field, int fock_dim);
PureState compose_state(const QubitRegisterState& qubits, const CVector& field);

DensityMatrix reduce_to_qubits(const PureState& state);
DensityMatrix reduce_to_field(const PureState& state);

// <ref|rho|ref>, clipped to [0, 1]. Imaginary residue above 1e-8 throws.
double fidelity(const CVector& reference, const DensityMatrix& rho);
double fidelity(const QubitRegisterState& reference, const DensityMatrix& rho);

}  // namespace tavis
