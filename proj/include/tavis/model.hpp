#pragma once

// Resonant Tavis-Cummings Hamiltonian with uniform coupling (hbar = 1):
//
//   H = w a^+a + (w/2) sum_i sz_i + g sum_i (a s+_i + a^+ s-_i)
//
// The total excitation number a^+a + sum_i s+_i s-_i commutes with H, so H
// is block diagonal in excitation sectors of size at most 2^N. In the
// interaction frame the diagonal part is dropped; at resonance it only
// contributes a phase that is constant on each sector.

#include <cstddef>
#include <vector>

#include "tavis/hilbert.hpp"

namespace tavis {

enum class Frame { interaction, lab };

struct ModelParams {
  int num_qubits = 1;
  double coupling = 1.0;
  double frequency = 0.0;
  Frame frame = Frame::interaction;
  int fock_dim = 2;
  std::size_t max_dimension = std::size_t{1} << 20;

  std::size_t dimension() const { return (std::size_t{1} << num_qubits) * static_cast<std::size_t>(fock_dim); }
};

inline constexpr std::size_t kDenseOracleCap = 4096;

// Deliberate defects used to check that the oracle harness notices them.
enum class HamiltonianFault { none, flipped_coupling_sign };

struct ExcitationBlock {
  int excitation = 0;
  std::vector<std::size_t> indices;  // joint basis indices, ascending
  RVector energies;
  CMatrix eigenvectors;              // columns are eigenvectors
  bool touches_truncation = false;   // excitation >= fock_dim - 1
};

class ExcitationBlockSet {
 public:
  ExcitationBlockSet(ModelParams params, std::vector<ExcitationBlock> blocks);

  const ModelParams& params() const { return params_; }
  const std::vector<ExcitationBlock>& blocks() const { return blocks_; }
  std::size_t dimension() const { return params_.dimension(); }

  // Total probability of `state` on blocks flagged as touching the truncation.
  double boundary_occupancy(const PureState& state) const;

 private:
  ModelParams params_;
  std::vector<ExcitationBlock> blocks_;
};

ExcitationBlockSet build_blocks(const ModelParams& params, HamiltonianFault fault = HamiltonianFault::none);

// Restriction of H to the listed joint basis indices.
CMatrix restricted_hamiltonian(const ModelParams& params, const std::vector<std::size_t>& indices,
                               HamiltonianFault fault = HamiltonianFault::none);

CMatrix dense_hamiltonian(const ModelParams& params, std::size_t cap = kDenseOracleCap);

// Sum of excitation number a^+a + sum_i s+_i s-_i for each joint basis index.
int excitation_number(Configuration q, int n);

PureState evolve(const PureState& state, double t, const ExcitationBlockSet& blocks);

double expected_excitation(const PureState& state);
double expected_energy(const PureState& state, const ExcitationBlockSet& blocks);

// Brute-force propagator from a full dense eigendecomposition. Independent
// of the excitation-block route; used as the oracle for `evolve`.
class DenseEvolution {
 public:
  explicit DenseEvolution(const ModelParams& params, std::size_t cap = kDenseOracleCap);

  PureState evolve(const PureState& state, double t) const;
  const RVector& energies() const { return energies_; }

 private:
  ModelParams params_;
  RVector energies_;
  CMatrix eigenvectors_;
};

}  // namespace tavis
