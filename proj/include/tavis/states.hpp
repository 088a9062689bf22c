#pragma once

// Constructors for the qubit-register and field state families: coherent
// fields, Dicke states, spin-coherent attractor states, their basins of
// attraction, and the two-lobe field state expected at the quarter revival.

#include "tavis/hilbert.hpp"

namespace tavis {

enum class Branch { plus, minus };

// Coherent field |alpha> with alpha = sqrt(nbar) e^{-i theta}.
struct CoherentParams {
  double nbar = 0.0;
  double theta = 0.0;
  int fock_dim = 1;
};

inline constexpr double kTruncationTailTol = 1e-8;

// Poisson mass beyond the truncation: sum_{n >= fock_dim} e^{-nbar} nbar^n / n!.
double poisson_tail(double nbar, int fock_dim);

// Smallest fock_dim with n_max = ceil(nbar + 12 sqrt(nbar)) and Poisson tail
// below 1e-10, never less than 2.
int default_fock_dim(double nbar);

// Raw truncated amplitudes <n|beta>, n < fock_dim, without renormalization.
CVector coherent_amplitudes(cplx beta, int fock_dim);

// Truncated and renormalized |alpha>. Throws TruncationError when the tail
// mass beyond fock_dim is at least 1e-8.
CVector coherent_field(const CoherentParams& p);
CVector coherent_field(cplx alpha, int fock_dim);

cplx coherent_amplitude(double nbar, double theta);

// Symmetric state with k qubits in the ground state (N - k excited).
QubitRegisterState dicke_state(int num_qubits, int k);

// ((e^{-i theta}|e> +- i|g>)/sqrt 2)^{(x) N}
QubitRegisterState attractor_state(int num_qubits, double theta, Branch branch);

// Basin of attraction of the + attractor. For N = 2:
//   a (e^{-i theta}|ee> + e^{i theta}|gg>) + sqrt(1/2 - |a|^2)(|eg> + |ge>)
struct BasinParams {
  int num_qubits = 2;
  cplx a = 0.0;
  double theta = 0.0;
};

double basin_max_abs_a(int num_qubits);
QubitRegisterState basin_state(const BasinParams& p);

// Coefficients ordered as C_ee, C_eg, C_ge, C_gg; qubit 1 is the first letter.
QubitRegisterState general_two_qubit(cplx c_ee, cplx c_eg, cplx c_ge, cplx c_gg);

QubitRegisterState configuration_state(int num_qubits, Configuration config);

// (e^{-iN theta/2}|e...e> + e^{iN theta/2}|g...g>)/sqrt 2
QubitRegisterState ghz_state(int num_qubits, double theta);

// Analytic two-qubit field state at a quarter of the revival time:
//   e^{i theta}[e^{i pi nbar/2}(a - s)|alpha> + e^{-i pi nbar/2}(a + s)|-alpha>],
// s = sqrt(1/2 - |a|^2), normalized numerically after truncation.
CVector field_cat_reference(const BasinParams& p, double nbar, int fock_dim);

}  // namespace tavis
