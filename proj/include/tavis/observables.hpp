#pragma once

#include <vector>

#include "tavis/hilbert.hpp"

namespace tavis {

// sum_n |<config, n|psi>|^2
double configuration_probability(const PureState& state, Configuration config);

// -Tr rho ln rho in nats.
double von_neumann_entropy(const DensityMatrix& rho);

// 4 |C_ee C_gg - C_eg C_ge|^2 for a two-qubit register.
double pure_tangle(const QubitRegisterState& qubits);

// Wootters construction: mu_1 - mu_2 - mu_3 - mu_4 where mu_i are the
// decreasing square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy),
// conjugation taken in the configuration basis. Unclamped, so it is negative
// for some separable states. Eigenvalues of rho below 1e-14 count as zero.
double concurrence_margin(const DensityMatrix& rho);
double concurrence(const DensityMatrix& rho);
// Squared concurrence.
double mixed_tangle(const DensityMatrix& rho);

struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  double at(int i) const { return count == 1 ? min : min + (max - min) * i / (count - 1); }
};

struct QGridSpec {
  GridAxis re;
  GridAxis im;
  // Divide by pi so Q integrates to 1 over the plane.
  bool divide_by_pi = false;
};

// 201 x 201 points over [-1.5 sqrt(nbar), 1.5 sqrt(nbar)]^2.
QGridSpec default_q_grid(double nbar);

struct QGrid {
  GridAxis re;
  GridAxis im;
  std::vector<double> values;  // row-major: values[i_im * re.count + i_re]

  double at(int i_re, int i_im) const { return values[static_cast<std::size_t>(i_im) * re.count + i_re]; }
  cplx point(int i_re, int i_im) const { return {re.at(i_re), im.at(i_im)}; }
};

// Q(beta) = <beta|rho^F|beta>. rho^F must have negligible weight on its top
// Fock level and the grid must stay within |beta|^2 <= 4 fock_dim.
QGrid q_function(const DensityMatrix& rho_field, const QGridSpec& spec);

struct GridPeak {
  cplx beta;
  double value = 0.0;
};

// Strict local maxima over the 8-neighbourhood whose value is at least
// `relative_threshold` times the global maximum, sorted by decreasing value.
std::vector<GridPeak> local_maxima(const QGrid& grid, double relative_threshold);

}  // namespace tavis
