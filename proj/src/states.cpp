#include "tavis/states.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "tavis/error.hpp"

namespace tavis {

namespace {

constexpr double kBasinSlack = 1e-12;

double log_poisson(double nbar, int n) {
  return -nbar + n * std::log(nbar) - std::lgamma(n + 1.0);
}

double binomial(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

void check_qubits(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 20) throw DimensionError("num_qubits must be in [1, 20]");
}

}  // namespace

double poisson_tail(double nbar, int fock_dim) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw DomainError("nbar must be finite and nonnegative");
  if (fock_dim < 1) throw DimensionError("fock_dim must be positive");
  if (nbar == 0.0) return 0.0;
  double tail = 0.0;
  for (int n = fock_dim;; ++n) {
    const double term = std::exp(log_poisson(nbar, n));
    tail += term;
    if (n > nbar && term < 1e-18 * tail) break;
    if (n > nbar && term == 0.0) break;
  }
  return tail;
}

int default_fock_dim(double nbar) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw DomainError("nbar must be finite and nonnegative");
  const int n_max = static_cast<int>(std::ceil(nbar + 12.0 * std::sqrt(nbar)));
  int dim = std::max(n_max + 1, 2);
  while (poisson_tail(nbar, dim) >= 1e-10) ++dim;
  return dim;
}

cplx coherent_amplitude(double nbar, double theta) { return std::polar(std::sqrt(nbar), -theta); }

CVector coherent_amplitudes(cplx beta, int fock_dim) {
  if (fock_dim < 1) throw DimensionError("fock_dim must be positive");
  CVector amp = CVector::Zero(fock_dim);
  const double r = std::abs(beta);
  if (r == 0.0) {
    amp[0] = 1.0;
    return amp;
  }
  const double log_r = std::log(r);
  const double phase = std::arg(beta);
  for (int n = 0; n < fock_dim; ++n) {
    const double log_mag = -0.5 * r * r + n * log_r - 0.5 * std::lgamma(n + 1.0);
    amp[n] = std::polar(std::exp(log_mag), n * phase);
  }
  return amp;
}

CVector coherent_field(cplx alpha, int fock_dim) {
  const double nbar = std::norm(alpha);
  const double tail = poisson_tail(nbar, fock_dim);
  if (tail >= kTruncationTailTol) {
    throw TruncationError("fock_dim " + std::to_string(fock_dim) + " leaves Poisson tail " +
                          std::to_string(tail) + " for mean photon number " + std::to_string(nbar));
  }
  CVector amp = coherent_amplitudes(alpha, fock_dim);
  amp.normalize();
  return amp;
}

CVector coherent_field(const CoherentParams& p) {
  if (!(p.nbar >= 0.0) || !std::isfinite(p.nbar)) throw DomainError("nbar must be finite and nonnegative");
  return coherent_field(coherent_amplitude(p.nbar, p.theta), p.fock_dim);
}

QubitRegisterState dicke_state(int num_qubits, int k) {
  check_qubits(num_qubits);
  if (k < 0 || k > num_qubits) {
    throw DomainError("Dicke index k=" + std::to_string(k) + " outside [0, " + std::to_string(num_qubits) + "]");
  }
  const int excited = num_qubits - k;
  const double amp = 1.0 / std::sqrt(binomial(num_qubits, k));
  CVector v = CVector::Zero(Eigen::Index{1} << num_qubits);
  for (Eigen::Index q = 0; q < v.size(); ++q) {
    if (std::popcount(static_cast<Configuration>(q)) == excited) v[q] = amp;
  }
  return QubitRegisterState(num_qubits, std::move(v));
}

QubitRegisterState attractor_state(int num_qubits, double theta, Branch branch) {
  check_qubits(num_qubits);
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  const cplx excited = std::polar(1.0, -theta) / std::numbers::sqrt2;
  const cplx ground = cplx(0.0, sign) / std::numbers::sqrt2;
  CVector v(Eigen::Index{1} << num_qubits);
  for (Eigen::Index q = 0; q < v.size(); ++q) {
    cplx amp = 1.0;
    for (int b = 0; b < num_qubits; ++b) amp *= ((q >> b) & 1) ? excited : ground;
    v[q] = amp;
  }
  return QubitRegisterState(num_qubits, std::move(v));
}

double basin_max_abs_a(int num_qubits) { return 1.0 / std::sqrt(std::ldexp(1.0, num_qubits - 1)); }

QubitRegisterState basin_state(const BasinParams& p) {
  check_qubits(p.num_qubits);
  const int nq = p.num_qubits;
  const double max_a = basin_max_abs_a(nq);
  if (!(std::abs(p.a) <= max_a + kBasinSlack)) {
    throw DomainError("basin parameter |a| = " + std::to_string(std::abs(p.a)) + " exceeds " +
                      std::to_string(max_a));
  }
  const double odd = std::sqrt(std::max(0.0, max_a * max_a - std::norm(p.a)));
  CVector v(Eigen::Index{1} << nq);
  for (Eigen::Index q = 0; q < v.size(); ++q) {
    const int k = nq - std::popcount(static_cast<Configuration>(q));
    const cplx amp = (k % 2 == 0) ? p.a : cplx(odd);
    // The Dicke weight sqrt(C(N,k)) cancels against the 1/sqrt(C(N,k))
    // per-configuration amplitude of the normalized Dicke state.
    v[q] = amp * std::polar(1.0, -(0.5 * nq - k) * p.theta);
  }
  return QubitRegisterState(nq, std::move(v));
}

QubitRegisterState general_two_qubit(cplx c_ee, cplx c_eg, cplx c_ge, cplx c_gg) {
  CVector v(4);
  v[parse_configuration("gg")] = c_gg;
  v[parse_configuration("eg")] = c_eg;
  v[parse_configuration("ge")] = c_ge;
  v[parse_configuration("ee")] = c_ee;
  return QubitRegisterState(2, std::move(v));
}

QubitRegisterState configuration_state(int num_qubits, Configuration config) {
  check_qubits(num_qubits);
  if (config >> num_qubits) throw DomainError("configuration out of range");
  CVector v = CVector::Zero(Eigen::Index{1} << num_qubits);
  v[config] = 1.0;
  return QubitRegisterState(num_qubits, std::move(v));
}

QubitRegisterState ghz_state(int num_qubits, double theta) {
  check_qubits(num_qubits);
  CVector v = CVector::Zero(Eigen::Index{1} << num_qubits);
  v[v.size() - 1] = std::polar(1.0 / std::numbers::sqrt2, -0.5 * num_qubits * theta);
  v[0] = std::polar(1.0 / std::numbers::sqrt2, 0.5 * num_qubits * theta);
  return QubitRegisterState(num_qubits, std::move(v));
}

CVector field_cat_reference(const BasinParams& p, double nbar, int fock_dim) {
  if (p.num_qubits != 2) throw DomainError("the quarter-revival field reference is defined for two qubits");
  if (!(std::abs(p.a) <= basin_max_abs_a(2) + kBasinSlack)) throw DomainError("basin parameter |a| exceeds 1/sqrt(2)");
  const double s = std::sqrt(std::max(0.0, 0.5 - std::norm(p.a)));
  const cplx alpha = coherent_amplitude(nbar, p.theta);
  const double half_turn = 0.5 * std::numbers::pi * nbar;
  const CVector v = std::polar(1.0, p.theta) * (std::polar(1.0, half_turn) * (p.a - s) * coherent_field(alpha, fock_dim) +
                                                std::polar(1.0, -half_turn) * (p.a + s) * coherent_field(-alpha, fock_dim));
  return v.normalized();
}

}  // namespace tavis
