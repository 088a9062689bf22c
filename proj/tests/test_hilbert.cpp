#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "tavis/error.hpp"
#include "tavis/hilbert.hpp"
#include "tavis/states.hpp"

using namespace tavis;

namespace {

CVector basis_vector(Eigen::Index dim, Eigen::Index i) {
  CVector v = CVector::Zero(dim);
  v[i] = 1.0;
  return v;
}

// Poisson amplitudes by the recurrence sqrt(p_n) = sqrt(p_{n-1}) * sqrt(nbar / n).
std::vector<double> poisson_sqrt_weights(double nbar, int count) {
  std::vector<double> w(static_cast<std::size_t>(count));
  w[0] = std::exp(-nbar / 2);
  for (int n = 1; n < count; ++n) w[n] = w[n - 1] * std::sqrt(nbar / n);
  return w;
}

CVector random_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVector v(dim);
  for (auto& z : v) z = {normal(rng), normal(rng)};
  return v.normalized();
}

}  // namespace

TEST_CASE("configuration labels map letters to bits") {
  CHECK(parse_configuration("g") == 0);
  CHECK(parse_configuration("e") == 1);
  CHECK(parse_configuration("eg") == 1);
  CHECK(parse_configuration("ge") == 2);
  CHECK(parse_configuration("ee") == 3);
  CHECK(configuration_label(5, 3) == "ege");
  CHECK_THROWS_AS(parse_configuration("ex"), DomainError);
  CHECK_THROWS_AS(parse_configuration(""), DomainError);
}

TEST_CASE("compose_state places products by qubit-major index") {
  SUBCASE("vacuum product") {
    const auto psi = compose_state(configuration_state(1, 0), basis_vector(1, 0));
    CHECK(psi.dim() == 2);
    CHECK(psi[0] == cplx(1.0));
    CHECK(psi[1] == cplx(0.0));
  }
  SUBCASE("excited qubit, one photon, fock_dim 3") {
    const auto psi = compose_state(configuration_state(1, 1), basis_vector(3, 1), 3);
    for (std::size_t i = 0; i < psi.dim(); ++i) CHECK(std::abs(psi[i]) == doctest::Approx(i == 4 ? 1.0 : 0.0));
  }
  SUBCASE("superposed qubit with truncated coherent field stays normalized") {
    CVector q(2);
    q << 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
    const auto field = coherent_field({50.0, 0.0, 136});
    const auto psi = compose_state(QubitRegisterState(1, q), field);
    // Summation oracle: sum of |amp|^2 over the joint index.
    double sum = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i) sum += std::norm(psi[i]);
    CHECK(std::abs(sum - 1.0) < 1e-10);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(compose_state(configuration_state(1, 0), basis_vector(4, 0), 3), DimensionError);
    CVector bad = CVector::Zero(3);
    bad[0] = 1.1;
    CHECK_THROWS_AS(compose_state(configuration_state(1, 0), bad, 3), NormalizationError);
    CHECK_THROWS_AS(QubitRegisterState(1, bad.head(2)), NormalizationError);
    CHECK_THROWS_AS(QubitRegisterState(2, basis_vector(2, 0)), DimensionError);
  }
}

TEST_CASE("partial traces") {
  const CVector vac = basis_vector(1, 0);
  SUBCASE("product state traces cleanly") {
    const auto psi = compose_state(configuration_state(1, 0), coherent_field({4.0, 0.3, 40}));
    const auto rho = reduce_to_qubits(psi);
    CHECK(std::abs(rho(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(rho(1, 1)) < 1e-15);
    CHECK(std::abs(rho(0, 1)) < 1e-15);
  }
  SUBCASE("maximally entangled pair") {
    CVector amp = CVector::Zero(6);
    amp[0] = amp[4] = 1.0 / std::numbers::sqrt2;  // (|g,0> + |e,1>)/sqrt2, fock_dim 3
    const PureState psi(1, 3, amp);
    const auto rq = reduce_to_qubits(psi);
    CHECK(std::abs(rq(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(rq(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(rq(0, 1)) < 1e-15);
    const auto rf = reduce_to_field(psi);
    CHECK(rf.dim() == 3);
    CHECK(std::abs(rf(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(rf(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(rf(2, 2)) < 1e-15);
    CHECK(std::abs(rf(0, 1)) < 1e-15);
  }
  SUBCASE("vacuum field") {
    const auto rf = reduce_to_field(compose_state(configuration_state(1, 0), vac));
    CHECK(std::abs(rf(0, 0) - 1.0) < 1e-15);
  }
  SUBCASE("coherent field reduced matrix has Poisson mean") {
    const double nbar = 50.0;
    const auto psi = compose_state(basin_state({2, 1.0 / std::numbers::sqrt2, 0.0}), coherent_field({nbar, 0.0, 136}));
    const auto rf = reduce_to_field(psi);
    double mean = 0.0;
    for (int n = 0; n < 136; ++n) mean += n * rf(n, n).real();
    // Poisson-moment oracle from the recurrence weights.
    const auto w = poisson_sqrt_weights(nbar, 136);
    double oracle_mass = 0.0;
    double oracle_mean = 0.0;
    for (int n = 0; n < 136; ++n) {
      oracle_mass += w[n] * w[n];
      oracle_mean += n * w[n] * w[n];
    }
    oracle_mean /= oracle_mass;
    CHECK(std::abs(mean - oracle_mean) < 1e-9);
    CHECK(std::abs(mean - nbar) < 1e-3 * nbar);
  }
}

TEST_CASE("partial trace properties on random states") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int nq = 1 + trial % 3;
    const int fock = 3 + trial % 5;
    const PureState psi(nq, fock, random_state((Eigen::Index{1} << nq) * fock, rng));
    const auto rq = reduce_to_qubits(psi);
    const auto rf = reduce_to_field(psi);
    CHECK(std::abs(rq.entries().trace() - 1.0) < 1e-10);
    CHECK(std::abs(rf.entries().trace() - 1.0) < 1e-10);
    // Schmidt: nonzero spectra agree.
    RVector a = rq.eigenvalues().reverse();
    RVector b = rf.eigenvalues().reverse();
    const Eigen::Index k = std::min(a.size(), b.size());
    CHECK((a.head(k) - b.head(k)).cwiseAbs().maxCoeff() < 1e-8);
    if (b.size() > k) CHECK(b.tail(b.size() - k).cwiseAbs().maxCoeff() < 1e-8);
  }
  SUBCASE("compose then reduce returns the register projector") {
    for (int trial = 0; trial < 10; ++trial) {
      const QubitRegisterState q(2, random_state(4, rng));
      const auto rho = reduce_to_qubits(compose_state(q, random_state(7, rng)));
      CHECK((rho.entries() - q.amplitudes() * q.amplitudes().adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("density matrix invariants are enforced") {
  CMatrix m = CMatrix::Identity(2, 2) * 0.5;
  CHECK_NOTHROW(DensityMatrix(Subsystem::qubits, m));
  CMatrix not_hermitian = m;
  not_hermitian(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(Subsystem::qubits, not_hermitian), DomainError);
  CHECK_THROWS_AS(DensityMatrix(Subsystem::qubits, CMatrix::Identity(2, 2)), DomainError);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.1;
  negative(1, 1) = -0.1;
  CHECK_THROWS_AS(DensityMatrix(Subsystem::qubits, negative), DomainError);
}

TEST_CASE("fidelity") {
  const DensityMatrix ground(Subsystem::qubits, CMatrix(basis_vector(2, 0) * basis_vector(2, 0).adjoint()));
  const DensityMatrix excited(Subsystem::qubits, CMatrix(basis_vector(2, 1) * basis_vector(2, 1).adjoint()));
  CHECK(fidelity(configuration_state(1, 0), ground) == doctest::Approx(1.0));
  CHECK(fidelity(configuration_state(1, 0), excited) == doctest::Approx(0.0));
  CHECK_THROWS_AS(fidelity(configuration_state(2, 0), ground), DimensionError);
}
