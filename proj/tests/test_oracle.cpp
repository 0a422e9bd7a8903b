#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "heliomech/oracle.hpp"

using namespace heliomech;

namespace {

CouplingTensor flat_tensor(std::vector<double> optical,
                           std::vector<double> acoustic, double g) {
  CouplingTensor t;
  t.optical_frequencies = std::move(optical);
  t.acoustic_frequencies = std::move(acoustic);
  for (int i = 0; i < static_cast<int>(t.optical_frequencies.size()); ++i)
    for (int j = 0; j < static_cast<int>(t.optical_frequencies.size()); ++j)
      for (int l = 0; l < static_cast<int>(t.acoustic_frequencies.size()); ++l)
        t.linear[{i, j, l}] = g;
  return t;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Truncated annihilation operator on n_max+1 levels.
Eigen::MatrixXd ladder(int n_max) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace

TEST_CASE("fock basis enumeration round-trips") {
  const FockBasis b({1, 2}, {3});
  CHECK(b.dimension() == 2 * 3 * 4);
  CHECK(b.n_optical == 2);
  CHECK(b.n_acoustic == 1);
  for (long k = 0; k < b.dimension(); ++k)
    CHECK(b.index_of(b.occupation_of(k)) == k);
  CHECK(b.index_of({0, 0, 0}) == 0);
  CHECK(b.index_of({1, 2, 3}) == b.dimension() - 1);
  CHECK_THROWS_AS(b.index_of({0, 0, 5}), std::out_of_range);
  CHECK_THROWS_AS(b.index_of({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FockBasis({1000}, {1000}), std::length_error);
}

TEST_CASE("free Hamiltonian is diagonal with harmonic ladder energies") {
  const auto terms = assemble_free({}, {2.5});
  const FockBasis basis({}, {3});
  const Eigen::MatrixXd h = build_matrix(terms, basis);
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) {
      if (i == j && i > 0)
        CHECK(h(i, j) == doctest::Approx(2.5 * i).epsilon(1e-14).scale(0.0));
      else if (i != j || i == 0)
        CHECK(h(i, j) == 0.0);
    }
}

TEST_CASE("interaction matrix element carries -g with ladder factors") {
  const double g = 0.01;
  const auto terms = assemble(flat_tensor({100.0, 103.0}, {3.0}, g));
  const FockBasis basis({1, 1}, {2});
  const Eigen::MatrixXd h = build_matrix(terms, basis);
  // |1,0,1> -> |0,1,0>: one a2+ a1 b1 application, all occupations 1
  CHECK(h(basis.index_of({0, 1, 0}), basis.index_of({1, 0, 1})) ==
        doctest::Approx(-g).epsilon(1e-14).scale(0.0));
  // |1,0,1> -> |0,1,2>: a2+ a1 b1+ picks up sqrt(2)
  CHECK(h(basis.index_of({0, 1, 2}), basis.index_of({1, 0, 1})) ==
        doctest::Approx(-g * std::sqrt(2.0)).epsilon(1e-14).scale(0.0));
  CHECK(hermiticity_residual(h) < 1e-12);
}

// Independent construction: lift single-mode ladder matrices by Kronecker
// products and sum the monomials directly.
TEST_CASE("matrix construction matches an explicit Kronecker-product build") {
  const auto terms = assemble(flat_tensor({100.0, 103.0}, {3.0}, 0.02));
  const FockBasis basis({1, 1}, {2});
  const Eigen::MatrixXd h = build_matrix(terms, basis);

  const std::vector<int> limits = {1, 1, 2};
  const auto lift = [&](const OperatorFactor& f) {
    const int slot = f.mode + (f.field == FieldKind::acoustic ? 2 : 0);
    Eigen::MatrixXd op = ladder(limits[static_cast<std::size_t>(slot)]);
    if (f.action == LadderAction::create) op.transposeInPlace();
    Eigen::MatrixXd full = Eigen::MatrixXd::Identity(1, 1);
    for (int s = 0; s < 3; ++s) {
      const int d = limits[static_cast<std::size_t>(s)] + 1;
      full = kron(full, s == slot ? op : Eigen::MatrixXd::Identity(d, d));
    }
    return full;
  };

  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(h.rows(), h.cols());
  for (const auto& term : terms) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(h.rows(), h.cols());
    for (const auto& f : term.signature) m = m * lift(f);
    expected += term.coefficient * m;
  }
  CHECK((h - expected).norm() <= 1e-12 * expected.norm());
}

TEST_CASE("uncoupled evolution only rotates the phase") {
  const auto terms = assemble(flat_tensor({100.0, 103.0}, {3.0}, 0.0));
  const FockBasis basis({1, 1}, {2});
  const Eigen::MatrixXd h = build_matrix(terms, basis);
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(basis.dimension());
  const long idx = basis.index_of({1, 0, 1});
  psi0(idx) = 1.0;
  const double e = h(idx, idx);
  const Evolver ev(h);
  for (double t : {0.3, 1.7, 12.0}) {
    const Eigen::VectorXcd psi = ev.at(psi0, t);
    CHECK(std::abs(psi(idx) - std::exp(std::complex<double>(0.0, -e * t))) <= 1e-10);
  }
}

TEST_CASE("resonant transfer completes a Rabi cycle at the expected period") {
  const DeskConfig cfg{};  // omega2 = omega1 + f1, resonant
  const auto terms = assemble(flat_tensor({cfg.omega1, cfg.omega2}, {cfg.f1}, cfg.g));
  const FockBasis basis({1, 1}, {3});
  const Eigen::MatrixXd h = build_matrix(terms, basis);
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(basis.dimension());
  psi0(basis.index_of({1, 0, 1})) = 1.0;
  const long fidx = basis.index_of({0, 1, 0});
  const Evolver ev(h);
  const double t_half = 0.5 * std::numbers::pi / cfg.g;
  CHECK(std::norm(ev.at(psi0, t_half)(fidx)) >= 0.999);
  CHECK(std::norm(ev.at(psi0, 2.0 * t_half)(fidx)) <= 1e-3);
}

TEST_CASE("trajectory conserves norm and total photon number") {
  const auto terms = assemble(flat_tensor({100.0, 103.0}, {3.0}, 0.01));
  const FockBasis basis({2, 2}, {3});
  const Eigen::MatrixXd h = build_matrix(terms, basis);
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(basis.dimension());
  psi0(basis.index_of({2, 0, 1})) = 1.0;
  const Trajectory traj = evolve(h, psi0, 100.0, 2.5);
  CHECK(traj.max_norm_drift < 1e-9);
  for (const auto& psi : traj.states) {
    double total = 0.0;
    for (long k = 0; k < basis.dimension(); ++k) {
      const auto occ = basis.occupation_of(k);
      total += std::norm(psi(k)) * (occ[0] + occ[1]);
    }
    CHECK(total == doctest::Approx(2.0).epsilon(1e-10).scale(0.0));
  }
}

TEST_CASE("first-order check matches perturbation theory on and off resonance") {
  const DeskConfig cfg{};
  const FirstOrderCheck on = first_order_check(cfg, 0.0);
  CHECK(on.matrix_element == doctest::Approx(cfg.g).epsilon(1e-14).scale(0.0));
  CHECK(on.max_rel_deviation <= 0.01);
  CHECK(on.probability_numeric == doctest::Approx(0.01).epsilon(0.02).scale(0.0));

  // far off resonance (delta = 50 g) the transfer stays under the
  // perturbative envelope 4 M^2 / delta^2
  const double delta = 50.0 * cfg.g;
  const FirstOrderCheck off = first_order_check(cfg, delta);
  const double envelope =
      4.0 * off.matrix_element * off.matrix_element / (delta * delta);
  CHECK(off.probability_numeric <= 1.05 * envelope);
  CHECK(off.probability_perturbative < on.probability_perturbative);
}

TEST_CASE("first-order probability carries the occupation factors") {
  DeskConfig cfg{};
  cfg.n1 = 2;
  cfg.mu1 = 3;
  const FirstOrderCheck fo = first_order_check(cfg, 0.0);
  // matrix element g sqrt(mu1 n1 (n2+1)); probability scales with its square
  CHECK(fo.matrix_element ==
        doctest::Approx(cfg.g * std::sqrt(6.0)).epsilon(1e-14).scale(0.0));
  const FirstOrderCheck base = first_order_check(DeskConfig{}, 0.0);
  // both checks sample at t = 0.1/M, so the windowed probabilities agree
  CHECK(fo.probability_numeric ==
        doctest::Approx(base.probability_numeric).epsilon(0.02).scale(0.0));
  CHECK(fo.max_rel_deviation <= 0.01);
}

TEST_CASE("truncation headroom no longer moves the first-order answer") {
  DeskConfig tight{};
  tight.extra_levels = 2;
  DeskConfig roomy{};
  roomy.extra_levels = 3;
  const double p1 = first_order_check(tight, 0.0).probability_numeric;
  const double p2 = first_order_check(roomy, 0.0).probability_numeric;
  CHECK(p1 == doctest::Approx(p2).epsilon(1e-3).scale(0.0));
}

TEST_CASE("second-order scan tracks the bracket and shows interference") {
  const DeskConfig cfg{};
  const SecondOrderCheck so = second_order_check(cfg, {1.0, 2.0});
  REQUIRE(so.scan.size() == 2);
  for (const auto& pt : so.scan) {
    CHECK(pt.rel_deviation <= 0.10);
    CHECK(pt.extracted_geff > 0.0);
  }
  // full pathway set destructively interferes at resonance
  CHECK(so.interference_ratio <= 0.01);
  CHECK(so.interference_control_prob > 0.5);
  CHECK(so.pathway_ordering_matches);
}

TEST_CASE("evolve validates its inputs") {
  const Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2, 2);
  Eigen::VectorXcd psi0(2);
  psi0 << 1.0, 0.0;
  CHECK_THROWS_AS(evolve(h, psi0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(evolve(h, psi0, -1.0, 0.1), std::domain_error);
}
