// Acceptance suite: one line per criterion, exit 0 only if all pass.

#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "heliomech/config.hpp"
#include "heliomech/constants.hpp"
#include "heliomech/coupling.hpp"
#include "heliomech/hamiltonian.hpp"
#include "heliomech/material.hpp"
#include "heliomech/modes.hpp"
#include "heliomech/oracle.hpp"
#include "heliomech/rates.hpp"

using namespace heliomech;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool pass,
            const std::string& detail) {
  if (!pass) ++failures;
  std::printf("criterion %d: %-34s %s  (%s)\n", number, what.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str());
}

bool within_rel(double value, double reference, double rel) {
  return std::abs(value - reference) <= rel * std::abs(reference);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

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

void criterion1_material() {
  const MaterialCoefficients mat = material_coefficients(helium_preset());
  const bool pass = within_rel(mat.g1, 0.05826, 5e-3) &&
                    within_rel(mat.g2, 0.00111, 1e-2) &&
                    within_rel(mat.eps_ratio0, 1.057, 1e-3);
  report(1, "material constants", pass,
         "g1=" + fmt(mat.g1) + " g2=" + fmt(mat.g2) +
             " eps=" + fmt(mat.eps_ratio0));
}

void criterion2_coupling() {
  const MaterialCoefficients mat = material_coefficients(helium_preset());
  const double volume = 1e-14;
  const double omega = constants::two_pi * constants::c_light / 1e-6;
  const double f = constants::two_pi * 1e7;
  const double g_est = linear_coupling_uniform_estimate(mat, omega, f, volume);

  const ModeFunction opt = uniform_mode(ModeKind::optical, volume, omega);
  const ModeFunction ac = uniform_mode(ModeKind::acoustic, volume, f);
  const double g_quad = linear_coupling_element(mat, opt, opt, ac);

  const bool pass = within_rel(g_est, constants::two_pi * 1.8e3, 5e-2) &&
                    within_rel(g_est / mat.g1, constants::two_pi * 30e3, 5e-2) &&
                    within_rel(g_quad, g_est, 1e-10);
  report(2, "coupling estimates", pass,
         "g'=" + fmt(g_est) + " rad/s, g'/g1=" + fmt(g_est / mat.g1) +
             " rad/s, quadrature rel err=" +
             fmt(std::abs(g_quad - g_est) / g_est));
}

void criterion3_suppression() {
  const MaterialCoefficients mat = material_coefficients(helium_preset());
  const double ratio = quadratic_suppression_ratio(
      mat, constants::two_pi * 1e7, 1e-14);
  const bool pass = ratio >= 5e-12 / 3.0 && ratio <= 5e-12 * 3.0;
  report(3, "second-order suppression p/g'", pass,
         "ratio=" + fmt(ratio) + " vs ~5e-12");
}

void criterion4_interference_cancellation() {
  RateConfig rc = at_two_step_resonance(rates_preset("paper-rates"));
  const double f = rc.geometric_mean_f();
  const double at_res = two_step_bracket(rc).value;
  bool pass = std::abs(at_res) <= 1e-14 / f;

  const double slope_expected = -(1.0 / (rc.f1 * rc.f1) + 1.0 / (rc.f2 * rc.f2));
  double worst = 0.0;
  for (double frac : {1e-5, 1e-4, 1e-3}) {
    RateConfig up = rc, down = rc;
    up.omega2 += frac * f;
    down.omega2 -= frac * f;
    const double x_up = -up.two_phonon_detuning();
    const double x_down = -down.two_phonon_detuning();
    const double slope = (two_step_bracket(up).value -
                          two_step_bracket(down).value) /
                         (x_up - x_down);
    worst = std::max(worst, std::abs(slope - slope_expected) /
                                std::abs(slope_expected));
  }
  pass = pass && worst <= 1e-3;
  report(4, "bracket cancellation and slope", pass,
         "bracket(0)=" + fmt(at_res) + ", slope rel err=" + fmt(worst));
}

void criterion5_ratio_chain() {
  const RateConfig rc = rates_preset("paper-rates");
  const double prefactor =
      rate_ratio(rc, RatioMode::paper_approx) / (rc.n1 * rc.n1 * rc.mu2);
  const double chain_printed = 2e-16 * rc.n1 * rc.n1 * rc.mu2;
  // Both numbers reported side by side; the factor-100 gap between the
  // computed prefactor and the printed one is asserted, not hidden.
  const bool pass = within_rel(prefactor, 2e-14, 1e-2) &&
                    within_rel(chain_printed, 2e-3, 1e-6);
  report(5, "ratio chain", pass,
         "computed prefactor=" + fmt(prefactor) +
             ", chain with printed 2e-16 prefactor=" + fmt(chain_printed));
}

void criterion6_first_order_oracle() {
  double worst_pt = 0.0;
  double worst_occ = 0.0;
  // occupation triples (n1, n2, mu1) exercising each factor of mu1 n1 (n2+1)
  const int combos[4][3] = {{1, 0, 1}, {2, 0, 1}, {1, 1, 2}, {1, 0, 3}};
  for (const auto& c : combos) {
    DeskConfig cfg{};
    cfg.n1 = c[0];
    cfg.n2 = c[1];
    cfg.mu1 = c[2];
    const FirstOrderCheck fo = first_order_check(cfg, 0.0);
    worst_pt = std::max(worst_pt, fo.max_rel_deviation);
    // the perturbative value carries the occupation product explicitly
    worst_occ = std::max(
        worst_occ, std::abs(fo.probability_numeric - fo.probability_perturbative) /
                       fo.probability_perturbative);
  }
  // off-resonant envelope: at delta = 50 g the transfer must stay below
  // the perturbative bound 4 M^2 / delta^2
  const DeskConfig base{};
  const double delta = 50.0 * base.g;
  const FirstOrderCheck detuned = first_order_check(base, delta);
  const bool bounded =
      detuned.probability_numeric <=
      1.05 * 4.0 * detuned.matrix_element * detuned.matrix_element /
          (delta * delta);
  const bool pass = worst_pt <= 0.01 && worst_occ <= 0.02 && bounded;
  report(6, "first-order oracle", pass,
         "max PT deviation=" + fmt(worst_pt) +
             ", occupation-scaling deviation=" + fmt(worst_occ));
}

void criterion7_second_order_oracle() {
  const DeskConfig cfg{};
  const SecondOrderCheck so =
      second_order_check(cfg, {0.6, 1.2, 1.8, 2.4, 3.0});
  double worst = 0.0;
  for (const auto& pt : so.scan) worst = std::max(worst, pt.rel_deviation);
  const bool pass = worst <= 0.10 && so.interference_ratio <= 1.0 / 100.0 &&
                    so.pathway_ordering_matches;
  report(7, "second-order oracle", pass,
         "max scan deviation=" + fmt(worst) +
             ", interference ratio=" + fmt(so.interference_ratio) +
             ", ordering=" + (so.pathway_ordering_matches ? "ok" : "bad"));
}

void criterion8_structural() {
  const double g = 0.01;
  const CouplingTensor tensor = flat_tensor({100.0, 103.0}, {3.0}, g);
  const auto interaction = assemble_linear(tensor);

  bool golden = interaction.size() == 8;
  std::set<std::string> sigs;
  for (const auto& t : interaction) {
    golden = golden && t.coefficient == -g;
    sigs.insert(t.signature_string());
  }
  golden = golden && sigs.size() == 8 && closed_under_conjugation(interaction);

  const auto terms = assemble(tensor);
  const FockBasis basis({2, 2}, {4});
  const Eigen::MatrixXd h = build_matrix(terms, basis);
  const double herm = hermiticity_residual(h);

  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(basis.dimension());
  psi0(basis.index_of({2, 0, 1})) = 1.0;
  const Trajectory traj = evolve(h, psi0, 200.0, 2.0);

  const bool pass = golden && herm < 1e-12 && traj.max_norm_drift < 1e-9;
  report(8, "structural invariants", pass,
         "hermiticity=" + fmt(herm) + ", norm drift=" +
             fmt(traj.max_norm_drift) + ", golden terms=" +
             (golden ? "ok" : "bad"));
}

}  // namespace

int main() {
  criterion1_material();
  criterion2_coupling();
  criterion3_suppression();
  criterion4_interference_cancellation();
  criterion5_ratio_chain();
  criterion6_first_order_oracle();
  criterion7_second_order_oracle();
  criterion8_structural();
  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
