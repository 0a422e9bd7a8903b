#include "heliomech/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "heliomech/constants.hpp"

namespace heliomech {

void RateConfig::validate() const {
  if (g <= 0.0 || omega1 <= 0.0 || omega2 <= 0.0 || f1 <= 0.0 || f2 <= 0.0 ||
      gamma <= 0.0 || kappa <= 0.0)
    throw std::domain_error("RateConfig: frequencies and linewidths must be positive");
  if (n1 < 0.0 || n2 < 0.0 || mu1 < 0.0 || mu2 < 0.0)
    throw std::domain_error("RateConfig: occupations must be nonnegative");
}

bool RateConfig::in_intended_regime() const {
  const double fmin = std::min(f1, f2);
  const double wmin = std::min(omega1, omega2);
  return gamma < kappa && kappa < fmin && std::max(f1, f2) < wmin;
}

double RateConfig::geometric_mean_f() const { return std::sqrt(f1 * f2); }

double one_phonon_rate(const RateConfig& cfg) {
  cfg.validate();
  const double d = cfg.one_phonon_detuning();
  const double lorentz =
      (cfg.gamma / constants::pi) / (cfg.gamma * cfg.gamma + d * d);
  return 2.0 * constants::pi * cfg.g * cfg.g * lorentz * cfg.mu1 * cfg.n1 *
         (cfg.n2 + 1.0);
}

RateConfig at_two_step_resonance(RateConfig cfg) {
  cfg.omega2 = cfg.omega1 + cfg.f1 + cfg.f2;
  for (int k = 0; k < 4; ++k) {
    const double eps = -cfg.omega1 + cfg.omega2 - cfg.f1 - cfg.f2;
    if (eps == 0.0) return cfg;
    cfg.omega2 -= eps;
  }
  // omega2's grid can be coarser than the residual (ulp ~0.25 rad/s at
  // optical scale); absorb what is left into f2, a sub-ppb shift there.
  cfg.f2 = -cfg.omega1 + cfg.omega2 - cfg.f1;
  return cfg;
}

BracketResult two_step_bracket(const RateConfig& cfg) {
  cfg.validate();
  const std::array<double, 4> dens = {
      -cfg.omega1 + cfg.omega2 - cfg.f1,  // |n1-1, n2+1, mu1-1, mu2>
      cfg.f1,                             // |n1, n2, mu1-1, mu2>
      cfg.f2,                             // |n1, n2, mu1, mu2-1>
      -cfg.omega1 + cfg.omega2 - cfg.f2,  // |n1-1, n2+1, mu1, mu2-1>
  };
  static const char* kPathway[4] = {
      "upconvert-f1-first", "dispersive-f1", "dispersive-f2",
      "upconvert-f2-first"};
  const double fscale = cfg.geometric_mean_f();
  BracketResult out{};
  for (int k = 0; k < 4; ++k) {
    if (std::abs(dens[static_cast<std::size_t>(k)]) < 1e-12 * fscale)
      throw std::domain_error(std::string("two_step_bracket: singular pathway "
                                          "denominator (") +
                              kPathway[k] + ")");
    const double sign = (k == 1 || k == 2) ? -1.0 : 1.0;
    out.pathways[static_cast<std::size_t>(k)] =
        sign / dens[static_cast<std::size_t>(k)];
    out.value += out.pathways[static_cast<std::size_t>(k)];
  }
  return out;
}

RateResult two_phonon_rate(const RateConfig& cfg, Broadening broadening) {
  cfg.validate();
  RateResult out;
  out.unit = "rad/s";
  out.detuning = cfg.two_phonon_detuning();
  const double d = out.detuning;
  const double lorentz = (2.0 * cfg.gamma / constants::pi) /
                         (4.0 * cfg.gamma * cfg.gamma + d * d);
  const double g4 = std::pow(cfg.g, 4);
  const double occ = cfg.mu1 * cfg.mu2 * cfg.n1 * (cfg.n2 + 1.0) *
                     (cfg.n1 + cfg.n2) * (cfg.n1 + cfg.n2);
  double bracket_sq;
  if (broadening == Broadening::bare) {
    out.bracket = two_step_bracket(cfg);
    out.has_bracket = true;
    bracket_sq = out.bracket.value * out.bracket.value;
  } else {
    const double f = cfg.geometric_mean_f();
    bracket_sq = cfg.kappa * cfg.kappa / std::pow(f, 4);
  }
  out.value = 2.0 * constants::pi * g4 * lorentz * occ * bracket_sq;
  return out;
}

double rate_ratio(const RateConfig& cfg, RatioMode mode) {
  cfg.validate();
  const double f = cfg.geometric_mean_f();
  if (mode == RatioMode::paper_approx)
    return 0.5 * cfg.g * cfg.g * cfg.kappa * cfg.kappa / std::pow(f, 4) *
           cfg.n1 * cfg.n1 * cfg.mu2;
  // Exact: both rates evaluated at their own resonance from the implemented
  // formulas.
  RateConfig res = cfg;
  res.omega2 = res.omega1 + res.f1;  // R1 resonance
  const double r1 = one_phonon_rate(res);
  if (r1 <= 0.0)
    throw std::domain_error("rate_ratio: one-phonon rate is zero");
  res.omega2 = res.omega1 + res.f1 + res.f2;  // two-phonon resonance
  const double r2 = two_phonon_rate(res, Broadening::cavity_broadened).value;
  return r2 / r1;
}

double thermal_occupation(double f, double temperature) {
  if (f <= 0.0 || temperature <= 0.0)
    throw std::domain_error("thermal_occupation: f and T must be positive");
  const double x = constants::hbar * f / (constants::k_boltzmann * temperature);
  if (x > 700.0) return std::exp(-x);  // expm1 would overflow
  return 1.0 / std::expm1(x);
}

}  // namespace heliomech
