#ifndef HELIOMECH_RATES_HPP
#define HELIOMECH_RATES_HPP

#include <array>
#include <string>

// Golden-rule transition rates: one-phonon anti-Stokes rate R1, the two-step
// two-phonon bracket with per-pathway breakdown, the bare and
// cavity-broadened two-phonon rates R2, their ratio, and thermal occupation.
// All frequencies and linewidths are angular (rad/s); gamma and kappa are
// half widths at half maximum.

namespace heliomech {

struct RateConfig {
  double g;               // linear coupling, rad/s
  double omega1, omega2;  // optical angular frequencies, rad/s
  double f1, f2;          // acoustic angular frequencies, rad/s
  double gamma;           // phonon linewidth, rad/s
  double kappa;           // cavity linewidth, rad/s
  double n1, n2;          // photon occupations
  double mu1, mu2;        // phonon occupations

  void validate() const;  // throws std::domain_error
  // True in the intended hierarchy gamma << kappa << f1,f2 << omega1,omega2.
  bool in_intended_regime() const;

  double one_phonon_detuning() const { return omega1 - omega2 + f1; }
  double two_phonon_detuning() const { return omega1 - omega2 + f1 + f2; }
  double geometric_mean_f() const;
};

struct BracketResult {
  double value;                    // 1/(rad/s)
  std::array<double, 4> pathways;  // addends, intermediate-state order
};

struct RateResult {
  double value = 0.0;
  std::string unit;
  double detuning = 0.0;  // rad/s
  BracketResult bracket{};    // populated for the bare two-phonon rate
  bool has_bracket = false;
};

enum class Broadening { bare, cavity_broadened };
enum class RatioMode { exact, paper_approx };

// R1 = 2 pi g^2 (gamma/pi) / [gamma^2 + (w1 - w2 + f1)^2] mu1 n1 (n2+1).
double one_phonon_rate(const RateConfig& cfg);

// Returns cfg with omega2 adjusted so the two-step detuning evaluates to
// exactly zero in double arithmetic (a plain w1 + f1 + f2 sum leaves an
// ulp-scale residual that acts as a real detuning at optical frequencies).
RateConfig at_two_step_resonance(RateConfig cfg);

// 1/(-w1+w2-f1) - 1/f1 - 1/f2 + 1/(-w1+w2-f2), with the four addends.
// Throws std::domain_error if any denominator is within 1e-12 * f of zero.
BracketResult two_step_bracket(const RateConfig& cfg);

// Bare: 2 pi g^4 (2 gamma/pi)/[(2 gamma)^2 + D^2] mu1 mu2 n1 (n2+1)
//       (n1+n2)^2 |bracket|^2, with D the two-phonon detuning.
// Cavity-broadened: |bracket|^2 replaced by kappa^2 / f^4, f = sqrt(f1 f2).
RateResult two_phonon_rate(const RateConfig& cfg, Broadening broadening);

// exact: resonant broadened R2 / resonant R1 = (g^2/2)(kappa^2/f^4)(n1+n2)^2 mu2.
// paper_approx: (g^2 kappa^2 / 2 f^4) n1^2 mu2.
double rate_ratio(const RateConfig& cfg, RatioMode mode);

// Bose-Einstein mean occupation, overflow safe for hbar f >> kB T.
double thermal_occupation(double f, double temperature);

}  // namespace heliomech

#endif
