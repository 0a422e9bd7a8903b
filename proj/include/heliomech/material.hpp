#ifndef HELIOMECH_MATERIAL_HPP
#define HELIOMECH_MATERIAL_HPP

#include <utility>

// Liquid-helium material model: density-dependent permittivity, the
// electrostrictive coupling constants g1/g2, the quadratic pressure
// expansion, the acoustic enthalpy potential and the cubic phonon
// nonlinearity coefficient.

namespace heliomech {

struct FluidProperties {
  double alpha_m;     // molar polarizability, m^3/mole
  double molar_mass;  // kg/mole
  double rho0;        // equilibrium mass density, kg/m^3
  double v_s;         // sound speed, m/s
  double gruneisen;   // dimensionless, A2 / (2 rho0 v_s^2)

  // Clausius-Mossotti parameter x(rho) = (4 pi / 3) (alpha_m / m) rho.
  double cm_parameter(double rho) const;

  // Throws std::domain_error on nonpositive fields or x0 >= 1.
  void validate() const;
};

struct MaterialCoefficients {
  double eps_ratio0;           // eps(rho0)/eps0
  double g1;                   // linear electrostrictive coupling
  double g2;                   // quadratic electrostrictive coupling
  double bulk_modulus_coeff;   // rho0 v_s^2, J/m^3
  double A2;                   // second pressure-expansion coefficient, J/m^3
  double cubic_phonon_coeff;   // (A2 - rho0 v_s^2)/6, J/m^3
};

// The dataset printed in the source experimental literature for liquid He-4.
FluidProperties helium_preset();

// Relative permittivity eps(rho)/eps0 = (1 + 2x)/(1 - x).
double dielectric_constant(const FluidProperties& props, double rho);

// Closed-form (g1, g2) from the analytic density derivatives of the
// Clausius-Mossotti permittivity:
//   g1 = 3 x0 / (1 - x0)^2,   g2 = 3 x0^2 / (1 - x0)^3.
std::pair<double, double> optomech_couplings(const FluidProperties& props);

MaterialCoefficients material_coefficients(const FluidProperties& props);

// p - p0 = rho0 v_s^2 rho_tilde + (1/2) A2 rho_tilde^2, Pa.
double pressure_deviation(const MaterialCoefficients& coeffs, double rho_tilde);

// W(rho) = int_{rho0}^{rho} p(rho')/rho'^2 drho', J/kg, with W(rho0) = 0.
// Adaptive quadrature, absolute tolerance 1e-12 J/kg.
double enthalpy_W(const FluidProperties& props, double rho);

}  // namespace heliomech

#endif
