#include "heliomech/material.hpp"

#include <cmath>
#include <stdexcept>

#include "heliomech/constants.hpp"
#include "heliomech/quadrature.hpp"

namespace heliomech {

double FluidProperties::cm_parameter(double rho) const {
  return (4.0 * constants::pi / 3.0) * (alpha_m / molar_mass) * rho;
}

void FluidProperties::validate() const {
  if (alpha_m <= 0.0 || molar_mass <= 0.0 || rho0 <= 0.0 || v_s <= 0.0 ||
      gruneisen <= 0.0)
    throw std::domain_error("FluidProperties: all fields must be positive");
  const double x0 = cm_parameter(rho0);
  if (x0 >= 1.0)
    throw std::domain_error(
        "FluidProperties: Clausius-Mossotti parameter at rho0 reaches the "
        "permittivity pole (x0 >= 1)");
}

FluidProperties helium_preset() {
  return FluidProperties{
      .alpha_m = 1.23296e-7,     // m^3/mole
      .molar_mass = 4.0026e-3,   // kg/mole
      .rho0 = 145.1397,          // kg/m^3
      .v_s = 238.0,              // m/s
      .gruneisen = 2.84,
  };
}

double dielectric_constant(const FluidProperties& props, double rho) {
  if (rho < 0.0)
    throw std::domain_error("dielectric_constant: rho must be nonnegative");
  const double x = props.cm_parameter(rho);
  if (x >= 1.0)
    throw std::domain_error("dielectric_constant: permittivity pole (x >= 1)");
  return (1.0 + 2.0 * x) / (1.0 - x);
}

std::pair<double, double> optomech_couplings(const FluidProperties& props) {
  const double x0 = props.cm_parameter(props.rho0);
  if (x0 >= 1.0)
    throw std::domain_error("optomech_couplings: permittivity pole (x0 >= 1)");
  const double om = 1.0 - x0;
  const double g1 = 3.0 * x0 / (om * om);
  const double g2 = 3.0 * x0 * x0 / (om * om * om);
  return {g1, g2};
}

MaterialCoefficients material_coefficients(const FluidProperties& props) {
  props.validate();
  const auto [g1, g2] = optomech_couplings(props);
  const double bulk = props.rho0 * props.v_s * props.v_s;
  const double a2 = 2.0 * props.gruneisen * bulk;
  return MaterialCoefficients{
      .eps_ratio0 = dielectric_constant(props, props.rho0),
      .g1 = g1,
      .g2 = g2,
      .bulk_modulus_coeff = bulk,
      .A2 = a2,
      .cubic_phonon_coeff = (a2 - bulk) / 6.0,
  };
}

double pressure_deviation(const MaterialCoefficients& coeffs, double rho_tilde) {
  if (std::abs(rho_tilde) >= 1.0)
    throw std::domain_error("pressure_deviation: |rho_tilde| must be < 1");
  return coeffs.bulk_modulus_coeff * rho_tilde +
         0.5 * coeffs.A2 * rho_tilde * rho_tilde;
}

double enthalpy_W(const FluidProperties& props, double rho) {
  if (rho <= 0.0) throw std::domain_error("enthalpy_W: rho must be positive");
  const MaterialCoefficients coeffs = material_coefficients(props);
  const double rho0 = props.rho0;
  const auto integrand = [&](double r) {
    return pressure_deviation(coeffs, (r - rho0) / rho0) / (r * r);
  };
  const QuadratureResult q =
      integrate_adaptive(integrand, rho0, rho, 1e-12);
  if (!q.converged)
    throw std::runtime_error("enthalpy_W: quadrature did not converge; "
                             "achieved error " + std::to_string(q.abs_error) +
                             " J/kg");
  return q.value;
}

}  // namespace heliomech
