#ifndef HELIOMECH_COUPLING_HPP
#define HELIOMECH_COUPLING_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "heliomech/material.hpp"
#include "heliomech/modes.hpp"

// Quantization scale factors and the linear/quadratic optomechanical
// coupling elements, by overlap quadrature and by the closed-form
// uniform-mode estimates.

namespace heliomech {

// Electric-field amplitude per photon, sqrt(hbar w / 2 eps0).
double photon_scale(double omega);

// Density-deviation amplitude per phonon, sqrt(hbar f / 2 rho0 v_s^2).
double phonon_scale(const MaterialCoefficients& mat, double f);

// g'_{ijl} = sqrt(hbar f_l w_i w_j / 8 rho0 v_s^2) g1
//            * polarization * int psi_l (u_i . u_j) d^3r, rad/s.
double linear_coupling_element(const MaterialCoefficients& mat,
                               const ModeFunction& u_i, const ModeFunction& u_j,
                               const ModeFunction& psi_l,
                               double polarization = 1.0);

// Uniform-mode closed form, sqrt(hbar f / 8 rho0 v_s^2) w g1 / sqrt(V).
double linear_coupling_uniform_estimate(const MaterialCoefficients& mat,
                                        double omega, double f, double volume);

// p_{ij l1 l2}; the prefactor sqrt(f_l1/8) sqrt(f_l2/2) is symmetric in
// (f_l1, f_l2) once multiplied out, and the integrand is symmetric, so the
// element is l1<->l2 symmetric as implemented.
double quadratic_coupling_element(const MaterialCoefficients& mat,
                                  const ModeFunction& u_i,
                                  const ModeFunction& u_j,
                                  const ModeFunction& psi_l1,
                                  const ModeFunction& psi_l2,
                                  double polarization = 1.0);

double quadratic_coupling_uniform_estimate(const MaterialCoefficients& mat,
                                           double omega, double f1, double f2,
                                           double volume);

// Ratio p/g' for identical uniform modes: sqrt(hbar f / 2 rho0 v_s^2 V) g2/g1.
double quadratic_suppression_ratio(const MaterialCoefficients& mat, double f,
                                   double volume);

struct CouplingTensor {
  std::map<std::array<int, 3>, double> linear;      // (i, j, l) -> g', rad/s
  std::map<std::array<int, 4>, double> quadratic;   // (i, j, l1, l2) -> p
  std::vector<double> optical_frequencies;          // rad/s
  std::vector<double> acoustic_frequencies;         // rad/s
  MaterialCoefficients material{};
};

CouplingTensor build_coupling_tensor(const MaterialCoefficients& mat,
                                     const std::vector<ModeFunction>& optical,
                                     const std::vector<ModeFunction>& acoustic,
                                     double polarization = 1.0,
                                     bool include_quadratic = false);

}  // namespace heliomech

#endif
