#include "heliomech/coupling.hpp"

#include <cmath>
#include <stdexcept>

#include "heliomech/constants.hpp"
#include "heliomech/quadrature.hpp"

namespace heliomech {

namespace {

void check_domains(const ModeFunction& a, const ModeFunction& b) {
  if (!a.same_domain(b))
    throw std::invalid_argument("coupling: modes have mismatched domains");
}

// Integrals run over the acoustic volume (area factor from the acoustic
// mode); optical modes extending beyond it are a listed modeling assumption.
double triple_overlap(const ModeFunction& psi, const ModeFunction& u_i,
                      const ModeFunction& u_j) {
  check_domains(psi, u_i);
  check_domains(psi, u_j);
  if (psi.geometry == ModeGeometry::uniform &&
      u_i.geometry == ModeGeometry::uniform &&
      u_j.geometry == ModeGeometry::uniform)
    return psi.area * psi.length * psi.profile(0.0) * u_i.profile(0.0) *
           u_j.profile(0.0);
  return psi.area *
         integrate_relative([&](double z) { return psi.profile(z) *
                                                   u_i.profile(z) *
                                                   u_j.profile(z); },
                            0.0, psi.length, 1e-12);
}

double quad_overlap(const ModeFunction& psi1, const ModeFunction& psi2,
                    const ModeFunction& u_i, const ModeFunction& u_j) {
  check_domains(psi1, psi2);
  check_domains(psi1, u_i);
  check_domains(psi1, u_j);
  if (psi1.geometry == ModeGeometry::uniform &&
      psi2.geometry == ModeGeometry::uniform &&
      u_i.geometry == ModeGeometry::uniform &&
      u_j.geometry == ModeGeometry::uniform)
    return psi1.area * psi1.length * psi1.profile(0.0) * psi2.profile(0.0) *
           u_i.profile(0.0) * u_j.profile(0.0);
  return psi1.area *
         integrate_relative([&](double z) { return psi1.profile(z) *
                                                   psi2.profile(z) *
                                                   u_i.profile(z) *
                                                   u_j.profile(z); },
                            0.0, psi1.length, 1e-12);
}

}  // namespace

double photon_scale(double omega) {
  if (omega < 0.0) throw std::domain_error("photon_scale: omega >= 0 required");
  return std::sqrt(constants::hbar * omega / (2.0 * constants::eps0));
}

double phonon_scale(const MaterialCoefficients& mat, double f) {
  if (f < 0.0) throw std::domain_error("phonon_scale: f >= 0 required");
  return std::sqrt(constants::hbar * f / (2.0 * mat.bulk_modulus_coeff));
}

double linear_coupling_element(const MaterialCoefficients& mat,
                               const ModeFunction& u_i, const ModeFunction& u_j,
                               const ModeFunction& psi_l, double polarization) {
  if (u_i.frequency <= 0.0 || u_j.frequency <= 0.0 || psi_l.frequency <= 0.0)
    throw std::domain_error("linear_coupling_element: frequencies must be positive");
  const double pref = std::sqrt(constants::hbar * psi_l.frequency *
                                u_i.frequency * u_j.frequency /
                                (8.0 * mat.bulk_modulus_coeff));
  return pref * mat.g1 * polarization * triple_overlap(psi_l, u_i, u_j);
}

double linear_coupling_uniform_estimate(const MaterialCoefficients& mat,
                                        double omega, double f, double volume) {
  return std::sqrt(constants::hbar * f / (8.0 * mat.bulk_modulus_coeff)) *
         omega * mat.g1 / std::sqrt(volume);
}

double quadratic_coupling_element(const MaterialCoefficients& mat,
                                  const ModeFunction& u_i,
                                  const ModeFunction& u_j,
                                  const ModeFunction& psi_l1,
                                  const ModeFunction& psi_l2,
                                  double polarization) {
  const double f1 = psi_l1.frequency;
  const double f2 = psi_l2.frequency;
  if (u_i.frequency <= 0.0 || u_j.frequency <= 0.0 || f1 <= 0.0 || f2 <= 0.0)
    throw std::domain_error("quadratic_coupling_element: frequencies must be positive");
  const double bulk = mat.bulk_modulus_coeff;
  // Average of the two phonon orderings; the prefactors coincide since
  // sqrt(f1/8) sqrt(f2/2) = sqrt(f1 f2)/4 either way.
  const double pref =
      0.5 * (std::sqrt(constants::hbar * f1 * u_i.frequency * u_j.frequency /
                       (8.0 * bulk)) * std::sqrt(constants::hbar * f2 / (2.0 * bulk)) +
             std::sqrt(constants::hbar * f2 * u_i.frequency * u_j.frequency /
                       (8.0 * bulk)) * std::sqrt(constants::hbar * f1 / (2.0 * bulk)));
  return pref * mat.g2 * polarization * quad_overlap(psi_l1, psi_l2, u_i, u_j);
}

double quadratic_coupling_uniform_estimate(const MaterialCoefficients& mat,
                                           double omega, double f1, double f2,
                                           double volume) {
  const double bulk = mat.bulk_modulus_coeff;
  return std::sqrt(constants::hbar * f1 / (8.0 * bulk * volume)) *
         std::sqrt(constants::hbar * f2 / (2.0 * bulk * volume)) * omega *
         mat.g2;
}

double quadratic_suppression_ratio(const MaterialCoefficients& mat, double f,
                                   double volume) {
  return std::sqrt(constants::hbar * f /
                   (2.0 * mat.bulk_modulus_coeff * volume)) *
         (mat.g2 / mat.g1);
}

CouplingTensor build_coupling_tensor(const MaterialCoefficients& mat,
                                     const std::vector<ModeFunction>& optical,
                                     const std::vector<ModeFunction>& acoustic,
                                     double polarization,
                                     bool include_quadratic) {
  CouplingTensor t;
  t.material = mat;
  for (const auto& u : optical) t.optical_frequencies.push_back(u.frequency);
  for (const auto& p : acoustic) t.acoustic_frequencies.push_back(p.frequency);
  const int no = static_cast<int>(optical.size());
  const int na = static_cast<int>(acoustic.size());
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j)
      for (int l = 0; l < na; ++l)
        t.linear[{i, j, l}] = linear_coupling_element(
            mat, optical[static_cast<std::size_t>(i)],
            optical[static_cast<std::size_t>(j)],
            acoustic[static_cast<std::size_t>(l)], polarization);
  if (include_quadratic)
    for (int i = 0; i < no; ++i)
      for (int j = 0; j < no; ++j)
        for (int l1 = 0; l1 < na; ++l1)
          for (int l2 = 0; l2 < na; ++l2)
            t.quadratic[{i, j, l1, l2}] = quadratic_coupling_element(
                mat, optical[static_cast<std::size_t>(i)],
                optical[static_cast<std::size_t>(j)],
                acoustic[static_cast<std::size_t>(l1)],
                acoustic[static_cast<std::size_t>(l2)], polarization);
  return t;
}

}  // namespace heliomech
