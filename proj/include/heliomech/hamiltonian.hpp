#ifndef HELIOMECH_HAMILTONIAN_HPP
#define HELIOMECH_HAMILTONIAN_HPP

#include <string>
#include <vector>

#include "heliomech/coupling.hpp"

// Symbolic assembly of the rotating-frame Hamiltonian as a list of
// normally-ordered operator monomials.  Matrices are built only in the
// oracle, at a chosen truncation.

namespace heliomech {

enum class FieldKind { optical, acoustic };
enum class LadderAction { create, annihilate };

struct OperatorFactor {
  FieldKind field;
  LadderAction action;
  int mode;  // label within its field

  bool operator==(const OperatorFactor&) const = default;
};

enum class ProcessType {
  upconversion,
  downconversion,
  dispersive,
  counter_rotating,
  free_evolution,
};

struct HamiltonianTerm {
  std::vector<OperatorFactor> signature;  // left-to-right display order
  double coefficient = 0.0;   // rad/s (hbar = 1 energy units), sign included
  double oscillation = 0.0;   // net rotating-frame frequency, rad/s
  ProcessType process = ProcessType::free_evolution;
  bool resonant = false;

  std::string signature_string() const;  // e.g. "a1+ a2 b1"
};

// a_i^dag a_i and b_l^dag b_l terms with coefficients w_i / f_l.
std::vector<HamiltonianTerm> assemble_free(
    const std::vector<double>& optical_frequencies,
    const std::vector<double>& acoustic_frequencies);

// Per ordered (i, j, l): a_i^dag a_j b_l at w_i - w_j - f_l and
// a_i^dag a_j b_l^dag at w_i - w_j + f_l, coefficient -g'_{ijl}.  The
// resulting set is closed under Hermitian conjugation for the symmetric
// coupling elements produced by real profiles.  Terms at twice the optical
// frequencies are never generated.
std::vector<HamiltonianTerm> assemble_linear(const CouplingTensor& couplings);

// Two-phonon absorption/emission monomials a_i^dag a_j b_l1 b_l2 (+ h.c.
// closure), coefficient -p_{ij l1 l2}.  Off by default in the full assembly.
std::vector<HamiltonianTerm> assemble_quadratic(const CouplingTensor& couplings);

std::vector<HamiltonianTerm> assemble(const CouplingTensor& couplings,
                                      bool include_quadratic = false);

HamiltonianTerm hermitian_conjugate(const HamiltonianTerm& t);

bool closed_under_conjugation(const std::vector<HamiltonianTerm>& terms,
                              double rel_tol = 1e-12);

// Annotates process type and resonance (|oscillation| <= tolerance).
// Default tolerance (negative argument): 1e-3 times the smallest acoustic
// frequency appearing in the term list.
std::vector<HamiltonianTerm> classify_terms(
    const std::vector<HamiltonianTerm>& terms,
    const std::vector<double>& optical_frequencies,
    const std::vector<double>& acoustic_frequencies, double tolerance = -1.0);

std::string to_string(ProcessType p);

}  // namespace heliomech

#endif
