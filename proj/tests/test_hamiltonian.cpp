#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "heliomech/hamiltonian.hpp"

using namespace heliomech;

namespace {

// Coupling tensor with every linear element equal to g, desk-scale numbers.
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

std::set<std::string> signatures(const std::vector<HamiltonianTerm>& terms) {
  std::set<std::string> s;
  for (const auto& t : terms) s.insert(t.signature_string());
  return s;
}

}  // namespace

TEST_CASE("two optical modes and one phonon produce the eight golden monomials") {
  const double g = 1.5;
  const CouplingTensor t = flat_tensor({100.0, 103.0}, {3.0}, g);
  const auto terms = assemble_linear(t);
  REQUIRE(terms.size() == 8);
  for (const auto& term : terms) CHECK(term.coefficient == -g);
  const std::set<std::string> expected = {
      "a1+ a1 b1", "a1+ a1 b1+", "a1+ a2 b1", "a1+ a2 b1+",
      "a2+ a1 b1", "a2+ a1 b1+", "a2+ a2 b1", "a2+ a2 b1+",
  };
  CHECK(signatures(terms) == expected);
  CHECK(closed_under_conjugation(terms));
}

TEST_CASE("term count scales as 2 N^2 M and stays conjugation closed") {
  const CouplingTensor t =
      flat_tensor({100.0, 101.0, 105.0}, {3.0, 5.0}, 0.01);
  const auto lin = assemble_linear(t);
  CHECK(lin.size() == 2 * 9 * 2);
  CHECK(closed_under_conjugation(lin));
  const auto all = assemble(t);
  CHECK(all.size() == 3 + 2 + 36);  // free terms plus interactions
  CHECK(closed_under_conjugation(all));
}

TEST_CASE("free terms carry the bare frequencies and no oscillation") {
  const auto terms = assemble_free({100.0, 103.0}, {3.0});
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].signature_string() == "a1+ a1");
  CHECK(terms[0].coefficient == 100.0);
  CHECK(terms[2].signature_string() == "b1+ b1");
  CHECK(terms[2].coefficient == 3.0);
  for (const auto& t : terms) {
    CHECK(t.oscillation == 0.0);
    CHECK(t.process == ProcessType::free_evolution);
  }
}

TEST_CASE("oscillation frequencies follow the rotating-frame bookkeeping") {
  const CouplingTensor t = flat_tensor({100.0, 103.0}, {3.0}, 0.01);
  for (const auto& term : assemble_linear(t)) {
    const std::string s = term.signature_string();
    if (s == "a2+ a1 b1") CHECK(term.oscillation == 0.0);     // 103-100-3
    if (s == "a1+ a2 b1+") CHECK(term.oscillation == 0.0);    // 100-103+3
    if (s == "a2+ a1 b1+") CHECK(term.oscillation == 6.0);
    if (s == "a1+ a1 b1") CHECK(term.oscillation == -3.0);
  }
}

TEST_CASE("classification separates the process types at one-phonon resonance") {
  const CouplingTensor t = flat_tensor({100.0, 103.0}, {3.0}, 0.01);
  const auto terms = assemble(t);
  for (const auto& term : terms) {
    const std::string s = term.signature_string();
    if (s == "a2+ a1 b1") {
      CHECK(term.process == ProcessType::upconversion);
      CHECK(term.resonant);
    } else if (s == "a1+ a2 b1+") {
      CHECK(term.process == ProcessType::downconversion);
      CHECK(term.resonant);
    } else if (s == "a1+ a1 b1" || s == "a1+ a1 b1+" || s == "a2+ a2 b1" ||
               s == "a2+ a2 b1+") {
      CHECK(term.process == ProcessType::dispersive);
      CHECK_FALSE(term.resonant);
    } else if (s == "a2+ a1 b1+" || s == "a1+ a2 b1") {
      CHECK(term.process == ProcessType::counter_rotating);
      CHECK_FALSE(term.resonant);
    }
  }
}

TEST_CASE("two-step detuned configuration has no resonant interaction term") {
  // omega2 = omega1 + f1 + f2: nothing matches at first order, which is what
  // makes the second-order pathway interference observable.
  const CouplingTensor t = flat_tensor({100.0, 108.0}, {3.0, 5.0}, 0.01);
  for (const auto& term : assemble(t))
    if (term.process != ProcessType::free_evolution) CHECK_FALSE(term.resonant);
}

TEST_CASE("resonance tolerance is explicit and defaults to 1e-3 of min f") {
  const CouplingTensor t = flat_tensor({100.0, 103.001}, {3.0}, 0.01);
  const auto by_default = assemble(t);
  bool any_resonant = false;
  for (const auto& term : by_default) any_resonant |= term.resonant;
  CHECK(any_resonant);  // 1e-3 offset sits exactly at the 1e-3*f = 3e-3 gate

  const auto tight = classify_terms(by_default, t.optical_frequencies,
                                    t.acoustic_frequencies, 1e-6);
  for (const auto& term : tight)
    if (term.process != ProcessType::free_evolution) CHECK_FALSE(term.resonant);
}

TEST_CASE("hermitian conjugation is an involution") {
  const CouplingTensor t = flat_tensor({100.0, 103.0}, {3.0}, 0.7);
  for (const auto& term : assemble_linear(t)) {
    const HamiltonianTerm back = hermitian_conjugate(hermitian_conjugate(term));
    CHECK(back.signature == term.signature);
    CHECK(back.coefficient == term.coefficient);
    CHECK(back.oscillation == term.oscillation);
  }
}

TEST_CASE("quadratic assembly emits two-phonon monomials") {
  CouplingTensor t = flat_tensor({100.0, 108.0}, {3.0, 5.0}, 0.01);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l1 = 0; l1 < 2; ++l1)
        for (int l2 = 0; l2 < 2; ++l2) t.quadratic[{i, j, l1, l2}] = 2e-4;
  const auto quad = assemble_quadratic(t);
  CHECK(quad.size() == 2 * t.quadratic.size());
  CHECK(closed_under_conjugation(quad));
  bool found_resonant_pair = false;
  for (const auto& term : quad)
    if (term.signature_string() == "a2+ a1 b1 b2") {
      CHECK(term.oscillation == 0.0);  // 108 - 100 - 3 - 5
      found_resonant_pair = true;
    }
  CHECK(found_resonant_pair);
}
