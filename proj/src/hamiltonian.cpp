#include "heliomech/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace heliomech {

namespace {

// Canonical normal order: optical creations, optical annihilations, then the
// acoustic factors likewise.  Distinct-mode factors commute, and conjugation
// of the generated monomials never produces an out-of-order same-mode pair,
// so sorting is a valid operator identity here.
std::vector<OperatorFactor> canonical(std::vector<OperatorFactor> f) {
  std::stable_sort(f.begin(), f.end(),
                   [](const OperatorFactor& a, const OperatorFactor& b) {
                     if (a.field != b.field) return a.field < b.field;
                     if (a.action != b.action) return a.action < b.action;
                     return a.mode < b.mode;
                   });
  return f;
}

bool same_signature(const std::vector<OperatorFactor>& a,
                    const std::vector<OperatorFactor>& b) {
  return canonical(a) == canonical(b);
}

}  // namespace

std::string HamiltonianTerm::signature_string() const {
  std::string s;
  for (const auto& f : signature) {
    if (!s.empty()) s += ' ';
    s += (f.field == FieldKind::optical) ? 'a' : 'b';
    s += std::to_string(f.mode + 1);
    if (f.action == LadderAction::create) s += '+';
  }
  return s;
}

std::vector<HamiltonianTerm> assemble_free(
    const std::vector<double>& optical_frequencies,
    const std::vector<double>& acoustic_frequencies) {
  std::vector<HamiltonianTerm> terms;
  for (int i = 0; i < static_cast<int>(optical_frequencies.size()); ++i)
    terms.push_back({{{FieldKind::optical, LadderAction::create, i},
                      {FieldKind::optical, LadderAction::annihilate, i}},
                     optical_frequencies[static_cast<std::size_t>(i)], 0.0,
                     ProcessType::free_evolution, false});
  for (int l = 0; l < static_cast<int>(acoustic_frequencies.size()); ++l)
    terms.push_back({{{FieldKind::acoustic, LadderAction::create, l},
                      {FieldKind::acoustic, LadderAction::annihilate, l}},
                     acoustic_frequencies[static_cast<std::size_t>(l)], 0.0,
                     ProcessType::free_evolution, false});
  return terms;
}

std::vector<HamiltonianTerm> assemble_linear(const CouplingTensor& couplings) {
  std::vector<HamiltonianTerm> terms;
  const auto& wo = couplings.optical_frequencies;
  const auto& fa = couplings.acoustic_frequencies;
  for (int i = 0; i < static_cast<int>(wo.size()); ++i)
    for (int j = 0; j < static_cast<int>(wo.size()); ++j)
      for (int l = 0; l < static_cast<int>(fa.size()); ++l) {
        const auto it = couplings.linear.find({i, j, l});
        if (it == couplings.linear.end())
          throw std::invalid_argument("assemble_linear: missing coupling element");
        const double g = it->second;
        const double dw = wo[static_cast<std::size_t>(i)] -
                          wo[static_cast<std::size_t>(j)];
        const double f = fa[static_cast<std::size_t>(l)];
        terms.push_back({{{FieldKind::optical, LadderAction::create, i},
                          {FieldKind::optical, LadderAction::annihilate, j},
                          {FieldKind::acoustic, LadderAction::annihilate, l}},
                         -g, dw - f, ProcessType::dispersive, false});
        terms.push_back({{{FieldKind::optical, LadderAction::create, i},
                          {FieldKind::optical, LadderAction::annihilate, j},
                          {FieldKind::acoustic, LadderAction::create, l}},
                         -g, dw + f, ProcessType::dispersive, false});
      }
  return terms;
}

std::vector<HamiltonianTerm> assemble_quadratic(const CouplingTensor& couplings) {
  std::vector<HamiltonianTerm> terms;
  const auto& wo = couplings.optical_frequencies;
  const auto& fa = couplings.acoustic_frequencies;
  for (const auto& [key, p] : couplings.quadratic) {
    const auto [i, j, l1, l2] = key;
    const double dw = wo[static_cast<std::size_t>(i)] -
                      wo[static_cast<std::size_t>(j)];
    const double fs = fa[static_cast<std::size_t>(l1)] +
                      fa[static_cast<std::size_t>(l2)];
    terms.push_back({{{FieldKind::optical, LadderAction::create, i},
                      {FieldKind::optical, LadderAction::annihilate, j},
                      {FieldKind::acoustic, LadderAction::annihilate, l1},
                      {FieldKind::acoustic, LadderAction::annihilate, l2}},
                     -p, dw - fs, ProcessType::dispersive, false});
    terms.push_back({{{FieldKind::optical, LadderAction::create, i},
                      {FieldKind::optical, LadderAction::annihilate, j},
                      {FieldKind::acoustic, LadderAction::create, l1},
                      {FieldKind::acoustic, LadderAction::create, l2}},
                     -p, dw + fs, ProcessType::dispersive, false});
  }
  return terms;
}

std::vector<HamiltonianTerm> assemble(const CouplingTensor& couplings,
                                      bool include_quadratic) {
  auto terms = assemble_free(couplings.optical_frequencies,
                             couplings.acoustic_frequencies);
  auto lin = assemble_linear(couplings);
  terms.insert(terms.end(), lin.begin(), lin.end());
  if (include_quadratic) {
    auto quad = assemble_quadratic(couplings);
    terms.insert(terms.end(), quad.begin(), quad.end());
  }
  return classify_terms(terms, couplings.optical_frequencies,
                        couplings.acoustic_frequencies);
}

HamiltonianTerm hermitian_conjugate(const HamiltonianTerm& t) {
  HamiltonianTerm c = t;
  std::reverse(c.signature.begin(), c.signature.end());
  for (auto& f : c.signature)
    f.action = (f.action == LadderAction::create) ? LadderAction::annihilate
                                                  : LadderAction::create;
  c.oscillation = -t.oscillation;
  return c;
}

bool closed_under_conjugation(const std::vector<HamiltonianTerm>& terms,
                              double rel_tol) {
  for (const auto& t : terms) {
    const HamiltonianTerm c = hermitian_conjugate(t);
    const bool found = std::any_of(
        terms.begin(), terms.end(), [&](const HamiltonianTerm& u) {
          return same_signature(u.signature, c.signature) &&
                 std::abs(u.coefficient - c.coefficient) <=
                     rel_tol * std::max(std::abs(c.coefficient), 1e-300) &&
                 std::abs(u.oscillation - c.oscillation) <=
                     rel_tol * std::max(std::abs(c.oscillation), 1.0);
        });
    if (!found) return false;
  }
  return true;
}

std::vector<HamiltonianTerm> classify_terms(
    const std::vector<HamiltonianTerm>& terms,
    const std::vector<double>& optical_frequencies,
    const std::vector<double>& acoustic_frequencies, double tolerance) {
  if (tolerance < 0.0) {
    double fmin = std::numeric_limits<double>::infinity();
    for (double f : acoustic_frequencies) fmin = std::min(fmin, f);
    tolerance = std::isfinite(fmin) ? 1e-3 * fmin : 0.0;
  }
  std::vector<HamiltonianTerm> out = terms;
  for (auto& t : out) {
    t.resonant = std::abs(t.oscillation) <= tolerance;

    int opt_create = -1, opt_annih = -1;
    int ph_create = 0, ph_annih = 0;
    for (const auto& f : t.signature) {
      if (f.field == FieldKind::optical) {
        (f.action == LadderAction::create ? opt_create : opt_annih) = f.mode;
      } else {
        (f.action == LadderAction::create ? ph_create : ph_annih) += 1;
      }
    }
    if (ph_create + ph_annih == 0 ||
        (opt_create == opt_annih && ph_create == 1 && ph_annih == 1)) {
      t.process = ProcessType::free_evolution;
      continue;
    }
    if (opt_create == opt_annih) {
      t.process = ProcessType::dispersive;
      continue;
    }
    const double dw = optical_frequencies[static_cast<std::size_t>(opt_create)] -
                      optical_frequencies[static_cast<std::size_t>(opt_annih)];
    if (ph_annih > 0 && ph_create == 0)
      t.process = dw > 0.0 ? ProcessType::upconversion
                           : ProcessType::counter_rotating;
    else if (ph_create > 0 && ph_annih == 0)
      t.process = dw < 0.0 ? ProcessType::downconversion
                           : ProcessType::counter_rotating;
    else
      t.process = ProcessType::counter_rotating;
  }
  return out;
}

std::string to_string(ProcessType p) {
  switch (p) {
    case ProcessType::upconversion: return "upconversion";
    case ProcessType::downconversion: return "downconversion";
    case ProcessType::dispersive: return "dispersive";
    case ProcessType::counter_rotating: return "counter-rotating";
    case ProcessType::free_evolution: return "free";
  }
  return "?";
}

}  // namespace heliomech
