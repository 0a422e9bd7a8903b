#include "heliomech/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "heliomech/config.hpp"
#include "heliomech/constants.hpp"
#include "heliomech/coupling.hpp"
#include "heliomech/hamiltonian.hpp"
#include "heliomech/oracle.hpp"
#include "heliomech/rates.hpp"

namespace heliomech {

namespace {

using nlohmann::ordered_json;

// Round to the configured number of significant digits so that identical
// configs produce byte-identical output across platforms.
double round_sig(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return std::strtod(buf, nullptr);
}

ordered_json quantity(double v, const char* unit, int precision) {
  return ordered_json{{"value", round_sig(v, precision)}, {"unit", unit}};
}

void emit_text(const std::string& text, const std::string& path,
               std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << text;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move output into place at " + path);
}

void emit_json(const ordered_json& doc, const OutputConfig& o,
               std::ostream& out) {
  emit_text(doc.dump(2) + "\n", o.path, out);
}

ordered_json material_doc(const RunConfig& cfg) {
  const int p = cfg.output.precision;
  const MaterialCoefficients m = material_coefficients(cfg.fluid);
  ordered_json doc;
  doc["schema"] = 1;
  doc["fluid"] = {
      {"alpha_m", quantity(cfg.fluid.alpha_m, "m^3/mole", p)},
      {"molar_mass", quantity(cfg.fluid.molar_mass, "kg/mole", p)},
      {"rho0", quantity(cfg.fluid.rho0, "kg/m^3", p)},
      {"v_s", quantity(cfg.fluid.v_s, "m/s", p)},
      {"gruneisen", quantity(cfg.fluid.gruneisen, "dimensionless", p)},
  };
  doc["coefficients"] = {
      {"eps_ratio0", quantity(m.eps_ratio0, "dimensionless", p)},
      {"g1", quantity(m.g1, "dimensionless", p)},
      {"g2", quantity(m.g2, "dimensionless", p)},
      {"bulk_modulus_coeff", quantity(m.bulk_modulus_coeff, "J/m^3", p)},
      {"A2", quantity(m.A2, "J/m^3", p)},
      {"cubic_phonon_coeff", quantity(m.cubic_phonon_coeff, "J/m^3", p)},
  };
  return doc;
}

ordered_json coupling_doc(const RunConfig& cfg) {
  const int p = cfg.output.precision;
  const MaterialCoefficients mat = material_coefficients(cfg.fluid);
  const auto optical = cfg.optical_modes();
  const auto acoustic = cfg.acoustic_modes();
  if (optical.empty() || acoustic.empty())
    throw ConfigError("coupling: need at least one optical and one acoustic mode");
  const CouplingTensor t = build_coupling_tensor(mat, optical, acoustic,
                                                 cfg.polarization, cfg.quadratic);
  ordered_json doc;
  doc["schema"] = 1;
  ordered_json linear = ordered_json::array();
  for (const auto& [key, g] : t.linear)
    linear.push_back({{"i", key[0]}, {"j", key[1]}, {"l", key[2]},
                      {"g_prime", quantity(g, "rad/s", p)}});
  doc["linear"] = linear;
  if (cfg.quadratic) {
    ordered_json quad = ordered_json::array();
    for (const auto& [key, q] : t.quadratic)
      quad.push_back({{"i", key[0]}, {"j", key[1]}, {"l1", key[2]},
                      {"l2", key[3]}, {"p", quantity(q, "rad/s", p)}});
    doc["quadratic"] = quad;
  }
  // Closed-form uniform estimates from the first optical/acoustic pair.
  const double omega = optical.front().frequency;
  const double f = acoustic.front().frequency;
  const double volume = acoustic.front().volume;
  const double g_est = linear_coupling_uniform_estimate(mat, omega, f, volume);
  doc["uniform_estimate"] = {
      {"g_prime", quantity(g_est, "rad/s", p)},
      {"g_prime_over_g1", quantity(g_est / mat.g1, "rad/s", p)},
      {"p", quantity(quadratic_coupling_uniform_estimate(mat, omega, f, f, volume),
                     "rad/s", p)},
      {"suppression_ratio",
       quantity(quadratic_suppression_ratio(mat, f, volume), "dimensionless", p)},
  };
  return doc;
}

ordered_json terms_json(const std::vector<HamiltonianTerm>& terms, int p) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : terms)
    arr.push_back({{"signature", t.signature_string()},
                   {"coefficient", quantity(t.coefficient, "rad/s", p)},
                   {"oscillation", quantity(t.oscillation, "rad/s", p)},
                   {"process", to_string(t.process)},
                   {"resonant", t.resonant}});
  return arr;
}

ordered_json hamiltonian_doc(const RunConfig& cfg) {
  const MaterialCoefficients mat = material_coefficients(cfg.fluid);
  const auto optical = cfg.optical_modes();
  const auto acoustic = cfg.acoustic_modes();
  if (optical.empty() || acoustic.empty())
    throw ConfigError("hamiltonian: need at least one optical and one acoustic mode");
  const CouplingTensor t = build_coupling_tensor(mat, optical, acoustic,
                                                 cfg.polarization, cfg.quadratic);
  ordered_json doc;
  doc["schema"] = 1;
  doc["terms"] = terms_json(assemble(t, cfg.quadratic), cfg.output.precision);
  return doc;
}

ordered_json rate_doc_for(const RateConfig& rc, int p) {
  ordered_json doc;
  doc["schema"] = 1;
  doc["R1"] = quantity(one_phonon_rate(rc), "rad/s", p);
  const RateResult bare = two_phonon_rate(rc, Broadening::bare);
  ordered_json pathways = ordered_json::array();
  for (double v : bare.bracket.pathways)
    pathways.push_back(quantity(v, "s/rad", p));
  doc["bracket"] = {{"value", quantity(bare.bracket.value, "s/rad", p)},
                    {"pathways", pathways}};
  doc["R2_bare"] = quantity(bare.value, "rad/s", p);
  doc["R2_broadened"] =
      quantity(two_phonon_rate(rc, Broadening::cavity_broadened).value, "rad/s", p);
  doc["detuning_one_phonon"] = quantity(rc.one_phonon_detuning(), "rad/s", p);
  doc["detuning_two_phonon"] = quantity(rc.two_phonon_detuning(), "rad/s", p);
  doc["f_geometric_mean"] = quantity(rc.geometric_mean_f(), "rad/s", p);
  try {
    doc["ratio_exact"] =
        quantity(rate_ratio(rc, RatioMode::exact), "dimensionless", p);
  } catch (const std::domain_error&) {
    doc["ratio_exact"] = nullptr;  // undefined when the one-phonon rate vanishes
  }
  doc["ratio_paper_approx"] =
      quantity(rate_ratio(rc, RatioMode::paper_approx), "dimensionless", p);
  doc["in_intended_regime"] = rc.in_intended_regime();
  return doc;
}

RateConfig rates_or_preset(const RunConfig& cfg) {
  return cfg.rates ? *cfg.rates : rates_preset("paper-rates");
}

std::string csv_cell(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string sweep_csv(const RunConfig& cfg) {
  if (!cfg.sweep) throw ConfigError("sweep: config has no sweep section");
  const SweepConfig& s = *cfg.sweep;
  const RateConfig base = rates_or_preset(cfg);
  const int p = cfg.output.precision;
  std::ostringstream os;
  os << "detuning_rad_s,R1,R2_bare,R2_broadened,ratio\r\n";
  const int n = s.points;
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    grid[static_cast<std::size_t>(i)] =
        s.min + (s.max - s.min) * i / static_cast<double>(n - 1);
  // Mirror a symmetric grid exactly so line-shape symmetry survives rounding.
  if (std::abs(s.min + s.max) <= 1e-12 * std::abs(s.max - s.min))
    for (int i = 0; i < n / 2; ++i)
      grid[static_cast<std::size_t>(n - 1 - i)] = -grid[static_cast<std::size_t>(i)];
  for (int i = 0; i < n; ++i) {
    RateConfig rc = base;
    rc.omega2 = base.omega2 + grid[static_cast<std::size_t>(i)];
    const double r1 = one_phonon_rate(rc);
    double r2_bare = std::numeric_limits<double>::quiet_NaN();
    try {
      r2_bare = two_phonon_rate(rc, Broadening::bare).value;
    } catch (const std::domain_error&) {
      // singular pathway denominator at this grid point
    }
    const double r2_broad = two_phonon_rate(rc, Broadening::cavity_broadened).value;
    os << csv_cell(grid[static_cast<std::size_t>(i)], p) << ','
       << csv_cell(r1, p) << ',' << csv_cell(r2_bare, p) << ','
       << csv_cell(r2_broad, p) << ','
       << csv_cell(r1 > 0.0 ? r2_broad / r1
                            : std::numeric_limits<double>::quiet_NaN(), p)
       << "\r\n";
  }
  return os.str();
}

ordered_json oracle_doc(const RunConfig& cfg) {
  const int p = cfg.output.precision;
  const OracleRunConfig& oc = cfg.oracle;
  const FirstOrderCheck fo =
      first_order_check(oc.desk, oc.first_order_detuning);
  const SecondOrderCheck so = second_order_check(oc.desk, oc.deltas);
  ordered_json doc;
  doc["schema"] = 1;
  doc["first_order"] = {
      {"detuning", quantity(fo.detuning, "desk rad/s", p)},
      {"matrix_element", quantity(fo.matrix_element, "desk rad/s", p)},
      {"window_end", quantity(fo.window_end, "desk s", p)},
      {"probability_numeric", quantity(fo.probability_numeric, "dimensionless", p)},
      {"probability_perturbative",
       quantity(fo.probability_perturbative, "dimensionless", p)},
      {"max_rel_deviation", quantity(fo.max_rel_deviation, "dimensionless", p)},
      {"basis_dimension", fo.basis_dimension},
  };
  ordered_json scan = ordered_json::array();
  for (const auto& pt : so.scan)
    scan.push_back({{"delta", quantity(pt.delta, "desk rad/s", p)},
                    {"extracted_geff", quantity(pt.extracted_geff, "desk rad/s", p)},
                    {"predicted_geff", quantity(pt.predicted_geff, "desk rad/s", p)},
                    {"rel_deviation", quantity(pt.rel_deviation, "dimensionless", p)}});
  ordered_json pathway = ordered_json::array();
  for (std::size_t k = 0; k < 4; ++k)
    pathway.push_back({{"extracted_geff", quantity(so.pathway_geff[k], "desk rad/s", p)},
                       {"inverse_denominator", quantity(so.pathway_weights[k], "desk s", p)}});
  doc["second_order"] = {
      {"scan", scan},
      {"interference_full_prob", quantity(so.interference_full_prob, "dimensionless", p)},
      {"interference_control_prob",
       quantity(so.interference_control_prob, "dimensionless", p)},
      {"interference_ratio", quantity(so.interference_ratio, "dimensionless", p)},
      {"pathways", pathway},
      {"pathway_ordering_matches", so.pathway_ordering_matches},
      {"basis_dimension", so.basis_dimension},
  };
  return doc;
}

struct GoldenRow {
  std::string name;
  double computed;
  double reference;
  std::string criterion;
  bool pass;
};

int run_reproduce(const RunConfig& cfg, std::ostream& out) {
  std::vector<GoldenRow> rows;
  const auto rel_row = [&](const std::string& name, double computed,
                           double reference, double rel_tol) {
    rows.push_back({name, computed, reference,
                    "rel err <= " + csv_cell(rel_tol, 3),
                    std::abs(computed - reference) <=
                        rel_tol * std::abs(reference)});
  };

  const MaterialCoefficients mat = material_coefficients(cfg.fluid);
  rel_row("eps(rho0)/eps0", mat.eps_ratio0, 1.057, 1e-3);
  rel_row("g1", mat.g1, 0.05826, 5e-3);
  rel_row("g2", mat.g2, 0.00111, 1e-2);

  const double volume = 1e-14;
  const double omega = constants::two_pi * constants::c_light / 1e-6;
  const double f = constants::two_pi * 1e7;
  const double g_est = linear_coupling_uniform_estimate(mat, omega, f, volume);
  rel_row("g'/g1 (uniform estimate)", g_est / mat.g1,
          constants::two_pi * 30e3, 5e-2);
  rel_row("g' (uniform estimate)", g_est, constants::two_pi * 1.8e3, 5e-2);

  const auto uniform = modes_preset("paper-fiber-cavity");
  const double g_quad = linear_coupling_element(mat, uniform[0], uniform[1],
                                                uniform[2], cfg.polarization);
  rows.push_back({"quadrature vs closed form", g_quad, g_est,
                  "rel err <= 1e-10",
                  std::abs(g_quad - g_est) <= 1e-10 * std::abs(g_est)});

  const double suppression = quadratic_suppression_ratio(mat, f, volume);
  rows.push_back({"p/g' suppression", suppression, 5e-12,
                  "within factor 3",
                  suppression >= 5e-12 / 3.0 && suppression <= 5e-12 * 3.0});

  RateConfig rc = rates_or_preset(cfg);
  rc = at_two_step_resonance(rc);
  const BracketResult br = two_step_bracket(rc);
  rows.push_back({"bracket at resonance", br.value, 0.0,
                  "|bracket| <= 1e-14/f",
                  std::abs(br.value) <= 1e-14 / rc.geometric_mean_f()});

  const double prefactor =
      rate_ratio(rc, RatioMode::paper_approx) / (rc.n1 * rc.n1 * rc.mu2);
  rel_row("ratio prefactor g^2 k^2/2f^4 (computed)", prefactor, 2e-14, 1e-2);
  // The source text prints 2e-16 for the same chain; reported side by side.
  const double chain_with_printed = 2e-16 * rc.n1 * rc.n1 * rc.mu2;
  rel_row("ratio chain with printed 2e-16 prefactor", chain_with_printed,
          2e-3, 1e-6);

  const double mu_thermal = thermal_occupation(f, 0.010);
  rows.push_back({"thermal occupation at 10 mK", mu_thermal, 10.0,
                  "within factor 2.5",
                  mu_thermal >= 10.0 / 2.5 && mu_thermal <= 10.0 * 2.5});

  int failures = 0;
  out << "reproduction suite (preset values in SI angular units)\n";
  for (const auto& r : rows) {
    if (!r.pass) ++failures;
    char line[160];
    std::snprintf(line, sizeof line, "%-42s computed=%-14.6g reference=%-12.6g %-20s %s",
                  r.name.c_str(), r.computed, r.reference, r.criterion.c_str(),
                  r.pass ? "PASS" : "FAIL");
    out << line << "\n";
  }
  out << (failures == 0 ? "all golden checks passed\n"
                        : std::to_string(failures) + " golden check(s) failed\n");
  return failures == 0 ? 0 : 3;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"heliomech - superfluid-helium optomechanics calculator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format;
  for (const char* name : {"material", "coupling", "hamiltonian", "rates",
                           "sweep", "oracle", "reproduce"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON config path");
    sub->add_option("--out", out_path, "output path (default from config)");
    sub->add_option("--format", format, "json|csv (default from config)");
  }

  // CLI11 wants argv-style reversed arguments.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (cfg.modes.empty()) cfg.modes = modes_preset("paper-fiber-cavity");
    if (!out_path.empty()) cfg.output.path = out_path;
    if (!format.empty()) {
      if (format != "json" && format != "csv") {
        err << "error: --format must be json or csv\n";
        return 1;
      }
      cfg.output.format = format;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "material") emit_json(material_doc(cfg), cfg.output, out);
    else if (cmd == "coupling") emit_json(coupling_doc(cfg), cfg.output, out);
    else if (cmd == "hamiltonian") emit_json(hamiltonian_doc(cfg), cfg.output, out);
    else if (cmd == "rates")
      emit_json(rate_doc_for(rates_or_preset(cfg), cfg.output.precision),
                cfg.output, out);
    else if (cmd == "sweep") emit_text(sweep_csv(cfg), cfg.output.path, out);
    else if (cmd == "oracle") emit_json(oracle_doc(cfg), cfg.output, out);
    else if (cmd == "reproduce") return run_reproduce(cfg, out);
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace heliomech
