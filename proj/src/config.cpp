#include "heliomech/config.hpp"

#include <fstream>

#include "heliomech/constants.hpp"

namespace heliomech {

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::string& section,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) { ok = true; break; }
    if (!ok)
      throw ConfigError("unknown key \"" + key + "\" in section " + section);
  }
}

double require_number(const json& j, const std::string& section,
                      const char* key) {
  if (!j.contains(key))
    throw ConfigError("section " + section + " is missing \"" + key + "\"");
  if (!j[key].is_number())
    throw ConfigError("section " + section + ": \"" + key +
                      "\" must be a number");
  return j[key].get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? j[key].get<double>() : fallback;
}

FluidProperties parse_fluid(const json& j) {
  check_keys(j, "fluid",
             {"preset", "alpha_m", "molar_mass", "rho0", "v_s", "gruneisen"});
  FluidProperties p =
      j.contains("preset") ? fluid_preset(j["preset"].get<std::string>())
                           : FluidProperties{};
  if (!j.contains("preset")) {
    p.alpha_m = require_number(j, "fluid", "alpha_m");
    p.molar_mass = require_number(j, "fluid", "molar_mass");
    p.rho0 = require_number(j, "fluid", "rho0");
    p.v_s = require_number(j, "fluid", "v_s");
    p.gruneisen = require_number(j, "fluid", "gruneisen");
  } else {
    p.alpha_m = number_or(j, "alpha_m", p.alpha_m);
    p.molar_mass = number_or(j, "molar_mass", p.molar_mass);
    p.rho0 = number_or(j, "rho0", p.rho0);
    p.v_s = number_or(j, "v_s", p.v_s);
    p.gruneisen = number_or(j, "gruneisen", p.gruneisen);
  }
  try {
    p.validate();
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("fluid: ") + e.what());
  }
  return p;
}

ModeFunction parse_mode(const json& j, const FluidProperties& fluid) {
  check_keys(j, "modes[]", {"kind", "family", "L", "area", "n", "V",
                            "frequency", "speed", "length", "samples"});
  const std::string kind_s = j.at("kind").get<std::string>();
  if (kind_s != "optical" && kind_s != "acoustic")
    throw ConfigError("modes[]: kind must be optical or acoustic");
  const ModeKind kind =
      kind_s == "optical" ? ModeKind::optical : ModeKind::acoustic;
  const double default_speed =
      kind == ModeKind::optical ? constants::c_light : fluid.v_s;
  const std::string family = j.at("family").get<std::string>();
  try {
    if (family == "box") {
      return box_mode(kind, require_number(j, "modes[]", "L"),
                      require_number(j, "modes[]", "area"),
                      static_cast<int>(require_number(j, "modes[]", "n")),
                      number_or(j, "speed", default_speed));
    }
    if (family == "uniform") {
      return uniform_mode(kind, require_number(j, "modes[]", "V"),
                          require_number(j, "modes[]", "frequency"),
                          number_or(j, "length", 1.0));
    }
    if (family == "sampled") {
      if (!j.contains("samples") || !j["samples"].is_array())
        throw ConfigError("modes[]: sampled family needs a \"samples\" array");
      return sampled_mode(kind, require_number(j, "modes[]", "L"),
                          require_number(j, "modes[]", "area"),
                          require_number(j, "modes[]", "frequency"),
                          j["samples"].get<std::vector<double>>());
    }
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("modes[]: ") + e.what());
  }
  throw ConfigError("modes[]: unknown family \"" + family + "\"");
}

RateConfig parse_rates(const json& j) {
  check_keys(j, "rates", {"preset", "g", "omega1", "omega2", "f1", "f2",
                          "gamma", "kappa", "n1", "n2", "mu1", "mu2"});
  RateConfig c{};
  if (j.contains("preset")) c = rates_preset(j["preset"].get<std::string>());
  const bool has_preset = j.contains("preset");
  const auto get = [&](const char* key, double preset_value) {
    return has_preset ? number_or(j, key, preset_value)
                      : require_number(j, "rates", key);
  };
  c.g = get("g", c.g);
  c.omega1 = get("omega1", c.omega1);
  c.omega2 = get("omega2", c.omega2);
  c.f1 = get("f1", c.f1);
  c.f2 = get("f2", c.f2);
  c.gamma = get("gamma", c.gamma);
  c.kappa = get("kappa", c.kappa);
  c.n1 = get("n1", c.n1);
  c.n2 = get("n2", c.n2);
  c.mu1 = get("mu1", c.mu1);
  c.mu2 = get("mu2", c.mu2);
  try {
    c.validate();
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("rates: ") + e.what());
  }
  return c;
}

OracleRunConfig parse_oracle(const json& j) {
  check_keys(j, "oracle", {"omega1", "omega2", "f1", "f2", "g", "n1", "n2",
                           "mu1", "mu2", "extra_levels", "detuning", "deltas"});
  OracleRunConfig c;
  DeskConfig& d = c.desk;
  d.omega1 = number_or(j, "omega1", d.omega1);
  d.omega2 = number_or(j, "omega2", d.omega2);
  d.f1 = number_or(j, "f1", d.f1);
  d.f2 = number_or(j, "f2", d.f2);
  d.g = number_or(j, "g", d.g);
  d.n1 = static_cast<int>(number_or(j, "n1", d.n1));
  d.n2 = static_cast<int>(number_or(j, "n2", d.n2));
  d.mu1 = static_cast<int>(number_or(j, "mu1", d.mu1));
  d.mu2 = static_cast<int>(number_or(j, "mu2", d.mu2));
  d.extra_levels = static_cast<int>(number_or(j, "extra_levels", d.extra_levels));
  c.first_order_detuning = number_or(j, "detuning", 0.0);
  if (j.contains("deltas")) c.deltas = j["deltas"].get<std::vector<double>>();
  if (d.n1 < 1 || d.mu1 < 1)
    throw ConfigError("oracle: initial state needs n1 >= 1 and mu1 >= 1");
  return c;
}

SweepConfig parse_sweep(const json& j) {
  check_keys(j, "sweep", {"min", "max", "points"});
  SweepConfig s;
  s.min = require_number(j, "sweep", "min");
  s.max = require_number(j, "sweep", "max");
  s.points = static_cast<int>(number_or(j, "points", 101));
  if (s.points < 2 || s.max <= s.min)
    throw ConfigError("sweep: need points >= 2 and max > min");
  return s;
}

OutputConfig parse_output(const json& j) {
  check_keys(j, "output", {"format", "path", "precision"});
  OutputConfig o;
  if (j.contains("format")) o.format = j["format"].get<std::string>();
  if (o.format != "json" && o.format != "csv")
    throw ConfigError("output: format must be json or csv");
  if (j.contains("path")) o.path = j["path"].get<std::string>();
  o.precision = static_cast<int>(number_or(j, "precision", 9));
  if (o.precision < 1 || o.precision > 17)
    throw ConfigError("output: precision must be in [1, 17]");
  return o;
}

}  // namespace

std::vector<ModeFunction> RunConfig::optical_modes() const {
  std::vector<ModeFunction> out;
  for (const auto& m : modes)
    if (m.kind == ModeKind::optical) out.push_back(m);
  return out;
}

std::vector<ModeFunction> RunConfig::acoustic_modes() const {
  std::vector<ModeFunction> out;
  for (const auto& m : modes)
    if (m.kind == ModeKind::acoustic) out.push_back(m);
  return out;
}

FluidProperties fluid_preset(const std::string& name) {
  if (name == "paper-he4") return helium_preset();
  throw ConfigError("unknown fluid preset \"" + name + "\"");
}

std::vector<ModeFunction> modes_preset(const std::string& name) {
  if (name == "paper-fiber-cavity") {
    const double volume = 1e-14;                                    // m^3
    const double omega = constants::two_pi * constants::c_light / 1e-6;
    const double f = constants::two_pi * 1e7;
    return {uniform_mode(ModeKind::optical, volume, omega),
            uniform_mode(ModeKind::optical, volume, omega),
            uniform_mode(ModeKind::acoustic, volume, f)};
  }
  throw ConfigError("unknown modes preset \"" + name + "\"");
}

RateConfig rates_preset(const std::string& name) {
  if (name == "paper-rates") {
    RateConfig c{};
    c.g = constants::two_pi * 20.0;
    c.f1 = c.f2 = constants::two_pi * 1e7;
    c.kappa = 0.1 * c.f1;
    c.gamma = 1e-3 * c.f1;
    c.omega1 = constants::two_pi * constants::c_light / 1e-6;
    c.omega2 = c.omega1 + c.f1 + c.f2;  // two-step resonance
    c.n1 = 1e6;
    c.n2 = 0.0;
    c.mu1 = c.mu2 = 10.0;
    return c;
  }
  throw ConfigError("unknown rates preset \"" + name + "\"");
}

RunConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config root must be an object");
  check_keys(j, "(root)", {"schema", "fluid", "modes", "coupling", "rates",
                           "oracle", "sweep", "output"});
  if (!j.contains("schema") || !j["schema"].is_number_integer() ||
      j["schema"].get<int>() != 1)
    throw ConfigError("config must declare \"schema\": 1");

  RunConfig cfg;
  if (j.contains("fluid")) cfg.fluid = parse_fluid(j["fluid"]);

  if (j.contains("modes")) {
    const json& jm = j["modes"];
    if (jm.is_object()) {
      check_keys(jm, "modes", {"preset"});
      cfg.modes = modes_preset(jm.at("preset").get<std::string>());
    } else if (jm.is_array()) {
      for (const auto& item : jm) cfg.modes.push_back(parse_mode(item, cfg.fluid));
    } else {
      throw ConfigError("modes must be an array or a preset object");
    }
  } else {
    cfg.modes = modes_preset("paper-fiber-cavity");
  }

  if (j.contains("coupling")) {
    check_keys(j["coupling"], "coupling", {"polarization_factor", "quadratic"});
    cfg.polarization = number_or(j["coupling"], "polarization_factor", 1.0);
    if (cfg.polarization < 0.0 || cfg.polarization > 1.0)
      throw ConfigError("coupling: polarization_factor must be in [0, 1]");
    if (j["coupling"].contains("quadratic"))
      cfg.quadratic = j["coupling"]["quadratic"].get<bool>();
  }

  if (j.contains("rates")) cfg.rates = parse_rates(j["rates"]);
  if (j.contains("oracle")) cfg.oracle = parse_oracle(j["oracle"]);
  if (j.contains("sweep")) cfg.sweep = parse_sweep(j["sweep"]);
  if (j.contains("output")) cfg.output = parse_output(j["output"]);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(j);
}

}  // namespace heliomech
