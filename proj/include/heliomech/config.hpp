#ifndef HELIOMECH_CONFIG_HPP
#define HELIOMECH_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "heliomech/material.hpp"
#include "heliomech/modes.hpp"
#include "heliomech/oracle.hpp"
#include "heliomech/rates.hpp"

// JSON run configuration (schema version 1).  Unknown keys are rejected;
// presets expand before validation of physical values.

namespace heliomech {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputConfig {
  std::string format = "json";  // json | csv
  std::string path = "-";       // "-" = stdout
  int precision = 9;            // significant digits
};

struct SweepConfig {
  double min = 0.0;   // offset applied to omega2, rad/s
  double max = 0.0;
  int points = 101;
};

struct OracleRunConfig {
  DeskConfig desk;
  double first_order_detuning = 0.0;
  std::vector<double> deltas = {0.6, 1.2, 1.8, 2.4, 3.0};
};

struct RunConfig {
  FluidProperties fluid = helium_preset();
  std::vector<ModeFunction> modes;
  double polarization = 1.0;
  bool quadratic = false;
  std::optional<RateConfig> rates;
  OracleRunConfig oracle;
  std::optional<SweepConfig> sweep;
  OutputConfig output;

  std::vector<ModeFunction> optical_modes() const;
  std::vector<ModeFunction> acoustic_modes() const;
};

// The section presets shipped with the tool.
FluidProperties fluid_preset(const std::string& name);          // "paper-he4"
std::vector<ModeFunction> modes_preset(const std::string& name);// "paper-fiber-cavity"
RateConfig rates_preset(const std::string& name);               // "paper-rates"

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

}  // namespace heliomech

#endif
