#include "kerrforge/config.hpp"

#include <fstream>
#include <stdexcept>

namespace kerrforge {

namespace {
std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Region& ensure_region(RunConfig& cfg) {
  if (!cfg.region) cfg.region = Region{};
  return *cfg.region;
}
}  // namespace

int RunConfig::dim_for(cplx alpha) const {
  return fock_dim > 0 ? fock_dim : default_fock_dim(alpha);
}

void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value) {
  const auto num = [&] { return std::stod(value); };
  if (key == "omega_c")
    cfg.trap.omega_c = num();
  else if (key == "omega_r")
    cfg.trap.omega_r = num();
  else if (key == "eta")
    cfg.trap.eta = num();
  else if (key == "vib_coherence")
    cfg.trap.vib_coherence = num();
  else if (key == "elec_coherence")
    cfg.trap.elec_coherence = num();
  else if (key == "m_max")
    cfg.trap.m_max = static_cast<int>(num());
  else if (key == "re_min")
    ensure_region(cfg).re_min = num();
  else if (key == "re_max")
    ensure_region(cfg).re_max = num();
  else if (key == "im_min")
    ensure_region(cfg).im_min = num();
  else if (key == "im_max")
    ensure_region(cfg).im_max = num();
  else if (key == "step")
    cfg.step = num();
  else if (key == "fock_dim")
    cfg.fock_dim = static_cast<int>(num());
  else if (key == "output_dir")
    cfg.output_dir = value;
  else if (key == "format") {
    if (value == "csv")
      cfg.format = OutputFormat::csv;
    else if (value == "json")
      cfg.format = OutputFormat::json;
    else
      throw std::invalid_argument("config: format must be csv or json");
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not key = value");
    apply_config_line(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

}  // namespace kerrforge
