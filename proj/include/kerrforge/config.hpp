// Run configuration: trap parameters, grid, output location and format.
// Loaded from a flat key=value file; every key can be overridden by a CLI
// flag.
#ifndef KERRFORGE_CONFIG_HPP
#define KERRFORGE_CONFIG_HPP

#include <optional>
#include <string>

#include "kerrforge/pulse.hpp"
#include "kerrforge/wigner.hpp"

namespace kerrforge {

enum class OutputFormat { csv, json };

struct RunConfig {
  TrapConfig trap;
  std::optional<Region> region;  // unset: side-4 square centered on alpha
  double step = 0.04;
  int fock_dim = 0;  // 0: default_fock_dim(alpha)
  std::string output_dir = ".";
  OutputFormat format = OutputFormat::csv;

  Region region_for(cplx alpha) const { return region ? *region : default_region(alpha); }
  int dim_for(cplx alpha) const;
};

// Parses `key = value` lines (# starts a comment). Unknown keys are an error.
// Keys: omega_c, omega_r, eta, vib_coherence, elec_coherence, m_max,
// re_min, re_max, im_min, im_max, step, fock_dim, output_dir, format.
RunConfig load_config(const std::string& path);

void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value);

}  // namespace kerrforge

#endif
