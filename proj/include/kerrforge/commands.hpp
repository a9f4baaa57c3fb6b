// CLI subcommand implementations. Each command computes everything first and
// then writes its files atomically, so failures never leave partial outputs.
#ifndef KERRFORGE_COMMANDS_HPP
#define KERRFORGE_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kerrforge/config.hpp"

namespace kerrforge {

struct CommandResult {
  std::vector<std::string> files;  // paths written
};

// Truncation-benchmark tables (isoline ratios, agreement fractions, errors)
// for m_min <= M <= m_max, with reference columns where published values
// exist (alpha = 2, M in [9,16]).
CommandResult cmd_tables(const RunConfig& cfg, double alpha, int m_min, int m_max);

// Wigner field dump (CSV or JSON, plus PGM raster) of the truncated state
// when m_cut is given, of the exact Kerr state otherwise. Defaults to a
// square region centered on the origin wide enough for all Kerr-state lobes.
CommandResult cmd_wigner(const RunConfig& cfg, double alpha, double tau,
                         std::optional<int> m_cut);

// Pulse schedule for the truncated Kerr target, budget report, and the
// two-column pulse table on `out`.
CommandResult cmd_schedule(const RunConfig& cfg, double alpha, double tau, int m_cut,
                           std::ostream& out);

// (tau, t) duration curves of the one-pulse method for each eta at the given
// Rabi frequency (rad/s). Durations above 1 s are flagged, not rejected.
CommandResult cmd_durations(const RunConfig& cfg, const std::vector<double>& etas,
                            double omega, const std::vector<double>& taus);

// (eps, P+ exact, P+ closed form, dP+/deps) sweep. Warns on `warn` when the
// sweep leaves the eps << alpha regime.
CommandResult cmd_weakforce(const RunConfig& cfg, double alpha, double eps_min,
                            double eps_max, int steps, std::ostream& warn);

}  // namespace kerrforge

#endif
