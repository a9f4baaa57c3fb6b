// Carrier / red-sideband pulse schedules: coupling rates, exact two-level
// pulse application, inverse synthesis of finite Fock superpositions, and
// coherence budget checks.
#ifndef KERRFORGE_PULSE_HPP
#define KERRFORGE_PULSE_HPP

#include <string>
#include <vector>

#include "kerrforge/fock.hpp"

namespace kerrforge {

enum class PulseKind { carrier, red_sideband };

const char* pulse_kind_name(PulseKind k);

struct PulseSpec {
  PulseKind kind = PulseKind::carrier;
  double phase = 0.0;     // rad, stored unreduced
  double duration = 0.0;  // s
  double rabi = 0.0;      // base Rabi frequency of this pulse, rad/s
  int index = 0;          // position in the schedule
};

struct PulseSchedule {
  std::vector<PulseSpec> pulses;

  double total_duration() const;
  double max_pulse_duration() const;
  int red_count() const;
};

struct TrapConfig {
  double omega_c = 1e6;          // carrier Rabi frequency, rad/s
  double omega_r = 1e5;          // red-sideband Rabi frequency, rad/s
  double eta = 0.02;             // Lamb-Dicke parameter
  double vib_coherence = 0.190;  // s
  double elec_coherence = 1.4e-3;  // s
  int m_max = 17;                // maximal trappable excitation
};

// Two-component electronic spinor tensor a Fock vector: g_amps with |g>,
// e_amps with |e>.
struct IonState {
  FockVector g;
  FockVector e;

  int dim() const { return g.dim(); }
  double norm() const;
  static IonState ground(int dim);  // |0, g>
};

// |<a|b>|^2 over both branches, insensitive to global phase.
double ion_fidelity(const IonState& a, const IonState& b);

// Effective two-level coupling rate. Carrier couples |n,g> <-> |n,e> at
// Omega_C e^{-eta^2/2} L_n(eta^2); red sideband couples |n,g> <-> |n-1,e> at
// Omega_R e^{-eta^2/2} eta L_{n-1}^1(eta^2)/sqrt(n). These are the
// Omega e^{-eta^2/2} eta^{|dn|} sqrt(n_<!/n_>!) L_{n_<}^{|dn|}(eta^2) matrix
// elements, valid beyond the Lamb-Dicke regime. Red sideband requires n >= 1.
double rabi_coupling(const TrapConfig& cfg, int n, PulseKind kind);

// Exact 2x2 rotation on every coupled pair. The Bloch rotation angle is
// coupling * duration / 2; complete population transfer therefore takes
// coupling * t = 2 pi. The pulse phase enters as e^{i phase} on the raising
// part of the coupling.
IonState apply_pulse(const IonState& state, const PulseSpec& pulse, const TrapConfig& cfg);

// Compiles `target` (finite support n <= M, normalized) into the 2M-pulse
// alternating schedule C_0 R_1 ... C_{M-1} R_M by walking down from the
// highest occupied level: each red-sideband step empties one g-level into the
// e-branch below it and each carrier step empties that e-level. Zero
// amplitudes yield explicit zero-duration pulses. Throws when the support
// exceeds cfg.m_max or the accumulated duration exceeds cfg.vib_coherence.
PulseSchedule synthesize(const FockVector& target, const TrapConfig& cfg);

// Left-fold of apply_pulse starting from |0, g>. dim = 0 picks
// red_count() + 2 automatically.
IonState simulate_schedule(const PulseSchedule& schedule, const TrapConfig& cfg, int dim = 0);

struct BudgetReport {
  double total_duration = 0.0;
  double max_pulse_duration = 0.0;
  int max_level = 0;      // highest Fock level the schedule can populate
  bool vib_ok = true;     // total within the vibrational coherence time
  bool elec_ok = true;    // longest single pulse within the electronic coherence time
  bool level_ok = true;   // max_level within the trap binding limit
};

BudgetReport budget_check(const PulseSchedule& schedule, const TrapConfig& cfg);

}  // namespace kerrforge

#endif
