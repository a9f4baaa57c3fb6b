// Single-carrier-pulse Kerr generation: RWA Hamiltonian evolution, the
// effective evolution parameter tau_eff = Omega eta^4 t / 4, duration
// calculator and validity diagnostics.
#ifndef KERRFORGE_ONE_PULSE_HPP
#define KERRFORGE_ONE_PULSE_HPP

#include <vector>

#include "kerrforge/pulse.hpp"

namespace kerrforge {

struct OnePulseConfig {
  double omega = 1e7;  // Rabi frequency, rad/s
  double eta = 0.1;    // Lamb-Dicke parameter
  cplx alpha = 2.0;    // initial coherent amplitude
};

// Durations beyond this are experimentally infeasible and get flagged by the
// CLI sweep (never rejected).
inline constexpr double kDurationFlagSeconds = 1.0;

double tau_eff(const OnePulseConfig& cfg, double t);        // Omega eta^4 t / 4
double pulse_duration(const OnePulseConfig& cfg, double tau);  // 4 tau / (Omega eta^4)

// Expansion parameter 2 eta |alpha|; the series is controlled when < 1.
double validity_margin(const OnePulseConfig& cfg);

// [(2 eta |alpha|)^k / k! for k = 0..k_max]
std::vector<double> expansion_coeffs(const OnePulseConfig& cfg, int k_max);

// Which sigma_x eigenstate the electronic part is prepared in. Under the
// canonical e^{-iHt} evolution the `minus` branch (|g> - |e>)/sqrt(2)
// accumulates the +tau_eff Kerr phase, so it is the default.
enum class SigmaXBranch { plus, minus };

IonState sigma_x_state(const FockVector& motional, SigmaXBranch branch);

// Exact evolution under the five-term RWA Hamiltonian, diagonal in the
// Fock (x) sigma_x basis: |n, s> acquires
//   exp(-i s t (Omega/2) [1 - eta^2/2 + eta^4/8 + (-eta^2 + eta^4/2) n
//                         + (eta^4/4) n(n-1)]).
// Rejects electronic states that are not sigma_x eigenstates within 1e-8.
IonState evolve_rwa(const IonState& state, const OnePulseConfig& cfg, double t);

// Fidelity of the frame-compensated evolve_rwa output against the ideal Kerr
// state at tau (coherent alpha evolved for pulse_duration(cfg, tau)). The
// constant and linear-in-n phases are the free ion evolution and are removed
// before comparison. Requires validity_margin(cfg) < 1.
double kerr_fidelity(const OnePulseConfig& cfg, double tau,
                     SigmaXBranch branch = SigmaXBranch::minus);

}  // namespace kerrforge

#endif
