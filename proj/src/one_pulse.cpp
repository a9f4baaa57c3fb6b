#include "kerrforge/one_pulse.hpp"

#include <cmath>
#include <stdexcept>

namespace kerrforge {

namespace {
void validate(const OnePulseConfig& cfg) {
  if (!(cfg.omega > 0.0)) throw std::invalid_argument("OnePulseConfig: omega must be > 0");
  if (!(cfg.eta > 0.0 && cfg.eta < 1.0))
    throw std::invalid_argument("OnePulseConfig: eta must be in (0,1)");
}

// Free-evolution and Kerr phase coefficients of the RWA Hamiltonian,
// H = (Omega/2)[c0 + c1 n + c2 n(n-1)] sigma_x.
struct RwaCoeffs {
  double c0, c1, c2;
};

RwaCoeffs rwa_coeffs(double eta) {
  const double e2 = eta * eta, e4 = e2 * e2;
  return {1.0 - e2 / 2.0 + e4 / 8.0, -e2 + e4 / 2.0, e4 / 4.0};
}
}  // namespace

double tau_eff(const OnePulseConfig& cfg, double t) {
  validate(cfg);
  if (t < 0.0) throw std::invalid_argument("tau_eff: negative duration");
  const double e2 = cfg.eta * cfg.eta;
  return cfg.omega * e2 * e2 * t / 4.0;
}

double pulse_duration(const OnePulseConfig& cfg, double tau) {
  validate(cfg);
  if (tau < 0.0) throw std::invalid_argument("pulse_duration: negative tau");
  const double e2 = cfg.eta * cfg.eta;
  return 4.0 * tau / (cfg.omega * e2 * e2);
}

double validity_margin(const OnePulseConfig& cfg) {
  validate(cfg);
  return 2.0 * cfg.eta * std::abs(cfg.alpha);
}

std::vector<double> expansion_coeffs(const OnePulseConfig& cfg, int k_max) {
  validate(cfg);
  if (k_max < 0) throw std::invalid_argument("expansion_coeffs: k_max < 0");
  const double p = 2.0 * cfg.eta * std::abs(cfg.alpha);
  std::vector<double> out(k_max + 1);
  out[0] = 1.0;
  for (int k = 1; k <= k_max; ++k) out[k] = out[k - 1] * p / k;
  return out;
}

IonState sigma_x_state(const FockVector& motional, SigmaXBranch branch) {
  const double s = branch == SigmaXBranch::plus ? 1.0 : -1.0;
  IonState out{FockVector(motional.dim()), FockVector(motional.dim())};
  out.g.amps = motional.amps / std::sqrt(2.0);
  out.e.amps = s * motional.amps / std::sqrt(2.0);
  return out;
}

IonState evolve_rwa(const IonState& state, const OnePulseConfig& cfg, double t) {
  validate(cfg);
  if (t < 0.0) throw std::invalid_argument("evolve_rwa: negative duration");
  if (std::abs(state.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("evolve_rwa: state must be normalized");

  double s;
  if ((state.g.amps - state.e.amps).norm() <= 1e-8)
    s = 1.0;
  else if ((state.g.amps + state.e.amps).norm() <= 1e-8)
    s = -1.0;
  else
    throw std::invalid_argument("evolve_rwa: electronic part is not a sigma_x eigenstate");

  const RwaCoeffs rc = rwa_coeffs(cfg.eta);
  IonState out = state;
  for (int n = 0; n < state.dim(); ++n) {
    const double nn = static_cast<double>(n) * (n - 1);
    const double theta = -s * t * (cfg.omega / 2.0) * (rc.c0 + rc.c1 * n + rc.c2 * nn);
    const cplx ph = std::polar(1.0, theta);
    out.g.amps(n) *= ph;
    out.e.amps(n) *= ph;
  }
  return out;
}

double kerr_fidelity(const OnePulseConfig& cfg, double tau, SigmaXBranch branch) {
  if (validity_margin(cfg) >= 1.0)
    throw std::domain_error("kerr_fidelity: outside the validity regime (2 eta |alpha| >= 1)");
  const int dim = default_fock_dim(cfg.alpha);
  const FockVector motional = coherent_state(cfg.alpha, dim);
  const double t = pulse_duration(cfg, tau);
  const IonState evolved = evolve_rwa(sigma_x_state(motional, branch), cfg, t);

  // Recover the motional factor and strip the free ion evolution.
  const double s = branch == SigmaXBranch::plus ? 1.0 : -1.0;
  const RwaCoeffs rc = rwa_coeffs(cfg.eta);
  FockVector out(dim);
  for (int n = 0; n < dim; ++n) {
    const double free_phase = -s * t * (cfg.omega / 2.0) * (rc.c0 + rc.c1 * n);
    out.amps(n) = evolved.g.amps(n) * std::sqrt(2.0) * std::polar(1.0, -free_phase);
  }

  // The minus branch accumulates +tau_eff, the plus branch its conjugate.
  const FockVector ideal = apply_kerr_phase(motional, -s * tau);
  return out.fidelity(ideal);
}

}  // namespace kerrforge
