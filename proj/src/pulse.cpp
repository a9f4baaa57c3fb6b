#include "kerrforge/pulse.hpp"

#include <cmath>
#include <stdexcept>

#include "kerrforge/wigner.hpp"  // laguerre_assoc

namespace kerrforge {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSupportTol = 1e-12;
constexpr cplx kMinusI{0.0, -1.0};

void validate(const TrapConfig& cfg) {
  if (!(cfg.eta > 0.0 && cfg.eta < 1.0))
    throw std::invalid_argument("TrapConfig: eta must be in (0,1)");
  if (!(cfg.omega_c > 0.0) || !(cfg.omega_r > 0.0))
    throw std::invalid_argument("TrapConfig: Rabi frequencies must be > 0");
  if (cfg.m_max < 1) throw std::invalid_argument("TrapConfig: m_max must be >= 1");
}
}  // namespace

const char* pulse_kind_name(PulseKind k) {
  return k == PulseKind::carrier ? "carrier" : "red_sideband";
}

double PulseSchedule::total_duration() const {
  double t = 0.0;
  for (const auto& p : pulses) t += p.duration;
  return t;
}

double PulseSchedule::max_pulse_duration() const {
  double t = 0.0;
  for (const auto& p : pulses) t = std::max(t, p.duration);
  return t;
}

int PulseSchedule::red_count() const {
  int n = 0;
  for (const auto& p : pulses)
    if (p.kind == PulseKind::red_sideband) ++n;
  return n;
}

double IonState::norm() const {
  return std::sqrt(g.amps.squaredNorm() + e.amps.squaredNorm());
}

IonState IonState::ground(int dim) {
  IonState s{FockVector(dim), FockVector(dim)};
  s.g.amps(0) = 1.0;
  return s;
}

double ion_fidelity(const IonState& a, const IonState& b) {
  return std::norm(a.g.overlap(b.g) + a.e.overlap(b.e));
}

double rabi_coupling(const TrapConfig& cfg, int n, PulseKind kind) {
  validate(cfg);
  if (n < 0) throw std::invalid_argument("rabi_coupling: n < 0");
  const double x = cfg.eta * cfg.eta;
  if (kind == PulseKind::carrier)
    return cfg.omega_c * std::exp(-0.5 * x) * laguerre_assoc(n, 0, x);
  if (n < 1) throw std::invalid_argument("rabi_coupling: red sideband needs n >= 1");
  return cfg.omega_r * std::exp(-0.5 * x) * cfg.eta * laguerre_assoc(n - 1, 1, x) /
         std::sqrt(static_cast<double>(n));
}

IonState apply_pulse(const IonState& state, const PulseSpec& pulse, const TrapConfig& cfg) {
  validate(cfg);
  if (pulse.duration < 0.0) throw std::invalid_argument("apply_pulse: negative duration");
  if (!(pulse.rabi > 0.0)) throw std::invalid_argument("apply_pulse: rabi must be > 0");
  const double x = cfg.eta * cfg.eta;
  const double pref = pulse.rabi * std::exp(-0.5 * x);
  const cplx up = kMinusI * std::polar(1.0, pulse.phase);    // acts on the raising part
  const cplx down = kMinusI * std::polar(1.0, -pulse.phase);

  IonState out = state;
  const int dim = state.dim();
  if (pulse.kind == PulseKind::carrier) {
    for (int n = 0; n < dim; ++n) {
      const double coupling = pref * laguerre_assoc(n, 0, x);
      const double a = coupling * pulse.duration / 4.0;  // half the rotation angle
      const double c = std::cos(a), s = std::sin(a);
      const cplx gn = c * state.g.amps(n) + down * s * state.e.amps(n);
      const cplx en = up * s * state.g.amps(n) + c * state.e.amps(n);
      out.g.amps(n) = gn;
      out.e.amps(n) = en;
    }
  } else {
    for (int n = 1; n < dim; ++n) {
      const double coupling =
          pref * cfg.eta * laguerre_assoc(n - 1, 1, x) / std::sqrt(static_cast<double>(n));
      const double a = coupling * pulse.duration / 4.0;
      const double c = std::cos(a), s = std::sin(a);
      const cplx gn = c * state.g.amps(n) + down * s * state.e.amps(n - 1);
      const cplx en = up * s * state.g.amps(n) + c * state.e.amps(n - 1);
      out.g.amps(n) = gn;
      out.e.amps(n - 1) = en;
    }
  }
  return out;
}

namespace {

// Rotation parameters (half-angle a, phase psi) of the sweep pulse that zeroes
// amplitude u against partner v, given how the pulse feeds v into u:
// u' = cos(a) u + feed * e^{s i psi} sin(a) v with feed = -i e^{+-i psi}.
struct Zeroing {
  double half_angle = 0.0;
  double psi = 0.0;
};

// u' = cos(a) u - i e^{-i psi} sin(a) v  -> pick (a, psi) with u' = 0.
Zeroing solve_g_branch(cplx u, cplx v) {
  if (std::abs(u) < 1e-15) return {0.0, 0.0};
  if (std::abs(v) < 1e-15) return {0.5 * kPi, -std::arg(u / cplx(0.0, 1.0))};
  const double a = std::atan2(std::abs(u), std::abs(v));
  const cplx val = (std::cos(a) * u) / (cplx(0.0, 1.0) * std::sin(a) * v);
  return {a, -std::arg(val)};
}

// u' = cos(a) u - i e^{+i psi} sin(a) v  -> pick (a, psi) with u' = 0.
Zeroing solve_e_branch(cplx u, cplx v) {
  if (std::abs(u) < 1e-15) return {0.0, 0.0};
  if (std::abs(v) < 1e-15) return {0.5 * kPi, std::arg(u / cplx(0.0, 1.0))};
  const double a = std::atan2(std::abs(u), std::abs(v));
  const cplx val = (std::cos(a) * u) / (cplx(0.0, 1.0) * std::sin(a) * v);
  return {a, std::arg(val)};
}

}  // namespace

PulseSchedule synthesize(const FockVector& target, const TrapConfig& cfg) {
  validate(cfg);
  if (std::abs(target.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("synthesize: target must be normalized");

  int m = -1;
  for (int n = 0; n < target.dim(); ++n)
    if (std::abs(target.amps(n)) > kSupportTol) m = n;
  if (m < 0) throw std::invalid_argument("synthesize: empty target");
  if (m > cfg.m_max)
    throw std::invalid_argument("synthesize: target support exceeds the trap binding limit");

  const int dim = target.dim();
  IonState state{FockVector(dim), FockVector(dim)};
  state.g.amps = target.amps;

  // Inverse sweep: generated in order R_M, C_{M-1}, ..., R_1, C_0. Each
  // inverse pulse (a, psi) inverts to the forward pulse (a, psi + pi).
  std::vector<PulseSpec> inverse_order;
  double accumulated = 0.0;
  for (int j = m; j >= 1; --j) {
    {
      const Zeroing z = solve_g_branch(state.g.amps(j), state.e.amps(j - 1));
      PulseSpec p{PulseKind::red_sideband, z.psi,
                  4.0 * z.half_angle / rabi_coupling(cfg, j, PulseKind::red_sideband),
                  cfg.omega_r, 0};
      state = apply_pulse(state, p, cfg);
      accumulated += p.duration;
      if (accumulated > cfg.vib_coherence)
        throw std::runtime_error("synthesize: schedule exceeds the vibrational coherence time");
      p.phase += kPi;
      inverse_order.push_back(p);
    }
    {
      const Zeroing z = solve_e_branch(state.e.amps(j - 1), state.g.amps(j - 1));
      PulseSpec p{PulseKind::carrier, z.psi,
                  4.0 * z.half_angle / rabi_coupling(cfg, j - 1, PulseKind::carrier),
                  cfg.omega_c, 0};
      state = apply_pulse(state, p, cfg);
      accumulated += p.duration;
      if (accumulated > cfg.vib_coherence)
        throw std::runtime_error("synthesize: schedule exceeds the vibrational coherence time");
      p.phase += kPi;
      inverse_order.push_back(p);
    }
  }

  PulseSchedule schedule;
  schedule.pulses.assign(inverse_order.rbegin(), inverse_order.rend());
  for (int i = 0; i < static_cast<int>(schedule.pulses.size()); ++i)
    schedule.pulses[i].index = i;
  return schedule;
}

IonState simulate_schedule(const PulseSchedule& schedule, const TrapConfig& cfg, int dim) {
  if (dim <= 0) dim = schedule.red_count() + 2;
  IonState state = IonState::ground(dim);
  for (const auto& p : schedule.pulses) state = apply_pulse(state, p, cfg);
  return state;
}

BudgetReport budget_check(const PulseSchedule& schedule, const TrapConfig& cfg) {
  BudgetReport rep;
  rep.total_duration = schedule.total_duration();
  rep.max_pulse_duration = schedule.max_pulse_duration();
  rep.max_level = schedule.red_count();
  rep.vib_ok = rep.total_duration <= cfg.vib_coherence;
  rep.elec_ok = rep.max_pulse_duration <= cfg.elec_coherence;
  rep.level_ok = rep.max_level <= cfg.m_max;
  return rep;
}

}  // namespace kerrforge
