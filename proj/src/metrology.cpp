#include "kerrforge/metrology.hpp"

#include <cmath>
#include <stdexcept>

namespace kerrforge {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr cplx kI{0.0, 1.0};

void validate(const WeakForceSetup& s) {
  if (!(s.alpha > 0.0)) throw std::invalid_argument("WeakForceSetup: alpha must be > 0");
  if (s.epsilon < 0.0) throw std::invalid_argument("WeakForceSetup: epsilon must be >= 0");
}

int pick_dim(const WeakForceSetup& s) {
  return s.dim > 0 ? s.dim : default_fock_dim(s.alpha);
}
}  // namespace

FockVector cat_state(double alpha, int dim) {
  const FockVector plus = coherent_state(alpha, dim);
  const FockVector minus = coherent_state(-alpha, dim);
  FockVector cat(dim);
  cat.amps = std::polar(1.0, kPi / 4.0) * plus.amps + std::polar(1.0, -kPi / 4.0) * minus.amps;
  cat.normalize();
  return cat;
}

double protocol_exact(const WeakForceSetup& setup, ReadoutPort port) {
  validate(setup);
  const int dim = pick_dim(setup);
  const FockVector psi = displace(cat_state(setup.alpha, dim), kI * (setup.epsilon / 2.0));

  // pi/2 rotation from |g>: both branches carry psi/sqrt(2); conditional
  // parity flips odd Fock amplitudes on the excited branch only.
  Eigen::VectorXcd g = psi.amps / std::sqrt(2.0);
  Eigen::VectorXcd e = psi.amps / std::sqrt(2.0);
  for (int n = 1; n < dim; n += 2) e(n) = -e(n);

  // second pi/2 rotation: |g> -> (|g>+|e>)/sqrt(2), |e> -> (-|g>+|e>)/sqrt(2)
  const double p_ground = ((g - e) / std::sqrt(2.0)).squaredNorm();
  const double p_excited = ((g + e) / std::sqrt(2.0)).squaredNorm();
  return port == ReadoutPort::excited ? p_excited : p_ground;
}

double p_plus_approx(double alpha, double epsilon) {
  return 0.5 * (1.0 - std::sin(2.0 * alpha * epsilon));
}

EpsilonMin epsilon_min(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("epsilon_min: alpha must be > 0");
  return {1.0 / (2.0 * alpha), kPi / (4.0 * alpha)};
}

double rotated_state_check(const WeakForceSetup& setup) {
  validate(setup);
  const int dim = pick_dim(setup);
  const FockVector exact = displace(cat_state(setup.alpha, dim), kI * setup.epsilon);

  const FockVector ca = coherent_state(setup.alpha, dim);
  const FockVector cma = coherent_state(-setup.alpha, dim);
  const double theta = kPi / 4.0 + setup.alpha * setup.epsilon;
  FockVector approx(dim);
  approx.amps = (std::cos(theta) * (ca.amps + cma.amps) +
                 kI * std::sin(theta) * (ca.amps - cma.amps)) /
                std::sqrt(2.0);
  approx.normalize();
  return 1.0 - exact.fidelity(approx);
}

double p_plus_sensitivity(double alpha, double epsilon) {
  return -alpha * std::cos(2.0 * alpha * epsilon);
}

}  // namespace kerrforge
