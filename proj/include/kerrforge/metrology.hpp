// Cat-state weak-force detection: exact readout statistics of the
// displacement -> Ramsey-parity protocol and the small-displacement closed
// forms.
#ifndef KERRFORGE_METROLOGY_HPP
#define KERRFORGE_METROLOGY_HPP

#include "kerrforge/fock.hpp"

namespace kerrforge {

struct WeakForceSetup {
  double alpha = 2.0;    // real cat amplitude, > 0
  double epsilon = 0.0;  // force-induced displacement, >= 0
  int dim = 0;           // Fock cutoff; 0 picks default_fock_dim(alpha)

  // The parity-subspace picture needs epsilon << alpha.
  bool approximation_strained() const { return epsilon > alpha / 10.0; }
};

// (e^{i pi/4} |alpha> + e^{-i pi/4} |-alpha>)/sqrt(2), normalized with the
// exact <alpha|-alpha> cross term (which these phases make purely imaginary,
// so the closed-form norm is exactly 1).
FockVector cat_state(double alpha, int dim);

enum class ReadoutPort { excited, ground };

// Full Fock-space protocol: cat (x) |g>, weak-force displacement, pi/2
// electronic rotation, conditional parity (-1)^n on the excited branch,
// second pi/2 rotation, then the population at `port`. The force parameter is
// calibrated to the closed-form fringe P+ = (1 - sin(2 alpha eps))/2: the
// displaced-parity readout doubles the displacement phase
// (D(-ib) Pi D(ib) = Pi D(2ib)), so the protocol applies D(i eps/2). The
// excited port realizes P+.
double protocol_exact(const WeakForceSetup& setup, ReadoutPort port = ReadoutPort::excited);

// P+ = (1 - sin(2 alpha eps))/2.
double p_plus_approx(double alpha, double epsilon);

struct EpsilonMin {
  double sql_beating;  // 1/(2 alpha)
  double fringe;       // pi/(4 alpha), one-fringe shift
};

EpsilonMin epsilon_min(double alpha);

// 1 - fidelity between the exact displaced cat D(i eps)|psi_i> and the
// parity-subspace approximation cos(pi/4 + alpha eps)|+> +
// i sin(pi/4 + alpha eps)|->, the latter normalized.
double rotated_state_check(const WeakForceSetup& setup);

// dP+/deps = -alpha cos(2 alpha eps); CLI display helper.
double p_plus_sensitivity(double alpha, double epsilon);

}  // namespace kerrforge

#endif
