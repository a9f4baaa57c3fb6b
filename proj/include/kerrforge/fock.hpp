// Finite-dimensional Fock-space states: coherent states, Kerr phases,
// truncation, overlaps, displacement.
#ifndef KERRFORGE_FOCK_HPP
#define KERRFORGE_FOCK_HPP

#include <complex>
#include <optional>
#include <utility>

#include <Eigen/Dense>

namespace kerrforge {

using cplx = std::complex<double>;

// Complex amplitudes c_0..c_{dim-1} over the number basis. Amplitudes beyond
// dim are implicitly zero.
struct FockVector {
  Eigen::VectorXcd amps;

  FockVector() = default;
  explicit FockVector(int dim) : amps(Eigen::VectorXcd::Zero(dim)) {}
  explicit FockVector(Eigen::VectorXcd a) : amps(std::move(a)) {}

  int dim() const { return static_cast<int>(amps.size()); }
  double norm() const { return amps.norm(); }

  // Scales to unit norm. Throws on (numerically) zero vectors.
  void normalize();

  // <this|other>; states of different dim are compared with zero padding.
  cplx overlap(const FockVector& other) const;

  // |<this|other>|^2, insensitive to global phase.
  double fidelity(const FockVector& other) const;
};

struct KerrParams {
  cplx alpha;                 // coherent amplitude
  double tau = 0.0;           // unitless evolution parameter
  std::optional<int> m_cut;   // truncation level M (inclusive)
};

// Cutoff keeping the coherent-state tail mass below 1e-10: |a|^2 + 8|a| + 10.
int default_fock_dim(cplx alpha);

// c_n = e^{-|a|^2/2} a^n / sqrt(n!), renormalized over the cutoff.
// Rejects dim below default_fock_dim(alpha) (truncation would corrupt results).
FockVector coherent_state(cplx alpha, int dim);

// c_n <- c_n * e^{i tau n(n-1)/2}. tau is reduced mod 2pi first, so tau = 2pi
// is an exact identity (n(n-1) is always even).
FockVector apply_kerr_phase(const FockVector& state, double tau);

// Normalized truncation: c_n = S_M^{-1/2} a^n/sqrt(n!) e^{i tau n(n-1)/2} for
// n <= M, zero above, S_M = sum_{k<=M} |a|^{2k}/k!. Requires m_cut < dim.
FockVector truncated_kerr_state(const KerrParams& p, int dim);

// Squared overlap of the raw (unnormalized) truncated expansion with the full
// state: e^{-2|a|^2} S_M^2. This is the printed form used by the reference
// tables.
double truncation_fidelity(cplx alpha, int m_cut);

// Squared overlap of the *normalized* truncated state with the full state:
// e^{-|a|^2} S_M. Companion value to truncation_fidelity.
double truncation_fidelity_normalized(cplx alpha, int m_cut);

// exp(beta a^dag - conj(beta) a) truncated to dim x dim, via scaling-and-
// squaring matrix exponential.
Eigen::MatrixXcd displacement_matrix(cplx beta, int dim);

// Closed-form <m|D(beta)|n> in terms of associated Laguerre polynomials.
// Independent route kept as a cross-check against displacement_matrix.
cplx displacement_matrix_element(int m, int n, cplx beta);

// Applies D(beta). Rejects states whose tail mass beyond dim - ceil(8|beta|)
// exceeds 1e-8 (the displacement would leak probability past the cutoff).
FockVector displace(const FockVector& state, cplx beta);

// Smallest and largest n with |w_n| >= threshold, where w_n are the
// coefficients e^{-|a|^2/2} |a|^n/sqrt(n!) of the untruncated Kerr state.
// threshold must lie in (0,1); throws if no coefficient reaches it.
std::pair<int, int> significant_range(cplx alpha, double threshold);

}  // namespace kerrforge

#endif
