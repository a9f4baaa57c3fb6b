#include "kerrforge/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace kerrforge {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// log sum_{k=0}^{M} exp(k*log(a2) - log k!), a2 = |alpha|^2, with max-term
// factoring so large alpha cannot overflow.
double log_sm(double a2, int m_cut) {
  if (a2 == 0.0) return 0.0;  // only the k = 0 term survives
  const double la = std::log(a2);
  std::vector<double> lt(m_cut + 1);
  double lmax = -INFINITY;
  for (int k = 0; k <= m_cut; ++k) {
    lt[k] = k * la - log_factorial(k);
    lmax = std::max(lmax, lt[k]);
  }
  double s = 0.0;
  for (int k = 0; k <= m_cut; ++k) s += std::exp(lt[k] - lmax);
  return lmax + std::log(s);
}

}  // namespace

void FockVector::normalize() {
  const double n = amps.norm();
  if (!(n > 0.0)) throw std::domain_error("FockVector::normalize: zero state");
  amps /= n;
}

cplx FockVector::overlap(const FockVector& other) const {
  const int n = std::min(dim(), other.dim());
  if (n == 0) return 0.0;
  return amps.head(n).dot(other.amps.head(n));  // Eigen dot conjugates the left factor
}

double FockVector::fidelity(const FockVector& other) const {
  return std::norm(overlap(other));
}

int default_fock_dim(cplx alpha) {
  const double a = std::abs(alpha);
  return static_cast<int>(std::ceil(a * a + 8.0 * a + 10.0));
}

FockVector coherent_state(cplx alpha, int dim) {
  if (dim < 1) throw std::invalid_argument("coherent_state: dim must be >= 1");
  if (dim < default_fock_dim(alpha))
    throw std::invalid_argument("coherent_state: dim too small for the tail bound");
  FockVector s(dim);
  const double a = std::abs(alpha);
  if (a == 0.0) {
    s.amps(0) = 1.0;
    return s;
  }
  const double phi = std::arg(alpha);
  for (int n = 0; n < dim; ++n) {
    const double logmag = -0.5 * a * a + n * std::log(a) - 0.5 * log_factorial(n);
    s.amps(n) = std::polar(std::exp(logmag), n * phi);
  }
  s.normalize();
  return s;
}

FockVector apply_kerr_phase(const FockVector& state, double tau) {
  const double taur = std::fmod(tau, kTwoPi);
  FockVector out = state;
  for (int n = 0; n < state.dim(); ++n) {
    const double q = 0.5 * static_cast<double>(n) * (n - 1);  // integer-valued
    out.amps(n) *= std::polar(1.0, std::fmod(q * taur, kTwoPi));
  }
  return out;
}

FockVector truncated_kerr_state(const KerrParams& p, int dim) {
  if (!p.m_cut) throw std::invalid_argument("truncated_kerr_state: m_cut not set");
  const int m = *p.m_cut;
  if (m < 0) throw std::invalid_argument("truncated_kerr_state: m_cut < 0");
  if (m >= dim) throw std::invalid_argument("truncated_kerr_state: m_cut >= dim");
  FockVector s(dim);
  const double a = std::abs(p.alpha);
  if (a == 0.0) {
    s.amps(0) = 1.0;
    return apply_kerr_phase(s, p.tau);
  }
  const double phi = std::arg(p.alpha);
  const double half_log_sm = 0.5 * log_sm(a * a, m);
  for (int n = 0; n <= m; ++n) {
    const double logmag = n * std::log(a) - 0.5 * log_factorial(n) - half_log_sm;
    s.amps(n) = std::polar(std::exp(logmag), n * phi);
  }
  return apply_kerr_phase(s, p.tau);
}

double truncation_fidelity(cplx alpha, int m_cut) {
  if (m_cut < 0) throw std::invalid_argument("truncation_fidelity: m_cut < 0");
  const double a2 = std::norm(alpha);
  return std::exp(-2.0 * a2 + 2.0 * log_sm(a2, m_cut));
}

double truncation_fidelity_normalized(cplx alpha, int m_cut) {
  if (m_cut < 0) throw std::invalid_argument("truncation_fidelity_normalized: m_cut < 0");
  const double a2 = std::norm(alpha);
  return std::exp(-a2 + log_sm(a2, m_cut));
}

Eigen::MatrixXcd displacement_matrix(cplx beta, int dim) {
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    const double r = std::sqrt(static_cast<double>(n));
    b(n, n - 1) = beta * r;              // beta a^dag
    b(n - 1, n) = -std::conj(beta) * r;  // -conj(beta) a
  }
  return b.exp();
}

cplx displacement_matrix_element(int m, int n, cplx beta) {
  if (m < 0 || n < 0) throw std::invalid_argument("displacement_matrix_element: negative index");
  const double x = std::norm(beta);
  const int lo = std::min(m, n), hi = std::max(m, n), d = hi - lo;
  // L_lo^d(x) by the three-term recurrence
  double lkm1 = 1.0, lk = 1.0 + d - x;
  if (lo == 0) lk = 1.0;
  for (int k = 2; k <= lo; ++k) {
    const double lnext = ((2.0 * k - 1.0 + d - x) * lk - (k - 1.0 + d) * lkm1) / k;
    lkm1 = lk;
    lk = lnext;
  }
  const double lag = (lo == 0) ? 1.0 : lk;
  const double mag = std::exp(0.5 * (log_factorial(lo) - log_factorial(hi)) - 0.5 * x);
  const cplx zpow = (m >= n) ? std::pow(beta, d) : std::pow(-std::conj(beta), d);
  return mag * zpow * lag;
}

FockVector displace(const FockVector& state, cplx beta) {
  const int dim = state.dim();
  const int guard = static_cast<int>(std::ceil(8.0 * std::abs(beta)));
  const int k = dim - guard;
  if (k <= 0)
    throw std::runtime_error("displace: cutoff too small for this displacement");
  double tail = 0.0;
  for (int n = k; n < dim; ++n) tail += std::norm(state.amps(n));
  if (tail >= 1e-8)
    throw std::runtime_error("displace: state tail mass would leak past the cutoff");
  FockVector out(dim);
  out.amps = displacement_matrix(beta, dim) * state.amps;
  return out;
}

std::pair<int, int> significant_range(cplx alpha, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw std::invalid_argument("significant_range: threshold must be in (0,1)");
  const double a = std::abs(alpha);
  if (a == 0.0) return {0, 0};  // only w_0 = 1 is nonzero
  const double lthr = std::log(threshold);
  const int nmax = static_cast<int>(std::ceil(a * a + 20.0 * a + 40.0));
  int lo = -1, hi = -1;
  for (int n = 0; n <= nmax; ++n) {
    const double logw = -0.5 * a * a + n * std::log(a) - 0.5 * log_factorial(n);
    if (logw >= lthr) {
      if (lo < 0) lo = n;
      hi = n;
    }
  }
  if (lo < 0) throw std::invalid_argument("significant_range: no coefficient reaches threshold");
  return {lo, hi};
}

}  // namespace kerrforge
