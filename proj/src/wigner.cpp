#include "kerrforge/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace kerrforge {

namespace {
constexpr double kPi = 3.14159265358979323846;

int grid_count(double lo, double hi, double step) {
  const double n = (hi - lo) / step;
  const double r = std::round(n);
  if (std::abs(n - r) > 1e-9 * std::max(1.0, std::abs(n)))
    throw std::invalid_argument("wigner_grid: region extent is not a multiple of step");
  return static_cast<int>(r) + 1;
}
}  // namespace

Region default_region(cplx alpha) {
  return {alpha.real() - 2.0, alpha.real() + 2.0, alpha.imag() - 2.0, alpha.imag() + 2.0};
}

bool WignerField::same_grid(const WignerField& other) const {
  const double tol = 1e-12;
  return std::abs(region.re_min - other.region.re_min) < tol &&
         std::abs(region.re_max - other.region.re_max) < tol &&
         std::abs(region.im_min - other.region.im_min) < tol &&
         std::abs(region.im_max - other.region.im_max) < tol &&
         std::abs(step - other.step) < tol && nx() == other.nx() && ny() == other.ny();
}

double laguerre_assoc(int n, int k, double x) {
  if (n < 0 || k < 0) throw std::invalid_argument("laguerre_assoc: negative order");
  if (n == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + k - x;
  for (int j = 2; j <= n; ++j) {
    const double lnext = ((2.0 * j - 1.0 + k - x) * lk - (j - 1.0 + k) * lkm1) / j;
    lkm1 = lk;
    lk = lnext;
  }
  return lk;
}

WignerEvaluator::WignerEvaluator(const FockVector& state) : dim_(state.dim()) {
  diag_ = Eigen::VectorXd::Zero(dim_);
  cross_ = Eigen::MatrixXcd::Zero(dim_, dim_);
  std::vector<double> lf(dim_);
  for (int n = 0; n < dim_; ++n) lf[n] = std::lgamma(n + 1.0);
  for (int n = 0; n < dim_; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    diag_(n) = sign * std::norm(state.amps(n));
    for (int d = 1; n + d < dim_; ++d)
      cross_(n, d) = std::conj(state.amps(n + d)) * state.amps(n) * sign *
                     std::exp(0.5 * (lf[n] - lf[n + d]));
  }
}

double WignerEvaluator::operator()(cplx gamma) const {
  const double x = 4.0 * std::norm(gamma);
  const cplx z = 2.0 * gamma;
  double acc = 0.0;
  // d = 0 band: sum_n diag_n L_n(x)
  {
    double lkm1 = 1.0, lk = 1.0 - x;
    acc += diag_(0);
    if (dim_ > 1) acc += diag_(1) * lk;
    for (int n = 2; n < dim_; ++n) {
      const double lnext = ((2.0 * n - 1.0 - x) * lk - (n - 1.0) * lkm1) / n;
      lkm1 = lk;
      lk = lnext;
      acc += diag_(n) * lnext;
    }
  }
  // d >= 1 bands: 2 Re( z^d sum_n cross_(n,d) L_n^d(x) )
  cplx zd = 1.0;
  for (int d = 1; d < dim_; ++d) {
    zd *= z;
    cplx band = cross_(0, d);
    double lkm1 = 1.0, lk = 1.0 + d - x;
    if (dim_ - d > 1) band += cross_(1, d) * lk;
    for (int n = 2; n + d < dim_; ++n) {
      const double lnext = ((2.0 * n - 1.0 + d - x) * lk - (n - 1.0 + d) * lkm1) / n;
      lkm1 = lk;
      lk = lnext;
      band += cross_(n, d) * lnext;
    }
    acc += 2.0 * (band * zd).real();
  }
  return (2.0 / kPi) * std::exp(-0.5 * x) * acc;
}

double wigner_point(const FockVector& state, cplx gamma) {
  return WignerEvaluator(state)(gamma);
}

WignerField wigner_grid(const FockVector& state, const Region& region, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("wigner_grid: step must be > 0");
  if (!(region.width() > 0.0) || !(region.height() > 0.0))
    throw std::invalid_argument("wigner_grid: degenerate region");
  const int nx = grid_count(region.re_min, region.re_max, step);
  const int ny = grid_count(region.im_min, region.im_max, step);

  WignerField field;
  field.region = region;
  field.step = step;
  field.values.resize(nx, ny);

  const WignerEvaluator eval(state);
  auto fill_rows = [&](int i0, int i1) {
    for (int i = i0; i < i1; ++i) {
      const double re = region.re_min + i * step;
      for (int j = 0; j < ny; ++j)
        field.values(i, j) = eval(cplx(re, region.im_min + j * step));
    }
  };

  const unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                              static_cast<unsigned>(nx));
  if (workers <= 1) {
    fill_rows(0, nx);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (nx + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const int i0 = static_cast<int>(w) * chunk;
      const int i1 = std::min(nx, i0 + chunk);
      if (i0 < i1) pool.emplace_back(fill_rows, i0, i1);
    }
    for (auto& t : pool) t.join();
  }
  return field;
}

namespace {

// Bilinear interpolation; returns false when the point leaves the grid.
bool sample(const WignerField& f, double re, double im, double* out) {
  const double fi = (re - f.region.re_min) / f.step;
  const double fj = (im - f.region.im_min) / f.step;
  const int i0 = static_cast<int>(std::floor(fi));
  const int j0 = static_cast<int>(std::floor(fj));
  if (i0 < 0 || j0 < 0 || i0 + 1 >= f.nx() || j0 + 1 >= f.ny()) return false;
  const double tx = fi - i0, ty = fj - j0;
  *out = f.values(i0, j0) * (1 - tx) * (1 - ty) + f.values(i0 + 1, j0) * tx * (1 - ty) +
         f.values(i0, j0 + 1) * (1 - tx) * ty + f.values(i0 + 1, j0 + 1) * tx * ty;
  return true;
}

}  // namespace

double isoline_ratio(const WignerField& field, double level, cplx center, int rays) {
  if (rays < 8) throw std::invalid_argument("isoline_ratio: too few rays");
  double v0;
  if (!sample(field, center.real(), center.imag(), &v0))
    throw std::domain_error("isoline_ratio: center outside the field");
  if (v0 < level)
    throw std::domain_error("isoline_ratio: level set does not enclose the center");

  const double dr = field.step / 4.0;
  double rmin = INFINITY, rmax = 0.0;
  for (int k = 0; k < rays; ++k) {
    const double th = 2.0 * kPi * k / rays;
    const double cx = std::cos(th), sy = std::sin(th);
    double prev = v0, prev_r = 0.0, crossing = -1.0;
    for (double r = dr;; r += dr) {
      double v;
      if (!sample(field, center.real() + r * cx, center.imag() + r * sy, &v)) break;
      if (prev >= level && v < level) {
        const double t = (prev - level) / (prev - v);
        crossing = prev_r + t * (r - prev_r);
        break;
      }
      prev = v;
      prev_r = r;
    }
    if (crossing < 0.0)
      throw std::domain_error("isoline_ratio: level set not closed within the field");
    rmin = std::min(rmin, crossing);
    rmax = std::max(rmax, crossing);
  }
  return rmax / rmin;
}

ErrorStats error_stats(const WignerField& approx, const WignerField& exact) {
  if (!approx.same_grid(exact)) throw std::invalid_argument("error_stats: mismatched grids");
  const double peak = exact.values.cwiseAbs().maxCoeff();
  if (!(peak > 0.0)) throw std::domain_error("error_stats: exact field vanishes");
  const Eigen::MatrixXd rel = (approx.values - exact.values).cwiseAbs() / peak;
  return {rel.maxCoeff(), rel.mean()};
}

double agreement_fraction(const WignerField& approx, const WignerField& exact,
                          double precision) {
  if (!approx.same_grid(exact))
    throw std::invalid_argument("agreement_fraction: mismatched grids");
  if (!(precision > 0.0))
    throw std::invalid_argument("agreement_fraction: precision must be > 0");
  const auto diff = (approx.values - exact.values).cwiseAbs();
  const auto agree = (diff.array() <= precision).count();
  return static_cast<double>(agree) / static_cast<double>(diff.size());
}

CriteriaReport criteria_report(cplx alpha, double tau, int m_cut, const Region& region,
                               double step) {
  const int dim = std::max(default_fock_dim(alpha), m_cut + 2);
  const FockVector truncated = truncated_kerr_state({alpha, tau, m_cut}, dim);
  const FockVector exact = apply_kerr_phase(coherent_state(alpha, dim), tau);

  const WignerField wm = wigner_grid(truncated, region, step);
  const WignerField wex = wigner_grid(exact, region, step);

  CriteriaReport rep;
  for (double level : {0.1, 0.3, 0.5})
    rep.isoline_ratios[level] = isoline_ratio(wm, level, alpha);
  const ErrorStats es = error_stats(wm, wex);
  rep.max_rel_err = es.max_rel;
  rep.avg_rel_err = es.avg_rel;
  for (double precision : {1e-2, 1e-3})
    rep.agreement[precision] = agreement_fraction(wm, wex, precision);
  rep.fidelity = truncation_fidelity(alpha, m_cut);
  return rep;
}

}  // namespace kerrforge
