// Wigner-function evaluation for pure Fock superpositions and the
// truncation-quality criteria (isoline ratios, peak-relative errors,
// agreement fractions).
#ifndef KERRFORGE_WIGNER_HPP
#define KERRFORGE_WIGNER_HPP

#include <map>

#include "kerrforge/fock.hpp"

namespace kerrforge {

struct Region {
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
};

// Side-4 square centered on alpha; captures the reference-table region.
Region default_region(cplx alpha);

// Real Wigner values on the regular grid re_min + i*step, im_min + j*step.
struct WignerField {
  Region region;
  double step = 0.0;
  Eigen::MatrixXd values;  // nx x ny, row = Re index, col = Im index

  int nx() const { return static_cast<int>(values.rows()); }
  int ny() const { return static_cast<int>(values.cols()); }
  double re(int i) const { return region.re_min + i * step; }
  double im(int j) const { return region.im_min + j * step; }
  double integral() const { return values.sum() * step * step; }
  bool same_grid(const WignerField& other) const;
};

// Associated Laguerre polynomial L_n^k(x) via the stable three-term
// recurrence.
double laguerre_assoc(int n, int k, double x);

// W(gamma) = (2/pi) <psi| D(2 gamma) Pi |psi> in Laguerre closed form.
// Precomputes the state-dependent coefficient tables once; evaluation is
// O(dim^2) per point.
class WignerEvaluator {
 public:
  explicit WignerEvaluator(const FockVector& state);
  double operator()(cplx gamma) const;

 private:
  int dim_;
  Eigen::VectorXd diag_;    // |c_n|^2 (-1)^n
  Eigen::MatrixXcd cross_;  // cross_(n,d) = conj(c_{n+d}) c_n (-1)^n sqrt(n!/(n+d)!)
};

double wigner_point(const FockVector& state, cplx gamma);

// Field of wigner_point values; rows are evaluated in parallel when hardware
// threads are available, bit-identical to the serial result.
WignerField wigner_grid(const FockVector& state, const Region& region, double step);

// Level set of the raw field at `level`, extracted by radial scanning from
// `center` (bilinear field interpolation, linear crossing interpolation,
// first crossing per ray). Returns max/min crossing distance. Throws when the
// level does not enclose the center or a ray never crosses inside the field.
double isoline_ratio(const WignerField& field, double level, cplx center, int rays = 720);

struct ErrorStats {
  double max_rel = 0.0;
  double avg_rel = 0.0;
};

// Pointwise |approx - exact| relative to the peak magnitude of the exact
// field, max and mean over the whole grid.
ErrorStats error_stats(const WignerField& approx, const WignerField& exact);

// Fraction of grid nodes with |approx - exact| <= precision (raw values).
double agreement_fraction(const WignerField& approx, const WignerField& exact,
                          double precision);

struct CriteriaReport {
  std::map<double, double> isoline_ratios;  // level -> max/min distance ratio
  double max_rel_err = 0.0;
  double avg_rel_err = 0.0;
  std::map<double, double> agreement;  // precision -> fraction in [0,1]
  double fidelity = 0.0;               // truncation_fidelity(alpha, m_cut)
};

// Aggregates the three truncation criteria plus the closed-form fidelity for
// one (alpha, tau, M) on the given grid.
CriteriaReport criteria_report(cplx alpha, double tau, int m_cut, const Region& region,
                               double step);

inline constexpr double kWignerBound = 2.0 / 3.14159265358979323846;  // 2/pi

}  // namespace kerrforge

#endif
