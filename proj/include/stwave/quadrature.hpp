#ifndef STWAVE_QUADRATURE_HPP
#define STWAVE_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace stwave {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached Gauss-Legendre rule of the given order (thread safe).
const GaussRule& gauss_rule(int order);

double integrate_gauss(const std::function<double(double)>& f, double a,
                       double b, int order);

double integrate_composite(const std::function<double(double)>& f, double a,
                           double b, int panels, int order);

struct GradedOptions {
  int base_panels = 4;
  int levels = 10;
  double ratio = 0.15;
  int order = 12;
};

/// Composite Gauss with geometric refinement of the outermost panels toward
/// the endpoints flagged as (near-)singular.
double integrate_graded(const std::function<double(double)>& f, double a,
                        double b, bool grade_left, bool grade_right,
                        const GradedOptions& opts);

/// Integral of the log-tan kernel over the rectangle [s0,s1] x [t0,t1]
/// inside [0,T]^2. The kernel splits into functions of s+t and |t-s|, so the
/// rectangle integral reduces to 1d integrals against trapezoidal weights;
/// the logarithmic endpoint parts are integrated in closed form and only an
/// analytic remainder is left to Gauss quadrature. Accurate to ~1e-13
/// relative to the rectangle scale.
double kernel_rect_integral(double s0, double s1, double t0, double t1,
                            double horizon);

/// Reference evaluation of the same integral: iterated Gauss quadrature with
/// a split along the diagonal s = t and geometric grading toward the
/// singular line and corners. Slow; kept for validation.
double kernel_rect_integral_graded(double s0, double s1, double t0, double t1,
                                   double horizon,
                                   const GradedOptions& opts = {});

/// Reference evaluation of the weighted pairing
/// integral over (0,T)^2 of p(t) K(s,t) q(s) ds dt for smooth p, q, with the
/// same diagonal splitting and grading.
double kernel_pairing_graded(const std::function<double(double)>& p,
                             const std::function<double(double)>& q,
                             double horizon, const GradedOptions& opts = {});

}  // namespace stwave

#endif
