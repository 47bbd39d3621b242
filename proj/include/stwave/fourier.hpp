#ifndef STWAVE_FOURIER_HPP
#define STWAVE_FOURIER_HPP

#include <vector>

#include "stwave/geometry.hpp"
#include "stwave/piecewise.hpp"

namespace stwave {

/// Frequencies of the half-shifted trigonometric bases on (0,T):
/// sin(omega_k t / T) and cos(omega_k t / T) with omega_k = pi/2 + k pi.
double angular_frequency(int k);

/// Truncated series in the basis sin(((pi/2)+k pi) t/T). Every basis
/// function vanishes at t = 0.
struct SineSeries {
  double horizon = 0.0;
  std::vector<double> coeffs;
};

/// Truncated series in the basis cos(((pi/2)+k pi) t/T). Every basis
/// function vanishes at t = T.
struct CosineSeries {
  double horizon = 0.0;
  std::vector<double> coeffs;
};

double eval(const SineSeries& u, double t);
double eval(const CosineSeries& u, double t);

/// Exact sine coefficients (2/T) * integral of u * sin(omega_k t/T) for a
/// piecewise polynomial of degree <= 1; closed-form elementwise integration,
/// stable for small frequency * element length.
SineSeries sine_coefficients(const PiecewisePoly& u, int modes);
CosineSeries cosine_coefficients(const PiecewisePoly& w, int modes);

SineSeries sine_coefficients(const PiecewiseLinear& u, int modes);
CosineSeries cosine_coefficients(const PiecewiseConstant& w, int modes);

/// The transformation that maps the sine basis to the cosine basis while
/// keeping coefficients; norm preserving and bijective on L^2(0,T).
CosineSeries apply_modified_hilbert(const SineSeries& u);

/// || u ||_{H^{1/2} with zero start} = sqrt(1/2 sum omega_k u_k^2).
double half_norm_zero_start(const SineSeries& u);

/// Norm of the dual of the half-order space with zero final condition:
/// sqrt((T^2/2) sum w_k^2 / omega_k).
double dual_half_norm(const CosineSeries& w);

/// The bilinear form <d/dt u, H_T z> = 1/2 sum omega_k u_k z_k.
double pairing_dt_ht(const SineSeries& u, const SineSeries& z);

/// ln tan(pi(s+t)/(4T)) + ln tan(pi|t-s|/(4T)); logarithmically singular on
/// s = t and at the corners s+t in {0, 2T}. Throws on an exactly singular
/// argument pair.
double log_tan_kernel(double s, double t, double horizon);

/// Default truncation: max(512, 16 * element count).
int default_mode_count(int total_elements);

namespace detail {
/// integral over [a,b] of (c0 + c1 (t - (a+b)/2)) * sin(lambda t) dt
double sin_moment(double a, double b, double c0, double c1, double lambda);
/// same with cos(lambda t)
double cos_moment(double a, double b, double c0, double c1, double lambda);
}  // namespace detail

}  // namespace stwave

#endif
