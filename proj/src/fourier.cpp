#include "stwave/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stwave {

double angular_frequency(int k) {
  return std::numbers::pi * (0.5 + static_cast<double>(k));
}

double eval(const SineSeries& u, double t) {
  double s = 0.0;
  for (std::size_t k = 0; k < u.coeffs.size(); ++k) {
    s += u.coeffs[k] * std::sin(angular_frequency(static_cast<int>(k)) * t / u.horizon);
  }
  return s;
}

double eval(const CosineSeries& u, double t) {
  double s = 0.0;
  for (std::size_t k = 0; k < u.coeffs.size(); ++k) {
    s += u.coeffs[k] * std::cos(angular_frequency(static_cast<int>(k)) * t / u.horizon);
  }
  return s;
}

namespace detail {

// sin(phi) - phi cos(phi), switched to its series for small phi where the
// direct difference cancels
double sin_minus_phicos(double phi) {
  if (std::abs(phi) >= 0.5) return std::sin(phi) - phi * std::cos(phi);
  double phi2 = phi * phi;
  double term = phi * phi2 / 3.0;  // j = 1
  double sum = term;
  for (int j = 2; j <= 10; ++j) {
    // t_j = (-1)^{j+1} phi^{2j+1} (2j) / (2j+1)!
    term *= -phi2 * (2.0 * j) / ((2.0 * j - 2.0) * (2.0 * j) * (2.0 * j + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double sin_moment(double a, double b, double c0, double c1, double lambda) {
  double m = 0.5 * (a + b);
  double phi = 0.5 * lambda * (b - a);
  double base = (2.0 / lambda) * std::sin(lambda * m) * std::sin(phi);
  double lin = (2.0 / (lambda * lambda)) * std::cos(lambda * m) * sin_minus_phicos(phi);
  return c0 * base + c1 * lin;
}

double cos_moment(double a, double b, double c0, double c1, double lambda) {
  double m = 0.5 * (a + b);
  double phi = 0.5 * lambda * (b - a);
  double base = (2.0 / lambda) * std::cos(lambda * m) * std::sin(phi);
  double lin = -(2.0 / (lambda * lambda)) * std::sin(lambda * m) * sin_minus_phicos(phi);
  return c0 * base + c1 * lin;
}

}  // namespace detail

namespace {

enum class Basis { sine, cosine };

std::vector<double> coefficients(const PiecewisePoly& f, int modes, Basis basis) {
  if (modes < 1) throw std::domain_error("coefficients: mode count must be >= 1");
  if (f.max_degree() > 1) {
    throw std::domain_error("coefficients: piecewise degree must be <= 1");
  }
  const double horizon = f.horizon();
  std::vector<double> c(modes, 0.0);
  for (int k = 0; k < modes; ++k) {
    double lambda = angular_frequency(k) / horizon;
    double sum = 0.0;
    for (int p = 0; p < f.piece_count(); ++p) {
      const Poly& poly = f.piece(p);
      if (poly.is_zero()) continue;
      double c0 = poly.coeffs()[0];
      double c1 = poly.degree() >= 1 ? poly.coeffs()[1] : 0.0;
      double a = f.breakpoints()[p];
      double b = f.breakpoints()[p + 1];
      sum += basis == Basis::sine ? detail::sin_moment(a, b, c0, c1, lambda)
                                  : detail::cos_moment(a, b, c0, c1, lambda);
    }
    c[k] = 2.0 / horizon * sum;
  }
  return c;
}

}  // namespace

SineSeries sine_coefficients(const PiecewisePoly& u, int modes) {
  return {u.horizon(), coefficients(u, modes, Basis::sine)};
}

CosineSeries cosine_coefficients(const PiecewisePoly& w, int modes) {
  return {w.horizon(), coefficients(w, modes, Basis::cosine)};
}

SineSeries sine_coefficients(const PiecewiseLinear& u, int modes) {
  if (!u.zero_at_start) {
    throw std::domain_error("sine_coefficients: trace must vanish at t=0");
  }
  PiecewisePoly f = PiecewisePoly::interpolant(
      u.mesh->geometry().horizon, u.mesh->nodes(u.side), u.nodal_values);
  return sine_coefficients(f, modes);
}

CosineSeries cosine_coefficients(const PiecewiseConstant& w, int modes) {
  PiecewisePoly f = PiecewisePoly::step(w.mesh->geometry().horizon,
                                        w.mesh->nodes(w.side), w.values);
  return cosine_coefficients(f, modes);
}

CosineSeries apply_modified_hilbert(const SineSeries& u) {
  return {u.horizon, u.coeffs};
}

double half_norm_zero_start(const SineSeries& u) {
  double s = 0.0;
  for (std::size_t k = 0; k < u.coeffs.size(); ++k) {
    s += angular_frequency(static_cast<int>(k)) * u.coeffs[k] * u.coeffs[k];
  }
  return std::sqrt(0.5 * s);
}

double dual_half_norm(const CosineSeries& w) {
  double s = 0.0;
  for (std::size_t k = 0; k < w.coeffs.size(); ++k) {
    s += w.coeffs[k] * w.coeffs[k] / angular_frequency(static_cast<int>(k));
  }
  return std::sqrt(0.5 * w.horizon * w.horizon * s);
}

double pairing_dt_ht(const SineSeries& u, const SineSeries& z) {
  if (u.horizon != z.horizon) {
    throw std::domain_error("pairing_dt_ht: mismatched horizons");
  }
  std::size_t n = std::min(u.coeffs.size(), z.coeffs.size());
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    s += angular_frequency(static_cast<int>(k)) * u.coeffs[k] * z.coeffs[k];
  }
  return 0.5 * s;
}

double log_tan_kernel(double s, double t, double horizon) {
  double sum = s + t;
  double diff = std::abs(t - s);
  if (diff == 0.0 || sum == 0.0 || sum == 2.0 * horizon) {
    throw std::domain_error("log_tan_kernel: singular argument");
  }
  double a = std::numbers::pi / (4.0 * horizon);
  return std::log(std::tan(a * sum)) + std::log(std::tan(a * diff));
}

int default_mode_count(int total_elements) {
  return std::max(512, 16 * total_elements);
}

}  // namespace stwave
