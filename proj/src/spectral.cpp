#include "stwave/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stwave/geometry.hpp"
#include "stwave/linalg.hpp"

namespace stwave {

double coupling_coefficient(int k, int l, double length, double horizon) {
  if (k < 0 || l < 0) throw std::domain_error("coupling_coefficient: k, l >= 0");
  if (!(length > 0.0) || !(horizon > length)) {
    throw std::domain_error("coupling_coefficient: requires 0 < L < T");
  }
  if ((k - l) % 2 != 0) return 0.0;
  double theta = 0.5 * std::numbers::pi * length / horizon;
  if (k == l) {
    return 2.0 * (1.0 - length / horizon) * std::cos((2.0 * k + 1.0) * theta);
  }
  return 4.0 / std::numbers::pi * std::sqrt(2.0 * k + 1.0) *
         std::sqrt(2.0 * l + 1.0) /
         (static_cast<double>(k + l + 1) * static_cast<double>(k - l)) *
         std::cos((k + l + 1) * theta) * std::sin((l - k) * theta);
}

CouplingFactor::CouplingFactor(double length, double horizon, int m, int k_max)
    : m_(m), k_max_(k_max) {
  if (m < 0 || k_max < m) {
    throw std::domain_error("CouplingFactor: need m >= 0 and k_max >= m");
  }
  if (!(length > 0.0) || !(horizon > length)) {
    throw std::domain_error("CouplingFactor: requires 0 < L < T");
  }
  double theta = 0.5 * std::numbers::pi * length / horizon;
  diag_scale_ = 2.0 * (1.0 - length / horizon);
  off_scale_ = 4.0 / std::numbers::pi;
  int table_size = k_max_ + m_ + 2;
  cos_table_.resize(table_size);
  sin_table_.resize(table_size);
  for (int j = 0; j < table_size; ++j) {
    cos_table_[j] = std::cos(j * theta);
    sin_table_[j] = std::sin(j * theta);
  }
  sqrt_table_.resize(k_max_ + 1);
  for (int k = 0; k <= k_max_; ++k) sqrt_table_[k] = std::sqrt(2.0 * k + 1.0);
}

double CouplingFactor::entry(int k, int l) const {
  if (k == l) return diag_scale_ * cos_table_[2 * k + 1];
  double s = l > k ? sin_table_[l - k] : -sin_table_[k - l];
  return off_scale_ * sqrt_table_[k] * sqrt_table_[l] /
         (static_cast<double>(k + l + 1) * static_cast<double>(k - l)) *
         cos_table_[k + l + 1] * s;
}

void CouplingFactor::apply(const double* x, double* y, Exec exec) const {
  for_index(rows(), exec, [&](std::ptrdiff_t k) {
    double sum = 0.0;
    for (int l = static_cast<int>(k) % 2; l <= m_; l += 2) {
      sum += entry(static_cast<int>(k), l) * x[l];
    }
    y[k] = sum;
  });
}

void CouplingFactor::apply_transpose(const double* y, double* z, Exec exec) const {
  for_index(cols(), exec, [&](std::ptrdiff_t l) {
    double sum = 0.0;
    for (int k = static_cast<int>(l) % 2; k <= k_max_; k += 2) {
      sum += entry(k, static_cast<int>(l)) * y[k];
    }
    z[l] = sum;
  });
}

double lambda_max_coupling(const CouplingMatrixSpec& spec, double power_tol,
                           Exec exec, std::vector<double>* warm_start) {
  CouplingFactor factor(spec.length, spec.horizon, spec.m, spec.k_max);
  auto apply = [&](const double* x, double* y) { factor.apply(x, y, exec); };
  auto apply_t = [&](const double* y, double* z) {
    factor.apply_transpose(y, z, exec);
  };
  if (warm_start) warm_start->resize(factor.cols(), 0.0);
  return power_max_gram(factor.rows(), factor.cols(), apply, apply_t, power_tol,
                        warm_start);
}

double lambda_max_cm(double length, double horizon, int m, int kmax_factor,
                     double power_tol, Exec exec) {
  if (horizon <= length) return 0.0;
  if (m < 0 || kmax_factor < 1) {
    throw std::domain_error("lambda_max_cm: invalid parameters");
  }
  int k_max = kmax_factor * (m + 1);
  if (k_max < m) k_max = m;
  Vector eigvec;
  double prev = -1.0;
  for (int attempt = 0; attempt < 12; ++attempt) {
    CouplingFactor factor(length, horizon, m, k_max);
    auto apply = [&](const double* x, double* y) { factor.apply(x, y, exec); };
    auto apply_t = [&](const double* y, double* z) {
      factor.apply_transpose(y, z, exec);
    };
    double value = power_max_gram(factor.rows(), factor.cols(), apply, apply_t,
                                  power_tol, &eigvec);
    if (prev >= 0.0 &&
        std::abs(value - prev) <= 1e-4 * std::max(value, 1e-300)) {
      return value;
    }
    prev = value;
    k_max *= 2;
  }
  throw std::runtime_error("lambda_max_cm: k_max escalation did not converge");
}

double conjectured_constant(double length, double horizon) {
  int n = time_slice_count(length, horizon);
  // 2 - 4 sin^2(pi/(2(n+1))) = 2 cos(pi/(n+1)), exactly 0 for n = 1
  if (n == 1) return 0.0;
  double s = std::sin(std::numbers::pi / (2.0 * (n + 1)));
  return 2.0 - 4.0 * s * s;
}

std::vector<SpectralRow> figure_sweep(double length,
                                      const std::vector<double>& horizons,
                                      int m, int kmax_factor, Exec exec) {
  std::vector<SpectralRow> rows;
  rows.reserve(horizons.size());
  for (double horizon : horizons) {
    double sqrt_lambda = 0.0;
    if (horizon > length) {
      sqrt_lambda = std::sqrt(lambda_max_cm(length, horizon, m, kmax_factor,
                                            1e-6, exec));
    }
    rows.push_back({horizon, sqrt_lambda, conjectured_constant(length, horizon)});
  }
  return rows;
}

}  // namespace stwave
