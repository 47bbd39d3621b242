#ifndef STWAVE_SPECTRAL_HPP
#define STWAVE_SPECTRAL_HPP

#include <vector>

#include "stwave/parallel.hpp"

namespace stwave {

/// Coefficient b_{kl} coupling the two boundary sides in the
/// transform-weighted form, nonzero only for k - l even. Defined for T > L.
double coupling_coefficient(int k, int l, double length, double horizon);

/// Parameters of the coupling Gram matrix C_m: c_{li} = sum_k b_{kl} b_{ki}
/// for l, i = 0..m, with the row sum truncated at k_max.
struct CouplingMatrixSpec {
  double length = 1.0;
  double horizon = 2.0;
  int m = 0;
  int k_max = 0;
};

/// The factor B with B(k, l) = b_{kl}, applied matrix free from cosine
/// tables; C_m = B^T B is never materialized.
class CouplingFactor {
 public:
  CouplingFactor(double length, double horizon, int m, int k_max);
  int rows() const { return k_max_ + 1; }
  int cols() const { return m_ + 1; }
  void apply(const double* x, double* y, Exec exec) const;
  void apply_transpose(const double* y, double* z, Exec exec) const;

 private:
  double entry(int k, int l) const;

  int m_;
  int k_max_;
  double diag_scale_;
  double off_scale_;
  std::vector<double> cos_table_;   // cos(j * pi L / (2T))
  std::vector<double> sin_table_;   // sin(j * pi L / (2T))
  std::vector<double> sqrt_table_;  // sqrt(2k + 1)
};

/// Largest eigenvalue of C_m at fixed truncation k_max. An optional warm
/// start carries the dominant Ritz vector between related solves (padded or
/// truncated to m+1 entries); the reported value can then only improve on
/// the seeded one, which makes monotonicity sweeps in m robust.
double lambda_max_coupling(const CouplingMatrixSpec& spec, double power_tol = 1e-6,
                           Exec exec = Exec::parallel,
                           std::vector<double>* warm_start = nullptr);

/// Largest eigenvalue of C_m with the row cutoff escalated by doubling from
/// kmax_factor*(m+1) until the value changes by less than 1e-4 relative.
/// Returns 0 for T <= L (no coupling).
double lambda_max_cm(double length, double horizon, int m, int kmax_factor = 8,
                     double power_tol = 1e-6, Exec exec = Exec::parallel);

/// 2 - 4 sin^2(pi / (2(n+1))) with n the time slice count; the observed
/// limit of sqrt(lambda_max(C_m)).
double conjectured_constant(double length, double horizon);

struct SpectralRow {
  double horizon;
  double sqrt_lambda_max;
  double conjectured;
};

std::vector<SpectralRow> figure_sweep(double length,
                                      const std::vector<double>& horizons,
                                      int m, int kmax_factor = 8,
                                      Exec exec = Exec::parallel);

}  // namespace stwave

#endif
