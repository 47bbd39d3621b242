#ifndef STWAVE_EXPERIMENTS_HPP
#define STWAVE_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "stwave/assembly.hpp"

namespace stwave {

struct ConvergenceConfig {
  std::string case_name = "smooth";  // smooth | singular | traveling
  Formulation formulation = Formulation::ht;
  double length = 3.0;
  double horizon = 6.0;
  int level_min = 3;
  int level_max = 8;
  AssemblyMethod method = AssemblyMethod::kernel_quadrature;
  Exec exec = Exec::parallel;
};

struct ConvergenceRow {
  int level;
  int total_elements;
  double error_l2;
  double rate;  // NaN on the first level
};

/// Uniform refinement study: per level N0 = NL = 2^(level+1), assemble,
/// solve, measure the L^2 density error and the convergence rate.
std::vector<ConvergenceRow> run_convergence(const ConvergenceConfig& cfg);

std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

struct SpectralConfig {
  double length = 1.0;
  double horizon_min = 1.0;
  double horizon_max = 8.0;
  double horizon_step = 1.0;
  int m = 2000;
  int kmax_factor = 8;
  Exec exec = Exec::parallel;
};

struct SpectralResultRow {
  double horizon;
  double sqrt_lambda_max;
  double conjectured;
  double abs_diff;
};

std::vector<SpectralResultRow> run_spectral(const SpectralConfig& cfg);

std::string spectral_csv(const std::vector<SpectralResultRow>& rows);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Deterministic invariant suite over all modules; fast mode shrinks sizes.
std::vector<CheckResult> run_verify(bool fast);

}  // namespace stwave

#endif
