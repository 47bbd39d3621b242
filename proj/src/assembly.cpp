#include "stwave/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stwave/fourier.hpp"
#include "stwave/quadrature.hpp"

namespace stwave {

namespace {

double overlap(double a0, double a1, double b0, double b1) {
  return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

struct DofInfo {
  Side side;
  double left, right;
};

std::vector<DofInfo> dof_table(const LateralMesh& mesh) {
  std::vector<DofInfo> dofs;
  dofs.reserve(mesh.total_elements());
  for (Side s : {Side::zero, Side::ell}) {
    for (int e = 0; e < mesh.element_count(s); ++e) {
      dofs.push_back({s, mesh.element_left(s, e), mesh.element_right(s, e)});
    }
  }
  return dofs;
}

}  // namespace

DenseMatrix assemble_energetic(const LateralMesh& mesh) {
  const double length = mesh.geometry().length;
  const std::vector<DofInfo> dofs = dof_table(mesh);
  const int n = static_cast<int>(dofs.size());
  DenseMatrix a(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const DofInfo& test = dofs[i];
      const DofInfo& trial = dofs[j];
      double v;
      if (test.side == trial.side) {
        v = overlap(test.left, test.right, trial.left, trial.right);
      } else {
        v = overlap(test.left, test.right, trial.left + length,
                    trial.right + length);
      }
      a(i, j) = 0.5 * v;
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// transform-weighted matrix, kernel quadrature path

namespace {

DenseMatrix assemble_ht_kernel(const LateralMesh& mesh, Exec exec) {
  const double length = mesh.geometry().length;
  const double horizon = mesh.geometry().horizon;
  const std::vector<DofInfo> dofs = dof_table(mesh);
  const int n = static_cast<int>(dofs.size());
  DenseMatrix a(n, n);
  const double scale = -0.5 / std::numbers::pi;
  for_index(static_cast<std::ptrdiff_t>(n) * n, exec, [&](std::ptrdiff_t idx) {
    int j = static_cast<int>(idx / n);
    int i = static_cast<int>(idx % n);
    const DofInfo& test = dofs[i];
    const DofInfo& trial = dofs[j];
    double s_lo = trial.left;
    double s_hi = trial.right;
    if (test.side != trial.side) {
      s_lo += length;
      s_hi = std::min(s_hi + length, horizon);
      if (s_hi <= s_lo) {
        a(i, j) = 0.0;
        return;
      }
    }
    a(i, j) = scale * kernel_rect_integral(s_lo, s_hi, test.left, test.right,
                                           horizon);
  });
  return a;
}

// ---------------------------------------------------------------------------
// transform-weighted matrix, Fourier truncation path
//
// entry(i,j) = sum_k s_k((V phi_j)_{side(i)}) * integral of cos over tau_i,
// accumulated in k-chunks so that the trigonometric work stays O(K n)
// while the entry updates are O(K n^2).

// sine coefficient (2/T scaling included) of the clipped ramp
//   r(t) = 0 for t < lo, t - lo on [lo, hi], hi - lo for t > hi
// which is the antiderivative of the indicator of [lo, hi] shifted into
// [0, horizon]
double ramp_sine_coefficient(double lo, double hi, double horizon,
                             double lambda) {
  if (lo >= horizon) return 0.0;
  double hi_c = std::min(hi, horizon);
  double value = 0.0;
  if (hi_c > lo) {
    double mid = 0.5 * (lo + hi_c);
    value += detail::sin_moment(lo, hi_c, mid - lo, 1.0, lambda);
  }
  if (hi < horizon) {
    value += detail::sin_moment(hi, horizon, hi - lo, 0.0, lambda);
  }
  return 2.0 / horizon * value;
}

int initial_modes(const TruncationControl& trunc, const LateralMesh& mesh) {
  int k0 = trunc.initial > 0 ? trunc.initial
                             : default_mode_count(mesh.total_elements());
  return std::min(k0, trunc.max_modes);
}

DenseMatrix assemble_ht_fourier(const LateralMesh& mesh, Exec exec,
                                const TruncationControl& trunc) {
  const double length = mesh.geometry().length;
  const double horizon = mesh.geometry().horizon;
  const std::vector<DofInfo> dofs = dof_table(mesh);
  const int n = static_cast<int>(dofs.size());
  DenseMatrix a(n, n);

  const int chunk = 256;
  std::vector<double> cos_moments(static_cast<std::size_t>(chunk) * n);
  std::vector<double> sine_coeffs(static_cast<std::size_t>(chunk) * 2 * n);

  auto run_modes = [&](int k_begin, int k_end) {
    for (int base = k_begin; base < k_end; base += chunk) {
      int count = std::min(chunk, k_end - base);
      for_index(count, exec, [&](std::ptrdiff_t kk) {
        int k = base + static_cast<int>(kk);
        double lambda = angular_frequency(k) / horizon;
        double* cm = cos_moments.data() + kk * n;
        double* sc = sine_coeffs.data() + kk * 2 * n;
        for (int i = 0; i < n; ++i) {
          cm[i] = detail::cos_moment(dofs[i].left, dofs[i].right, 1.0, 0.0,
                                     lambda);
        }
        for (int j = 0; j < n; ++j) {
          // component of V phi_j on the trial side and on the opposite side
          double same = 0.5 * ramp_sine_coefficient(dofs[j].left, dofs[j].right,
                                                    horizon, lambda);
          double cross = 0.5 * ramp_sine_coefficient(dofs[j].left + length,
                                                     dofs[j].right + length,
                                                     horizon, lambda);
          int side_j = dofs[j].side == Side::zero ? 0 : 1;
          sc[side_j * n + j] = same;
          sc[(1 - side_j) * n + j] = cross;
        }
      });
      for_index(n, exec, [&](std::ptrdiff_t j) {
        double* col = a.data() + j * n;
        for (int kk = 0; kk < count; ++kk) {
          const double* cm = cos_moments.data() + static_cast<std::size_t>(kk) * n;
          const double* sc = sine_coeffs.data() + static_cast<std::size_t>(kk) * 2 * n;
          double s_zero = sc[j];
          double s_ell = sc[n + j];
          for (int i = 0; i < n; ++i) {
            col[i] += (dofs[i].side == Side::zero ? s_zero : s_ell) * cm[i];
          }
        }
      });
    }
  };

  int k0 = initial_modes(trunc, mesh);
  run_modes(0, k0);
  int k = k0;
  while (true) {
    DenseMatrix before = a;
    if (2 * k > trunc.max_modes) {
      throw std::runtime_error(
          "assemble_ht: Fourier truncation did not converge within the mode cap");
    }
    run_modes(k, 2 * k);
    k *= 2;
    double change = max_abs_diff(a, before);
    double scale = max_abs(a);
    if (change <= trunc.rel_tol * std::max(scale, 1e-300)) break;
  }
  return a;
}

}  // namespace

DenseMatrix assemble_ht(const LateralMesh& mesh, AssemblyMethod method,
                        Exec exec, const TruncationControl& trunc) {
  return method == AssemblyMethod::kernel_quadrature
             ? assemble_ht_kernel(mesh, exec)
             : assemble_ht_fourier(mesh, exec, trunc);
}

// ---------------------------------------------------------------------------
// trace projection

namespace {

std::vector<double> project_side(const LateralMesh& mesh, Side side,
                                 const std::function<double(double)>& g,
                                 const std::vector<double>& kinks) {
  const std::vector<double>& nodes = mesh.nodes(side);
  const int n = static_cast<int>(nodes.size()) - 1;  // dofs at nodes 1..n

  auto moment = [&](double lo, double hi, double node, double h, bool rising) {
    // integral of g * hat over [lo, hi], hat = (t-node+h)/h rising to the
    // node or (node+h-t)/h falling from it; split at interior kinks
    std::vector<double> cuts{lo};
    for (double c : kinks) {
      if (c > lo && c < hi) cuts.push_back(c);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    double sum = 0.0;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
      auto f = [&](double t) {
        double hat = rising ? (t - (node - h)) / h : ((node + h) - t) / h;
        return g(t) * hat;
      };
      sum += integrate_gauss(f, cuts[p], cuts[p + 1], 10);
    }
    return sum;
  };

  std::vector<double> diag(n), lower(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
  for (int i = 1; i <= n; ++i) {
    double h_left = nodes[i] - nodes[i - 1];
    double h_right = i < n ? nodes[i + 1] - nodes[i] : 0.0;
    diag[i - 1] = h_left / 3.0 + h_right / 3.0;
    if (i < n) upper[i - 1] = h_right / 6.0;
    if (i > 1) lower[i - 1] = h_left / 6.0;
    rhs[i - 1] = moment(nodes[i - 1], nodes[i], nodes[i], h_left, true);
    if (i < n) {
      rhs[i - 1] += moment(nodes[i], nodes[i + 1], nodes[i], h_right, false);
    }
  }

  // Thomas algorithm
  for (int i = 1; i < n; ++i) {
    double m = lower[i] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
  }

  std::vector<double> values(n + 1, 0.0);
  for (int i = 0; i < n; ++i) values[i + 1] = x[i];
  return values;
}

}  // namespace

TracePair project_trace(const MeshPtr& mesh,
                        const SidePair<std::function<double(double)>>& g,
                        const SidePair<std::vector<double>>& kinks) {
  TracePair out;
  for (Side s : {Side::zero, Side::ell}) {
    std::vector<double> values =
        project_side(*mesh, s, g.component(s), kinks.component(s));
    out.component(s) = PiecewiseLinear(mesh, s, std::move(values), true);
  }
  return out;
}

// ---------------------------------------------------------------------------
// right-hand sides

namespace {

Vector pairing_rhs_energetic(const LateralMesh& mesh, const FunctionPair& z) {
  const std::vector<DofInfo> dofs = dof_table(mesh);
  Vector b(dofs.size());
  for (std::size_t i = 0; i < dofs.size(); ++i) {
    const PiecewisePoly& comp = z.component(dofs[i].side);
    b[i] = comp.eval(dofs[i].right) - comp.eval(dofs[i].left);
  }
  return b;
}

Vector pairing_rhs_ht_kernel(const LateralMesh& mesh, const FunctionPair& z,
                             Exec exec) {
  const double horizon = mesh.geometry().horizon;
  const std::vector<DofInfo> dofs = dof_table(mesh);
  const int n = static_cast<int>(dofs.size());
  if (z.zero.max_degree() > 1 || z.ell.max_degree() > 1) {
    throw std::domain_error("assemble_pairing_rhs: z must be piecewise linear");
  }
  SidePair<PiecewisePoly> dz{z.zero.derivative(), z.ell.derivative()};
  Vector b(n, 0.0);
  const double scale = -1.0 / std::numbers::pi;
  for_index(n, exec, [&](std::ptrdiff_t i) {
    const DofInfo& test = dofs[i];
    const PiecewisePoly& d = dz.component(test.side);
    double sum = 0.0;
    for (int p = 0; p < d.piece_count(); ++p) {
      if (d.piece(p).is_zero()) continue;
      double value = d.piece(p).coeffs()[0];
      sum += value * kernel_rect_integral(d.breakpoints()[p],
                                          d.breakpoints()[p + 1], test.left,
                                          test.right, horizon);
    }
    b[i] = scale * sum;
  });
  return b;
}

Vector pairing_rhs_ht_fourier(const LateralMesh& mesh, const FunctionPair& z,
                              const TruncationControl& trunc) {
  const double horizon = mesh.geometry().horizon;
  const std::vector<DofInfo> dofs = dof_table(mesh);
  const int n = static_cast<int>(dofs.size());
  Vector b(n, 0.0);

  auto run_modes = [&](int k_begin, int k_end) {
    for (int k = k_begin; k < k_end; ++k) {
      double lambda = angular_frequency(k) / horizon;
      SidePair<double> coeff{0.0, 0.0};
      for (Side s : {Side::zero, Side::ell}) {
        const PiecewisePoly& f = z.component(s);
        double sum = 0.0;
        for (int p = 0; p < f.piece_count(); ++p) {
          const Poly& poly = f.piece(p);
          if (poly.is_zero()) continue;
          double c0 = poly.coeffs()[0];
          double c1 = poly.degree() >= 1 ? poly.coeffs()[1] : 0.0;
          sum += detail::sin_moment(f.breakpoints()[p], f.breakpoints()[p + 1],
                                    c0, c1, lambda);
        }
        coeff.component(s) = 2.0 / horizon * sum;
      }
      for (int i = 0; i < n; ++i) {
        b[i] += coeff.component(dofs[i].side) *
                detail::cos_moment(dofs[i].left, dofs[i].right, 1.0, 0.0, lambda);
      }
    }
  };

  if (z.zero.max_degree() > 1 || z.ell.max_degree() > 1) {
    throw std::domain_error("assemble_pairing_rhs: z must be piecewise linear");
  }
  int k0 = initial_modes(trunc, mesh);
  run_modes(0, k0);
  int k = k0;
  while (true) {
    Vector before = b;
    if (2 * k > trunc.max_modes) {
      throw std::runtime_error(
          "assemble_rhs: Fourier truncation did not converge within the mode cap");
    }
    run_modes(k, 2 * k);
    k *= 2;
    double change = 0.0, scale = 0.0;
    for (int i = 0; i < n; ++i) {
      change = std::max(change, std::abs(b[i] - before[i]));
      scale = std::max(scale, std::abs(b[i]));
    }
    if (change <= trunc.rel_tol * std::max(scale, 1e-300)) break;
  }
  return b;
}

}  // namespace

Vector assemble_pairing_rhs(const LateralMesh& mesh, const FunctionPair& z,
                            Formulation formulation, AssemblyMethod method,
                            Exec exec, const TruncationControl& trunc) {
  if (formulation == Formulation::energetic) {
    return pairing_rhs_energetic(mesh, z);
  }
  return method == AssemblyMethod::kernel_quadrature
             ? pairing_rhs_ht_kernel(mesh, z, exec)
             : pairing_rhs_ht_fourier(mesh, z, trunc);
}

Vector assemble_rhs(const LateralMesh& mesh, const TracePair& g_h,
                    Formulation formulation, AssemblyMethod method, Exec exec,
                    const TruncationControl& trunc) {
  if (!g_h.zero.zero_at_start || !g_h.ell.zero_at_start) {
    throw std::domain_error("assemble_rhs: datum must vanish at t=0");
  }
  FunctionPair z = direct_rhs(g_h);
  return assemble_pairing_rhs(mesh, z, formulation, method, exec, trunc);
}

// ---------------------------------------------------------------------------

SolveResult solve(const GalerkinSystem& system) {
  if (system.matrix.rows() != system.matrix.cols() ||
      system.matrix.rows() != static_cast<int>(system.rhs.size())) {
    throw std::domain_error("solve: inconsistent system dimensions");
  }
  LuSolveResult lu = lu_solve(system.matrix, system.rhs);
  const LateralMesh& mesh = *system.mesh;
  int n0 = mesh.element_count(Side::zero);
  int nl = mesh.element_count(Side::ell);
  Vector v0(lu.x.begin(), lu.x.begin() + n0);
  Vector vl(lu.x.begin() + n0, lu.x.begin() + n0 + nl);
  DensityPair w{PiecewiseConstant(system.mesh, Side::zero, std::move(v0)),
                PiecewiseConstant(system.mesh, Side::ell, std::move(vl))};
  return {std::move(w), lu.relative_residual};
}

double l2_error(const DensityPair& w_h, const ManufacturedCase& c) {
  double sum = 0.0;
  for (Side s : {Side::zero, Side::ell}) {
    const PiecewiseConstant& comp = w_h.component(s);
    const LateralMesh& mesh = *comp.mesh;
    const std::vector<double>& kinks = c.kinks.component(s);
    const auto& exact = c.density.component(s);
    for (int e = 0; e < mesh.element_count(s); ++e) {
      double lo = mesh.element_left(s, e);
      double hi = mesh.element_right(s, e);
      double value = comp.values[e];
      std::vector<double> cuts{lo};
      for (double k : kinks) {
        if (k > lo && k < hi) cuts.push_back(k);
      }
      cuts.push_back(hi);
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        auto f = [&](double t) {
          double d = exact(t) - value;
          return d * d;
        };
        sum += integrate_gauss(f, cuts[p], cuts[p + 1], 8);
      }
    }
  }
  return std::sqrt(sum);
}

std::vector<double> eoc(const std::vector<double>& errors) {
  for (double e : errors) {
    if (!(e > 0.0)) throw std::domain_error("eoc: errors must be positive");
  }
  std::vector<double> rates;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    rates.push_back(std::log2(errors[i - 1] / errors[i]));
  }
  return rates;
}

std::vector<double> dual_half_norms(const LateralMesh& mesh,
                                    const std::vector<Vector>& coefficients,
                                    double rel_tol, int max_modes) {
  const double horizon = mesh.geometry().horizon;
  const std::vector<DofInfo> dofs = dof_table(mesh);
  const int n = static_cast<int>(dofs.size());
  const int n0 = mesh.element_count(Side::zero);
  for (const Vector& v : coefficients) {
    if (static_cast<int>(v.size()) != n) {
      throw std::domain_error("dual_half_norms: wrong coefficient length");
    }
  }
  std::vector<double> squares(coefficients.size(), 0.0);
  std::vector<double> moments(n);

  auto run_modes = [&](int k_begin, int k_end) {
    for (int k = k_begin; k < k_end; ++k) {
      double omega = angular_frequency(k);
      double lambda = omega / horizon;
      for (int i = 0; i < n; ++i) {
        moments[i] = 2.0 / horizon *
                     detail::cos_moment(dofs[i].left, dofs[i].right, 1.0, 0.0,
                                        lambda);
      }
      double weight = 0.5 * horizon * horizon / omega;
      for (std::size_t v = 0; v < coefficients.size(); ++v) {
        const Vector& c = coefficients[v];
        double c_zero = 0.0, c_ell = 0.0;
        for (int i = 0; i < n0; ++i) c_zero += moments[i] * c[i];
        for (int i = n0; i < n; ++i) c_ell += moments[i] * c[i];
        squares[v] += weight * (c_zero * c_zero + c_ell * c_ell);
      }
    }
  };

  int k0 = std::min(default_mode_count(n), max_modes);
  run_modes(0, k0);
  int k = k0;
  while (true) {
    std::vector<double> before = squares;
    if (2 * k > max_modes) break;  // tails only lower the norms slightly
    run_modes(k, 2 * k);
    k *= 2;
    bool settled = true;
    for (std::size_t v = 0; v < squares.size(); ++v) {
      if (squares[v] - before[v] > rel_tol * std::max(squares[v], 1e-300)) {
        settled = false;
      }
    }
    if (settled) break;
  }
  std::vector<double> norms(squares.size());
  for (std::size_t v = 0; v < squares.size(); ++v) {
    norms[v] = std::sqrt(squares[v]);
  }
  return norms;
}

}  // namespace stwave
