#include "stwave/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "stwave/fourier.hpp"
#include "stwave/quadrature.hpp"
#include "stwave/spectral.hpp"

namespace stwave {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5e", v);
  return buf;
}

ManufacturedCase make_case(const std::string& name,
                           const ProblemGeometry& geometry) {
  if (name == "smooth") return case_smooth(geometry);
  if (name == "singular") return case_singular(geometry);
  if (name == "traveling") {
    return case_traveling(cubic_bump_pulse(geometry.horizon), geometry);
  }
  throw std::domain_error("unknown case: " + name);
}

}  // namespace

std::vector<ConvergenceRow> run_convergence(const ConvergenceConfig& cfg) {
  if (cfg.level_min > cfg.level_max || cfg.level_min < 0) {
    throw std::domain_error("run_convergence: bad level range");
  }
  ProblemGeometry geometry(cfg.length, cfg.horizon);
  ManufacturedCase c = make_case(cfg.case_name, geometry);

  std::vector<ConvergenceRow> rows;
  double previous_error = 0.0;
  for (int level = cfg.level_min; level <= cfg.level_max; ++level) {
    int n_side = 1 << (level + 1);
    auto mesh = std::make_shared<const LateralMesh>(
        LateralMesh::uniform(geometry, n_side, n_side));
    DenseMatrix a = cfg.formulation == Formulation::energetic
                        ? assemble_energetic(*mesh)
                        : assemble_ht(*mesh, cfg.method, cfg.exec);
    TracePair g_h = project_trace(mesh, c.trace, c.kinks);
    Vector b = assemble_rhs(*mesh, g_h, cfg.formulation, cfg.method, cfg.exec);
    SolveResult sol = solve({mesh, std::move(a), std::move(b)});
    double error = l2_error(sol.density, c);
    double rate = rows.empty() ? std::numeric_limits<double>::quiet_NaN()
                               : std::log2(previous_error / error);
    rows.push_back({level, mesh->total_elements(), error, rate});
    previous_error = error;
  }
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "level,N_total,error_l2,eoc\n";
  for (const ConvergenceRow& r : rows) {
    out << r.level << ',' << r.total_elements << ',' << fmt(r.error_l2) << ',';
    if (!std::isnan(r.rate)) out << fmt(r.rate);
    out << '\n';
  }
  return out.str();
}

std::vector<SpectralResultRow> run_spectral(const SpectralConfig& cfg) {
  if (!(cfg.length > 0.0) || cfg.m < 1 || cfg.kmax_factor < 1 ||
      !(cfg.horizon_step > 0.0) || cfg.horizon_max < cfg.horizon_min) {
    throw std::domain_error("run_spectral: bad configuration");
  }
  std::vector<double> horizons;
  for (double t = cfg.horizon_min; t <= cfg.horizon_max + 1e-12 * cfg.horizon_step;
       t += cfg.horizon_step) {
    horizons.push_back(t);
  }
  std::vector<SpectralRow> rows =
      figure_sweep(cfg.length, horizons, cfg.m, cfg.kmax_factor, cfg.exec);
  std::vector<SpectralResultRow> out;
  out.reserve(rows.size());
  for (const SpectralRow& r : rows) {
    out.push_back({r.horizon, r.sqrt_lambda_max, r.conjectured,
                   std::abs(r.sqrt_lambda_max - r.conjectured)});
  }
  return out;
}

std::string spectral_csv(const std::vector<SpectralResultRow>& rows) {
  std::ostringstream out;
  out << "T,sqrt_lambda_max,conjectured,abs_diff\n";
  for (const SpectralResultRow& r : rows) {
    out << fmt(r.horizon) << ',' << fmt(r.sqrt_lambda_max) << ','
        << fmt(r.conjectured) << ',' << fmt(r.abs_diff) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// verify

namespace {

using Rng = std::mt19937_64;

double quadrature_l2_norm(const std::function<double(double)>& f, double horizon,
                          int panels) {
  auto sq = [&](double t) {
    double v = f(t);
    return v * v;
  };
  return std::sqrt(integrate_composite(sq, 0.0, horizon, panels, 20));
}

SineSeries random_sine(Rng& rng, double horizon, int modes) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  SineSeries u{horizon, std::vector<double>(modes)};
  for (double& c : u.coeffs) c = unif(rng);
  return u;
}

DensityPair random_density(Rng& rng, const MeshPtr& mesh) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  DensityPair w;
  for (Side s : {Side::zero, Side::ell}) {
    std::vector<double> values(mesh->element_count(s));
    for (double& v : values) v = unif(rng);
    w.component(s) = PiecewiseConstant(mesh, s, values);
  }
  return w;
}

Vector random_vector(Rng& rng, int n) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Vector v(n);
  for (double& x : v) x = unif(rng);
  return v;
}

struct Suite {
  bool fast;
  std::vector<CheckResult> results;

  void check(const std::string& name, double worst, double bound) {
    bool pass = worst <= bound;
    std::ostringstream detail;
    detail << "max deviation " << fmt(worst) << " (bound " << fmt(bound) << ")";
    results.push_back({name, pass, detail.str()});
  }
};

void verify_mesh(Suite& s) {
  Rng rng(101);
  std::uniform_real_distribution<double> unif(0.1, 10.0);
  double worst = 0.0;
  for (int it = 0; it < 200; ++it) {
    double length = unif(rng), horizon = unif(rng);
    int n = time_slice_count(length, horizon);
    bool ok = horizon <= n * length && (n == 1 || (n - 1) * length < horizon);
    if (!ok) worst = 1.0;
  }
  s.check("mesh: slice count bracket", worst, 0.0);

  worst = 0.0;
  for (int n_side : {3, 7, 16, 64}) {
    ProblemGeometry geometry(3.0, 6.0);
    LateralMesh mesh = LateralMesh::uniform(geometry, n_side, 2 * n_side);
    for (Side side : {Side::zero, Side::ell}) {
      double sum = 0.0;
      for (int e = 0; e < mesh.element_count(side); ++e) {
        sum += mesh.element_length(side, e);
      }
      worst = std::max(worst, std::abs(sum - geometry.horizon) / geometry.horizon);
    }
  }
  s.check("mesh: element lengths sum to the horizon", worst, 1e-13);

  auto mesh = std::make_shared<const LateralMesh>(
      LateralMesh::uniform(ProblemGeometry(3.0, 6.0), 8, 8));
  worst = 0.0;
  for (int it = 0; it < 50; ++it) {
    DensityPair a = random_density(rng, mesh);
    DensityPair b = random_density(rng, mesh);
    double na = l2_norm_sigma(a), nb = l2_norm_sigma(b);
    DensityPair sum = a;
    for (Side side : {Side::zero, Side::ell}) {
      for (std::size_t e = 0; e < sum.component(side).values.size(); ++e) {
        sum.component(side).values[e] += b.component(side).values[e];
      }
    }
    worst = std::max(worst, l2_norm_sigma(sum) - na - nb);
    DensityPair scaled = a;
    for (Side side : {Side::zero, Side::ell}) {
      for (double& v : scaled.component(side).values) v *= -2.5;
    }
    worst = std::max(worst, std::abs(l2_norm_sigma(scaled) - 2.5 * na));
  }
  s.check("mesh: sigma norm triangle inequality and homogeneity", worst, 1e-12);
}

void verify_fourier(Suite& s) {
  Rng rng(202);
  const double horizon = 6.0;
  double worst = 0.0;
  for (int it = 0; it < (s.fast ? 5 : 20); ++it) {
    SineSeries u = random_sine(rng, horizon, 12);
    CosineSeries hu = apply_modified_hilbert(u);
    double n_sine = quadrature_l2_norm([&](double t) { return eval(u, t); },
                                       horizon, 64);
    double n_cos = quadrature_l2_norm([&](double t) { return eval(hu, t); },
                                      horizon, 64);
    worst = std::max(worst, std::abs(n_sine - n_cos));
  }
  s.check("fourier: transform preserves the L2 norm", worst, 1e-12);

  worst = 0.0;
  for (int it = 0; it < (s.fast ? 5 : 20); ++it) {
    SineSeries u = random_sine(rng, horizon, 10);
    CosineSeries du{horizon, u.coeffs};
    for (std::size_t k = 0; k < du.coeffs.size(); ++k) {
      du.coeffs[k] *= angular_frequency(static_cast<int>(k)) / horizon;
    }
    auto integrand = [&](double t) {
      return eval(du, t) * eval(apply_modified_hilbert(u), t);
    };
    double pairing = integrate_composite(integrand, 0.0, horizon, 64, 20);
    double target = half_norm_zero_start(u);
    worst = std::max(worst, std::abs(pairing - target * target));
    worst = std::max(worst, std::abs(dual_half_norm(du) - target));
  }
  s.check("fourier: pairing identity and derivative dual norm", worst, 1e-12);

  worst = 0.0;
  int modes = s.fast ? 4 : 8;
  for (int it = 0; it < (s.fast ? 2 : 4); ++it) {
    SineSeries u = random_sine(rng, horizon, modes);
    SineSeries z = random_sine(rng, horizon, modes);
    for (int k = 0; k < modes; ++k) {
      // decaying coefficients keep the inputs smooth at every mode count
      u.coeffs[k] /= (1.0 + k) * (1.0 + k);
      z.coeffs[k] /= (1.0 + k) * (1.0 + k);
    }
    CosineSeries du{horizon, u.coeffs}, dz{horizon, z.coeffs};
    for (int k = 0; k < modes; ++k) {
      du.coeffs[k] *= angular_frequency(k) / horizon;
      dz.coeffs[k] *= angular_frequency(k) / horizon;
    }
    GradedOptions opts;
    opts.base_panels = std::max(16, 3 * modes);
    opts.levels = 10;
    opts.ratio = 0.2;
    double via_kernel =
        -1.0 / std::numbers::pi *
        kernel_pairing_graded([&](double t) { return eval(du, t); },
                              [&](double t) { return eval(dz, t); }, horizon,
                              opts);
    worst = std::max(worst, std::abs(via_kernel - pairing_dt_ht(u, z)));
  }
  s.check("fourier: kernel representation matches coefficient pairing", worst,
          1e-8);
}

void verify_wave(Suite& s) {
  Rng rng(303);
  ProblemGeometry geometry(3.0, 6.0);
  ManufacturedCase c = case_traveling(cubic_bump_pulse(6.0), geometry);
  FunctionPair vw = single_layer(*c.density_poly, geometry.length);
  FunctionPair rhs = direct_rhs(*c.trace_poly, geometry.length);
  std::uniform_real_distribution<double> unif_t(0.0, 6.0);
  double worst = 0.0;
  for (int it = 0; it < 1000; ++it) {
    double t = unif_t(rng);
    worst = std::max(worst, std::abs(vw.zero.eval(t) - rhs.zero.eval(t)));
    worst = std::max(worst, std::abs(vw.ell.eval(t) - rhs.ell.eval(t)));
  }
  s.check("wave: traveling-wave identity for the direct equation", worst, 1e-12);

  std::uniform_real_distribution<double> unif_x(0.0, 3.0);
  worst = 0.0;
  for (int it = 0; it < 100; ++it) {
    double x = unif_x(rng), t = unif_t(rng);
    if (x <= 0.0 || x >= 3.0 || t <= 0.0 || t >= 6.0) continue;
    double u = interior_solution(*c.density_poly, *c.trace_poly, geometry, x, t);
    worst = std::max(worst, std::abs(u - c.exact_u(x, t)));
  }
  s.check("wave: interior representation formula", worst, 1e-12);

  auto mesh = std::make_shared<const LateralMesh>(
      LateralMesh::uniform(geometry, 16, 16));
  worst = 0.0;
  for (int it = 0; it < 10; ++it) {
    DensityPair w = random_density(rng, mesh);
    double cut = 3.0;
    FunctionPair before = single_layer(w);
    DensityPair perturbed = w;
    for (Side side : {Side::zero, Side::ell}) {
      for (int e = 0; e < mesh->element_count(side); ++e) {
        if (mesh->element_left(side, e) >= cut) {
          perturbed.component(side).values[e] += (e % 3) - 1.0;
        }
      }
    }
    FunctionPair after = single_layer(perturbed);
    for (double t = 0.1; t < cut; t += 0.23) {
      worst = std::max(worst, std::abs(before.zero.eval(t) - after.zero.eval(t)));
      worst = std::max(worst, std::abs(before.ell.eval(t) - after.ell.eval(t)));
    }
  }
  s.check("wave: causality of the single layer operator", worst, 1e-13);

  worst = 0.0;
  int n_max = s.fast ? 64 : 256;
  for (int n_side = 8; n_side <= n_max; n_side *= 2) {
    auto m = std::make_shared<const LateralMesh>(
        LateralMesh::uniform(geometry, n_side, n_side));
    DenseMatrix a = assemble_energetic(*m);
    double constant = std::sin(std::numbers::pi / (2.0 * (geometry.slices + 1)));
    constant *= constant;
    for (int it = 0; it < 20; ++it) {
      Vector v = random_vector(rng, m->total_elements());
      Vector av = matvec(a, v);
      double quad = dot(v, av);
      double norm = 0.0;
      for (int i = 0; i < m->total_elements(); ++i) {
        norm += v[i] * v[i] *
                m->element_length(dof_side(*m, i), dof_element(*m, i));
      }
      worst = std::max(worst, constant * norm - quad);
    }
  }
  s.check("wave: slice-count ellipticity of the time-differentiated form",
          worst, 1e-12);
}

void verify_assembly(Suite& s) {
  ProblemGeometry geometry(3.0, 6.0);
  double worst = 0.0;
  int n_side = s.fast ? 4 : 8;
  for (double horizon : {6.0, 2.5}) {
    ProblemGeometry g(3.0, horizon);
    auto mesh = std::make_shared<const LateralMesh>(
        LateralMesh::uniform(g, n_side, n_side));
    DenseMatrix ak = assemble_ht(*mesh, AssemblyMethod::kernel_quadrature);
    DenseMatrix af = assemble_ht(*mesh, AssemblyMethod::fourier_truncation);
    worst = std::max(worst, max_abs_diff(ak, af));
  }
  s.check("assembly: kernel quadrature agrees with Fourier truncation", worst,
          1e-8);

  Rng rng(404);
  auto mesh = std::make_shared<const LateralMesh>(
      LateralMesh::uniform(geometry, n_side * 2, n_side * 2));
  ManufacturedCase c = case_smooth(geometry);
  TracePair g_h = project_trace(mesh, c.trace, c.kinks);
  Vector bk = assemble_rhs(*mesh, g_h, Formulation::ht,
                           AssemblyMethod::kernel_quadrature);
  Vector bf = assemble_rhs(*mesh, g_h, Formulation::ht,
                           AssemblyMethod::fourier_truncation);
  worst = 0.0;
  for (std::size_t i = 0; i < bk.size(); ++i) {
    worst = std::max(worst, std::abs(bk[i] - bf[i]));
  }
  s.check("assembly: right-hand side paths agree", worst, 1e-8);

  DenseMatrix a = assemble_ht(*mesh, AssemblyMethod::kernel_quadrature);
  GalerkinSystem system{mesh, a, bk};
  SolveResult sol = solve(system);
  Vector coeffs;
  coeffs.insert(coeffs.end(), sol.density.zero.values.begin(),
                sol.density.zero.values.end());
  coeffs.insert(coeffs.end(), sol.density.ell.values.begin(),
                sol.density.ell.values.end());
  Vector res = matvec(a, coeffs);
  worst = 0.0;
  for (std::size_t i = 0; i < res.size(); ++i) {
    worst = std::max(worst, std::abs(res[i] - bk[i]));
  }
  s.check("assembly: Galerkin residual vanishes on the basis", worst, 1e-10);

  // projection reproduces members of the space
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  TracePair member;
  for (Side side : {Side::zero, Side::ell}) {
    std::vector<double> values(mesh->nodes(side).size(), 0.0);
    for (std::size_t i = 1; i < values.size(); ++i) values[i] = unif(rng);
    member.component(side) = PiecewiseLinear(mesh, side, values, true);
  }
  FunctionPair member_poly = to_piecewise(member);
  SidePair<std::function<double(double)>> member_fn{
      [&](double t) { return member_poly.zero.eval(t); },
      [&](double t) { return member_poly.ell.eval(t); }};
  TracePair projected = project_trace(mesh, member_fn, {{}, {}});
  worst = 0.0;
  for (Side side : {Side::zero, Side::ell}) {
    for (std::size_t i = 0; i < projected.component(side).nodal_values.size(); ++i) {
      worst = std::max(worst,
                       std::abs(projected.component(side).nodal_values[i] -
                                member.component(side).nodal_values[i]));
    }
  }
  s.check("assembly: projection reproduces piecewise linear data", worst, 1e-12);

  // serial and parallel assembly agree bitwise
  DenseMatrix serial = assemble_ht(*mesh, AssemblyMethod::kernel_quadrature,
                                   Exec::serial);
  DenseMatrix parallel = assemble_ht(*mesh, AssemblyMethod::kernel_quadrature,
                                     Exec::parallel);
  s.check("assembly: serial and parallel kernels agree bitwise",
          max_abs_diff(serial, parallel), 0.0);
}

void verify_spectral(Suite& s) {
  Rng rng(505);
  std::uniform_int_distribution<int> ks(0, 40);
  double worst = 0.0;
  for (int it = 0; it < 200; ++it) {
    int k = ks(rng), l = ks(rng);
    worst = std::max(worst, std::abs(coupling_coefficient(k, l, 1.0, 3.0) -
                                     coupling_coefficient(l, k, 1.0, 3.0)));
  }
  s.check("spectral: coupling coefficients are symmetric", worst, 1e-14);

  // quadratic-form route against the operator route
  const double length = 1.0, horizon = 3.0;
  int m = s.fast ? 6 : 10;
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  worst = 0.0;
  for (int it = 0; it < (s.fast ? 2 : 4); ++it) {
    std::vector<double> what0(m + 1), whatl(m + 1);
    for (double& v : what0) v = unif(rng);
    for (double& v : whatl) v = unif(rng);
    double direct = 0.0;
    for (int k = 0; k <= m; ++k) {
      for (int l = 0; l <= m; ++l) {
        direct += coupling_coefficient(k, l, length, horizon) * what0[l] * whatl[k];
      }
    }
    // operator route: w_sigma = sum wbar cos, exact antiderivatives, shifted
    // part integrated numerically, paired by cosine orthogonality
    std::vector<double> wbar0(m + 1), wbarl(m + 1);
    for (int k = 0; k <= m; ++k) {
      double scale = std::sqrt((2.0 * k + 1.0) * std::numbers::pi);
      wbar0[k] = what0[k] * scale;
      wbarl[k] = whatl[k] * scale;
    }
    auto shifted_primitive = [&](const std::vector<double>& wbar, double t) {
      // integral from 0 to t-L of w = sum wbar_k (T/omega_k) sin(omega_k (t-L)/T)
      if (t <= length) return 0.0;
      double sum = 0.0;
      for (int k = 0; k <= m; ++k) {
        double omega = angular_frequency(k);
        sum += wbar[k] * horizon / omega * std::sin(omega * (t - length) / horizon);
      }
      return sum;
    };
    double op_value = 0.0;
    for (int mode = 0; mode <= m; ++mode) {
      double lambda = angular_frequency(mode) / horizon;
      auto sine_mode = [&](double t) { return std::sin(lambda * t); };
      // self part has exact sine coefficients (T/omega) wbar
      double self0 = horizon / angular_frequency(mode) * wbar0[mode];
      double selfl = horizon / angular_frequency(mode) * wbarl[mode];
      auto crossl = [&](double t) { return shifted_primitive(wbarl, t); };
      auto cross0 = [&](double t) { return shifted_primitive(wbar0, t); };
      double s_cross_l =
          2.0 / horizon *
          integrate_composite([&](double t) { return crossl(t) * sine_mode(t); },
                              length, horizon, std::max(24, 2 * m), 20);
      double s_cross_0 =
          2.0 / horizon *
          integrate_composite([&](double t) { return cross0(t) * sine_mode(t); },
                              length, horizon, std::max(24, 2 * m), 20);
      // <H_T (V w)_sigma, w_sigma> accumulated over sigma; the self parts
      // reproduce the uncoupled sum, so subtract them afterwards
      double s0 = 0.5 * (self0 + s_cross_l);
      double sl = 0.5 * (selfl + s_cross_0);
      op_value += 0.5 * horizon * (s0 * wbar0[mode] + sl * wbarl[mode]);
    }
    double uncoupled = 0.0;
    for (int k = 0; k <= m; ++k) {
      uncoupled += 0.5 * horizon * horizon *
                   (wbar0[k] * wbar0[k] + wbarl[k] * wbarl[k]) /
                   ((2.0 * k + 1.0) * std::numbers::pi);
    }
    double coupling_from_op = (op_value - uncoupled) / (0.5 * horizon * horizon);
    worst = std::max(worst, std::abs(coupling_from_op - direct));
  }
  s.check("spectral: quadratic form matches the operator route", worst, 1e-8);

  double lam_small = lambda_max_cm(1.0, 2.0, s.fast ? 60 : 120, 8);
  double lam_large = lambda_max_cm(1.0, 2.0, s.fast ? 120 : 240, 8);
  s.check("spectral: gram eigenvalue grows with the cutoff",
          lam_small - lam_large, 1e-8);
}

void verify_linalg(Suite& s) {
  Rng rng(606);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  double worst = 0.0;
  for (int it = 0; it < 5; ++it) {
    int n = 40;
    DenseMatrix b(n, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) b(i, j) = unif(rng);
    }
    DenseMatrix a(n, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) sum += b(k, i) * b(k, j);
        a(i, j) = sum + (i == j ? n : 0.0);
      }
    }
    Vector x = random_vector(rng, n);
    Vector rhs = matvec(a, x);
    LuSolveResult sol = lu_solve(a, rhs);
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(sol.x[i] - x[i]));
    }
  }
  s.check("linalg: LU recovers solutions of well-conditioned systems", worst,
          1e-10);

  int n = 30;
  DenseMatrix tri(n, n);
  for (int i = 0; i < n; ++i) {
    tri(i, i) = 1.0;
    if (i > 0) tri(i, i - 1) = -0.5;
    if (i + 1 < n) tri(i, i + 1) = -0.5;
  }
  auto [lo, hi] = sym_eig_extremes(tri);
  double expected = 2.0 * std::pow(std::sin(std::numbers::pi / (2.0 * (n + 1))), 2);
  s.check("linalg: tridiagonal minimal eigenvalue",
          std::abs(lo - expected) + std::abs(hi - (2.0 - expected)), 1e-10);
}

}  // namespace

std::vector<CheckResult> run_verify(bool fast) {
  Suite s{fast, {}};
  verify_mesh(s);
  verify_fourier(s);
  verify_wave(s);
  verify_assembly(s);
  verify_spectral(s);
  verify_linalg(s);
  return s.results;
}

}  // namespace stwave
