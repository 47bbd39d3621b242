#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "stwave/fourier.hpp"
#include "stwave/geometry.hpp"

using namespace stwave;
using boost::math::quadrature::gauss_kronrod;

namespace {

double adaptive(const std::function<double(double)>& f, double a, double b) {
  return gauss_kronrod<double, 31>::integrate(f, a, b, 12, 1e-14);
}

double sine_coeff_by_quadrature(const std::function<double(double)>& f,
                                double horizon, int k) {
  double lambda = angular_frequency(k) / horizon;
  return 2.0 / horizon *
         adaptive([&](double t) { return f(t) * std::sin(lambda * t); }, 0.0,
                  horizon);
}

double cosine_coeff_by_quadrature(const std::function<double(double)>& f,
                                  double horizon, int k) {
  double lambda = angular_frequency(k) / horizon;
  return 2.0 / horizon *
         adaptive([&](double t) { return f(t) * std::cos(lambda * t); }, 0.0,
                  horizon);
}

}  // namespace

TEST_CASE("sine coefficients of the identity map") {
  const double horizon = 6.0;
  PiecewisePoly u = PiecewisePoly::segment(horizon, 0.0, horizon, Poly({0.0, 1.0}));
  SineSeries s = sine_coefficients(u, 24);
  for (int k = 0; k < 24; ++k) {
    double omega = angular_frequency(k);
    double closed = 2.0 * horizon * (k % 2 == 0 ? 1.0 : -1.0) / (omega * omega);
    CHECK(s.coeffs[k] == doctest::Approx(closed).epsilon(1e-12));
    CHECK(s.coeffs[k] ==
          doctest::Approx(sine_coeff_by_quadrature(
                              [](double t) { return t; }, horizon, k))
              .epsilon(1e-11));
  }
}

TEST_CASE("sine coefficients of random piecewise linear traces") {
  const double horizon = 6.0;
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> nodes{0.0, 0.7, 1.3, 2.0, 3.9, 6.0};
  std::vector<double> values{0.0, unif(rng), unif(rng), unif(rng), unif(rng), unif(rng)};
  PiecewisePoly u = PiecewisePoly::interpolant(horizon, nodes, values);
  SineSeries s = sine_coefficients(u, 40);
  for (int k : {0, 1, 7, 19, 39}) {
    double lambda = angular_frequency(k) / horizon;
    double oracle = 0.0;  // adaptive quadrature per smooth piece
    for (std::size_t e = 0; e + 1 < nodes.size(); ++e) {
      oracle += 2.0 / horizon *
                adaptive([&](double t) { return u.eval(t) * std::sin(lambda * t); },
                         nodes[e], nodes[e + 1]);
    }
    CHECK(std::abs(s.coeffs[k] - oracle) <= 1e-12);
  }
}

TEST_CASE("coefficient formulas stay stable on tiny elements") {
  const double horizon = 6.0;
  // short element far into the domain, high mode: the naive antiderivative
  // difference would cancel badly here
  PiecewisePoly u = PiecewisePoly::segment(horizon, 3.0, 3.0 + 1e-6,
                                           Poly({0.5, 0.25}));
  SineSeries s = sine_coefficients(u, 400);
  for (int k : {0, 399}) {
    double lambda = angular_frequency(k) / horizon;
    double oracle =
        2.0 / horizon *
        adaptive([&](double t) { return u.eval(t) * std::sin(lambda * t); },
                 3.0, 3.0 + 1e-6);
    CHECK(s.coeffs[k] == doctest::Approx(oracle).epsilon(1e-9));
  }
}

TEST_CASE("basis reproduction on a fine mesh") {
  const double horizon = 6.0;
  auto geometry = ProblemGeometry(3.0, horizon);
  for (int n : {64, 128}) {
    auto mesh = std::make_shared<const LateralMesh>(
        LateralMesh::uniform(geometry, n, n));
    std::vector<double> values(n + 1);
    for (int i = 0; i <= n; ++i) {
      values[i] = std::sin(angular_frequency(2) * mesh->nodes(Side::zero)[i] / horizon);
    }
    SineSeries s = sine_coefficients(
        PiecewiseLinear(mesh, Side::zero, values, true), 8);
    // the sampled mode dominates, all others are O(h^2)
    double h = horizon / n;
    for (int k = 0; k < 8; ++k) {
      double target = k == 2 ? 1.0 : 0.0;
      CHECK(std::abs(s.coeffs[k] - target) <= 2.0 * h * h);
    }
  }
}

TEST_CASE("zero input gives zero coefficients") {
  PiecewisePoly z = PiecewisePoly::zero(6.0);
  for (double c : sine_coefficients(z, 8).coeffs) CHECK(c == 0.0);
  for (double c : cosine_coefficients(z, 8).coeffs) CHECK(c == 0.0);
}

TEST_CASE("coefficient preconditions") {
  PiecewisePoly z = PiecewisePoly::zero(6.0);
  CHECK_THROWS_AS(sine_coefficients(z, 0), std::domain_error);
  CHECK_THROWS_AS(cosine_coefficients(z, -3), std::domain_error);

  auto mesh = std::make_shared<const LateralMesh>(
      LateralMesh::uniform(ProblemGeometry(3.0, 6.0), 4, 4));
  PiecewiseLinear not_zero(mesh, Side::zero, {1.0, 1.0, 1.0, 1.0, 1.0}, false);
  CHECK_THROWS_AS(sine_coefficients(not_zero, 4), std::domain_error);

  // degree above one is not integrable in closed form here
  PiecewisePoly quad = PiecewisePoly::segment(6.0, 0.0, 2.0, Poly({0.0, 0.0, 1.0}));
  CHECK_THROWS_AS(sine_coefficients(quad, 4), std::domain_error);
}

TEST_CASE("cosine coefficients of constants and indicators") {
  const double horizon = 6.0;
  PiecewisePoly one = PiecewisePoly::segment(horizon, 0.0, horizon, Poly::constant(1.0));
  CosineSeries c = cosine_coefficients(one, 16);
  for (int k = 0; k < 16; ++k) {
    double omega = angular_frequency(k);
    CHECK(c.coeffs[k] ==
          doctest::Approx(2.0 * (k % 2 == 0 ? 1.0 : -1.0) / omega).epsilon(1e-13));
  }

  PiecewisePoly half = PiecewisePoly::segment(horizon, 0.0, 0.5 * horizon,
                                              Poly::constant(1.0));
  CosineSeries ch = cosine_coefficients(half, 2);
  double expected = 2.0 / angular_frequency(0) * std::sin(std::numbers::pi / 4.0);
  CHECK(ch.coeffs[0] == doctest::Approx(expected).epsilon(1e-14));
  CHECK(ch.coeffs[0] ==
        doctest::Approx(cosine_coeff_by_quadrature(
                            [&](double t) { return half.eval(t); }, horizon, 0))
            .epsilon(1e-12));
}

TEST_CASE("coefficients are linear in the function") {
  const double horizon = 6.0;
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int it = 0; it < 20; ++it) {
    PiecewisePoly a = PiecewisePoly::segment(horizon, 0.0, 4.0,
                                             Poly({unif(rng), unif(rng)}));
    PiecewisePoly b = PiecewisePoly::segment(horizon, 1.0, 6.0,
                                             Poly({unif(rng), unif(rng)}));
    SineSeries sa = sine_coefficients(a, 12);
    SineSeries sb = sine_coefficients(b, 12);
    SineSeries sum = sine_coefficients(a + b, 12);
    for (int k = 0; k < 12; ++k) {
      CHECK(sum.coeffs[k] ==
            doctest::Approx(sa.coeffs[k] + sb.coeffs[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("transform maps the sine basis to the cosine basis") {
  SineSeries mode{6.0, {1.0}};
  CosineSeries image = apply_modified_hilbert(mode);
  CHECK(image.coeffs.size() == 1);
  CHECK(image.coeffs[0] == 1.0);
  CHECK(eval(image, 0.0) == doctest::Approx(1.0));

  SineSeries zero{6.0, {0.0, 0.0}};
  for (double c : apply_modified_hilbert(zero).coeffs) CHECK(c == 0.0);

  // norm preservation: both partial sums have L2 norm sqrt(T/2 sum u_k^2)
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int it = 0; it < 10; ++it) {
    SineSeries u{6.0, {unif(rng), unif(rng), unif(rng), unif(rng)}};
    CosineSeries hu = apply_modified_hilbert(u);
    double n_sin = std::sqrt(adaptive(
        [&](double t) { return eval(u, t) * eval(u, t); }, 0.0, 6.0));
    double n_cos = std::sqrt(adaptive(
        [&](double t) { return eval(hu, t) * eval(hu, t); }, 0.0, 6.0));
    CHECK(n_sin == doctest::Approx(n_cos).epsilon(1e-13));
  }
}

TEST_CASE("half-order norm") {
  SineSeries mode{6.0, {1.0}};
  CHECK(half_norm_zero_start(mode) ==
        doctest::Approx(std::sqrt(std::numbers::pi / 4.0)).epsilon(1e-15));
  CHECK(half_norm_zero_start({6.0, {}}) == 0.0);

  // oracle: <d/dt u, H_T u> by quadrature
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int it = 0; it < 10; ++it) {
    SineSeries u{2.7, {unif(rng), unif(rng), unif(rng)}};
    CosineSeries du{2.7, u.coeffs};
    for (int k = 0; k < 3; ++k) du.coeffs[k] *= angular_frequency(k) / 2.7;
    double pairing = adaptive(
        [&](double t) { return eval(du, t) * eval(apply_modified_hilbert(u), t); },
        0.0, 2.7);
    double norm = half_norm_zero_start(u);
    CHECK(pairing == doctest::Approx(norm * norm).epsilon(1e-12));
    SineSeries doubled = u;
    for (double& c : doubled.coeffs) c *= 2.0;
    CHECK(half_norm_zero_start(doubled) == doctest::Approx(2.0 * norm));
  }
}

TEST_CASE("dual half-order norm") {
  CosineSeries mode{6.0, {1.0}};
  CHECK(dual_half_norm(mode) ==
        doctest::Approx(6.0 * std::sqrt(1.0 / std::numbers::pi)).epsilon(1e-15));
  CHECK(dual_half_norm({6.0, {}}) == 0.0);
  CHECK(dual_half_norm(mode) == doctest::Approx(6.0 / std::sqrt(std::numbers::pi)));

  // sup characterization: the quotient <w, phi> / |phi|_{1/2} is maximized
  // by phi with coefficients w_k / omega_k and never exceeds the norm
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double horizon = 6.0;
  for (int it = 0; it < 5; ++it) {
    CosineSeries w{horizon, {unif(rng), unif(rng), unif(rng), unif(rng)}};
    double norm = dual_half_norm(w);
    auto quotient = [&](const std::vector<double>& phi_coeffs) {
      CosineSeries phi{horizon, phi_coeffs};
      double inner = adaptive(
          [&](double t) { return eval(w, t) * eval(phi, t); }, 0.0, horizon);
      double hn = 0.0;
      for (std::size_t k = 0; k < phi_coeffs.size(); ++k) {
        hn += angular_frequency(static_cast<int>(k)) * phi_coeffs[k] * phi_coeffs[k];
      }
      return inner / std::sqrt(0.5 * hn);
    };
    std::vector<double> optimal(w.coeffs.size());
    for (std::size_t k = 0; k < optimal.size(); ++k) {
      optimal[k] = w.coeffs[k] / angular_frequency(static_cast<int>(k));
    }
    CHECK(quotient(optimal) == doctest::Approx(norm).epsilon(1e-11));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> phi{unif(rng), unif(rng), unif(rng), unif(rng)};
      CHECK(quotient(phi) <= norm + 1e-10);
    }
  }
}

TEST_CASE("coefficient pairing") {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  SineSeries u{6.0, {unif(rng), unif(rng), unif(rng)}};
  double norm = half_norm_zero_start(u);
  CHECK(pairing_dt_ht(u, u) == doctest::Approx(norm * norm).epsilon(1e-14));

  SineSeries e0{6.0, {1.0, 0.0}};
  SineSeries e1{6.0, {0.0, 1.0}};
  CHECK(pairing_dt_ht(e0, e1) == 0.0);

  for (int it = 0; it < 100; ++it) {
    SineSeries a{6.0, {unif(rng), unif(rng), unif(rng), unif(rng)}};
    SineSeries b{6.0, {unif(rng), unif(rng), unif(rng), unif(rng)}};
    CHECK(std::abs(pairing_dt_ht(a, b)) <=
          half_norm_zero_start(a) * half_norm_zero_start(b) + 1e-12);
  }

  SineSeries other_horizon{5.0, {1.0}};
  CHECK_THROWS_AS(pairing_dt_ht(e0, other_horizon), std::domain_error);
}

TEST_CASE("derivative coefficients connect the two norms") {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double horizon = 4.2;
  for (int it = 0; it < 50; ++it) {
    SineSeries u{horizon, {unif(rng), unif(rng), unif(rng), unif(rng), unif(rng)}};
    CosineSeries du{horizon, u.coeffs};
    for (std::size_t k = 0; k < du.coeffs.size(); ++k) {
      du.coeffs[k] *= angular_frequency(static_cast<int>(k)) / horizon;
    }
    CHECK(dual_half_norm(du) ==
          doctest::Approx(half_norm_zero_start(u)).epsilon(1e-12));
  }
}

TEST_CASE("log-tan kernel") {
  const double horizon = 6.0;
  // s+t = T and |t-s| = T/3
  double s = 2.0, t = 4.0;
  CHECK(log_tan_kernel(s, t, horizon) ==
        doctest::Approx(std::log(2.0 - std::sqrt(3.0))).epsilon(1e-14));

  std::mt19937_64 rng(28);
  std::uniform_real_distribution<double> unif(0.01, 5.99);
  for (int it = 0; it < 100; ++it) {
    double a = unif(rng), b = unif(rng);
    if (a == b) continue;
    CHECK(log_tan_kernel(a, b, horizon) ==
          doctest::Approx(log_tan_kernel(b, a, horizon)).epsilon(1e-13));
  }

  CHECK(log_tan_kernel(3.0, 3.0 + 1e-12, horizon) < -20.0);
  CHECK_THROWS_AS(log_tan_kernel(3.0, 3.0, horizon), std::domain_error);

  CHECK(default_mode_count(4) == 512);
  CHECK(default_mode_count(64) == 1024);
}
