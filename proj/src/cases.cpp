#include "stwave/cases.hpp"

#include <cmath>
#include <numbers>

namespace stwave {

namespace {

Poly cube(const Poly& p) { return p * p * p; }

std::vector<double> interior_breaks(const PiecewisePoly& f) {
  std::vector<double> out;
  for (double b : f.breakpoints()) {
    if (b < f.horizon()) out.push_back(b);
  }
  return out;
}

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

PiecewisePoly cubic_bump_pulse(double horizon) {
  // t^3 (1-t)^3 = (t - t^2)^3 on [0, 1]
  return PiecewisePoly::segment(horizon, 0.0, 1.0, cube(Poly({0.0, 1.0, -1.0})));
}

ManufacturedCase case_traveling(const PiecewisePoly& pulse,
                                const ProblemGeometry& geometry) {
  const double length = geometry.length;
  ManufacturedCase c;
  c.name = "traveling";
  c.sobolev_index = 1.0;
  PiecewisePoly g0 = pulse;
  PiecewisePoly gl = pulse.shifted_forward(length);
  PiecewisePoly w0 = pulse.derivative();
  PiecewisePoly wl = w0.shifted_forward(length).scaled(-1.0);
  c.exact_u = [pulse](double x, double t) { return pulse.eval(t - x); };
  c.trace = {[g0](double t) { return g0.eval(t); },
             [gl](double t) { return gl.eval(t); }};
  c.density = {[w0](double t) { return w0.eval(t); },
               [wl](double t) { return wl.eval(t); }};
  c.kinks = {interior_breaks(w0), interior_breaks(wl)};
  c.trace_poly = FunctionPair{g0, gl};
  c.density_poly = FunctionPair{w0, wl};
  return c;
}

ManufacturedCase case_smooth(const ProblemGeometry& geometry) {
  // pulse F(s) = -(1/2) s^3 (s-2)^3 = -(1/2) (s^2 - 2s)^3 on [0, 2], so that
  // u(x,t) = F(t-x) coincides with (t-x-2)^3 (x-t)^3 / 2 inside the band
  PiecewisePoly pulse = PiecewisePoly::segment(
      geometry.horizon, 0.0, 2.0, cube(Poly({0.0, -2.0, 1.0})).scaled(-0.5));
  ManufacturedCase c = case_traveling(pulse, geometry);
  c.name = "smooth";
  c.sobolev_index = 1.0;
  return c;
}

ManufacturedCase case_singular(const ProblemGeometry& geometry) {
  const double pi = std::numbers::pi;
  const double length = geometry.length;
  ManufacturedCase c;
  c.name = "singular";
  c.sobolev_index = 0.5;
  auto profile = [pi](double s) {
    return s > 0.0 ? 0.5 * std::abs(std::sin(pi * s)) : 0.0;
  };
  auto profile_dt = [pi](double s) {
    return s > 0.0 ? 0.5 * pi * sign(std::sin(pi * s)) * std::cos(pi * s) : 0.0;
  };
  c.exact_u = [profile](double x, double t) { return profile(t - x); };
  c.trace = {[profile](double t) { return profile(t); },
             [profile, length](double t) { return profile(t - length); }};
  c.density = {[profile_dt](double t) { return profile_dt(t); },
               [profile_dt, length](double t) { return -profile_dt(t - length); }};
  std::vector<double> k0, kl;
  for (int j = 0; j <= static_cast<int>(geometry.horizon) + 1; ++j) {
    if (j < geometry.horizon) k0.push_back(j);
    double shifted = length + j;
    if (shifted < geometry.horizon) kl.push_back(shifted);
  }
  c.kinks = {k0, kl};
  return c;
}

}  // namespace stwave
