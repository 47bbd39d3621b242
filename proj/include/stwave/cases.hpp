#ifndef STWAVE_CASES_HPP
#define STWAVE_CASES_HPP

#include <functional>
#include <optional>
#include <string>

#include "stwave/geometry.hpp"
#include "stwave/wave_operators.hpp"

namespace stwave {

/// An exact solution of the Dirichlet problem bundled with its boundary
/// data, its exact density (outward normal derivative on the lateral
/// boundary) and the points in time where the density loses smoothness.
struct ManufacturedCase {
  std::string name;
  std::function<double(double, double)> exact_u;       // (x, t)
  SidePair<std::function<double(double)>> trace;       // Dirichlet data g
  SidePair<std::function<double(double)>> density;     // normal derivative w
  double sobolev_index = 1.0;                          // expected H^s regularity of w
  SidePair<std::vector<double>> kinks;
  // exact piecewise polynomial forms where the case admits them
  std::optional<FunctionPair> trace_poly;
  std::optional<FunctionPair> density_poly;
};

/// u(x,t) = (t-x-2)^3 (x-t)^3 / 2 inside the band x <= t <= x+2; the
/// density is C^1 piecewise polynomial, so the expected L^2 rate is 1.
ManufacturedCase case_smooth(const ProblemGeometry& geometry);

/// u(x,t) = |sin(pi(x-t))| / 2 for x <= t; the density jumps at integer
/// times, the expected L^2 rate is 1/2.
ManufacturedCase case_singular(const ProblemGeometry& geometry);

/// Wave u(x,t) = f(t-x) traveling to the right, built from a polynomial
/// pulse with f(0) = 0. Serves as the exact oracle for the operator
/// identities since all quantities stay piecewise polynomial.
ManufacturedCase case_traveling(const PiecewisePoly& pulse,
                                const ProblemGeometry& geometry);

/// The pulse t^3 (1-t)^3 on [0,1] used by the traveling-wave checks.
PiecewisePoly cubic_bump_pulse(double horizon);

}  // namespace stwave

#endif
