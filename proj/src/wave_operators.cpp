#include "stwave/wave_operators.hpp"

#include <cmath>
#include <stdexcept>

namespace stwave {

FunctionPair to_piecewise(const DensityPair& w) {
  double horizon = w.zero.mesh->geometry().horizon;
  return {PiecewisePoly::step(horizon, w.zero.mesh->nodes(Side::zero),
                              w.zero.values),
          PiecewisePoly::step(horizon, w.ell.mesh->nodes(Side::ell),
                              w.ell.values)};
}

FunctionPair to_piecewise(const TracePair& g) {
  double horizon = g.zero.mesh->geometry().horizon;
  return {PiecewisePoly::interpolant(horizon, g.zero.mesh->nodes(Side::zero),
                                     g.zero.nodal_values),
          PiecewisePoly::interpolant(horizon, g.ell.mesh->nodes(Side::ell),
                                     g.ell.nodal_values)};
}

FunctionPair single_layer(const FunctionPair& w, double travel_length) {
  PiecewisePoly w0 = w.zero.antiderivative();
  PiecewisePoly wl = w.ell.antiderivative();
  return {(w0 + wl.shifted_forward(travel_length)).scaled(0.5),
          (w0.shifted_forward(travel_length) + wl).scaled(0.5)};
}

FunctionPair single_layer_dt(const FunctionPair& w, double travel_length) {
  return {(w.zero + w.ell.shifted_forward(travel_length)).scaled(0.5),
          (w.zero.shifted_forward(travel_length) + w.ell).scaled(0.5)};
}

FunctionPair direct_rhs(const FunctionPair& g, double travel_length) {
  return {(g.zero - g.ell.shifted_forward(travel_length)).scaled(0.5),
          (g.ell - g.zero.shifted_forward(travel_length)).scaled(0.5)};
}

double interior_solution(const FunctionPair& w, const FunctionPair& g,
                         const ProblemGeometry& geometry, double x, double t) {
  if (!(x > 0.0) || !(x < geometry.length) || !(t > 0.0) ||
      !(t < geometry.horizon)) {
    throw std::domain_error("interior_solution: point not strictly interior");
  }
  PiecewisePoly w0 = w.zero.antiderivative();
  PiecewisePoly wl = w.ell.antiderivative();
  double value = 0.5 * w0.eval(t - x) + 0.5 * wl.eval(t - (geometry.length - x));
  value += 0.5 * g.zero.eval(t - x) + 0.5 * g.ell.eval(t - geometry.length + x);
  return value;
}

FunctionPair single_layer(const DensityPair& w) {
  return single_layer(to_piecewise(w), w.zero.mesh->geometry().length);
}

FunctionPair single_layer_dt(const DensityPair& w) {
  return single_layer_dt(to_piecewise(w), w.zero.mesh->geometry().length);
}

FunctionPair direct_rhs(const TracePair& g) {
  return direct_rhs(to_piecewise(g), g.zero.mesh->geometry().length);
}

PiecewisePoly antiderivative(const PiecewisePoly& f) {
  return f.antiderivative();
}

PiecewisePoly antiderivative_reverse(const PiecewisePoly& f) {
  return f.antiderivative_reverse();
}

}  // namespace stwave
