#ifndef STWAVE_WAVE_OPERATORS_HPP
#define STWAVE_WAVE_OPERATORS_HPP

#include "stwave/geometry.hpp"
#include "stwave/piecewise.hpp"

namespace stwave {

/// A pair of exact piecewise polynomials, one per lateral boundary side.
using FunctionPair = SidePair<PiecewisePoly>;

FunctionPair to_piecewise(const DensityPair& w);
FunctionPair to_piecewise(const TracePair& g);

/// Single layer operator: componentwise antiderivatives, the opposite side
/// entering with a time shift by the travel length L. The result is
/// continuous piecewise linear (for piecewise constant densities) with
/// breakpoints at the mesh nodes and their shifts.
FunctionPair single_layer(const FunctionPair& w, double travel_length);

/// Time derivative of the single layer operator: averages the density with
/// the shifted opposite-side density.
FunctionPair single_layer_dt(const FunctionPair& w, double travel_length);

/// Right-hand side of the direct boundary integral equation,
/// (1/2 I + K) g = ( g0/2 - gL(.-L)/2 , gL/2 - g0(.-L)/2 ).
FunctionPair direct_rhs(const FunctionPair& g, double travel_length);

/// Field value at an interior point from the density and the Dirichlet
/// datum via the representation formula.
double interior_solution(const FunctionPair& w, const FunctionPair& g,
                         const ProblemGeometry& geometry, double x, double t);

FunctionPair single_layer(const DensityPair& w);
FunctionPair single_layer_dt(const DensityPair& w);
FunctionPair direct_rhs(const TracePair& g);

/// F with F' = f, F(0) = 0 (inverse of the time derivative on functions
/// vanishing at the initial time).
PiecewisePoly antiderivative(const PiecewisePoly& f);
/// F with F' = f, F(T) = 0.
PiecewisePoly antiderivative_reverse(const PiecewisePoly& f);

}  // namespace stwave

#endif
