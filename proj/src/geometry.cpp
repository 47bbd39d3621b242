#include "stwave/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace stwave {

int time_slice_count(double length, double horizon) {
  if (!(length > 0.0) || !(horizon > 0.0)) {
    throw std::domain_error("time_slice_count: L and T must be positive");
  }
  int n = static_cast<int>(std::ceil(horizon / length));
  if (n < 1) n = 1;
  // enforce (n-1)L < T <= nL exactly in floating point
  while (n > 1 && horizon <= (n - 1) * length) --n;
  while (horizon > n * length) ++n;
  return n;
}

ProblemGeometry::ProblemGeometry(double length_, double horizon_)
    : length(length_),
      horizon(horizon_),
      slices(time_slice_count(length_, horizon_)) {}

namespace {

void check_nodes(const std::vector<double>& nodes, double horizon) {
  if (nodes.size() < 2) {
    throw std::domain_error("LateralMesh: need at least one element per side");
  }
  if (nodes.front() != 0.0 || nodes.back() != horizon) {
    throw std::domain_error("LateralMesh: nodes must span [0, T]");
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) {
      throw std::domain_error("LateralMesh: nodes must be strictly increasing");
    }
  }
}

}  // namespace

LateralMesh::LateralMesh(const ProblemGeometry& geometry,
                         std::vector<double> nodes_zero,
                         std::vector<double> nodes_ell)
    : geometry_(geometry),
      nodes_zero_(std::move(nodes_zero)),
      nodes_ell_(std::move(nodes_ell)) {
  check_nodes(nodes_zero_, geometry_.horizon);
  check_nodes(nodes_ell_, geometry_.horizon);
}

LateralMesh LateralMesh::uniform(const ProblemGeometry& geometry, int n_zero,
                                 int n_ell) {
  if (n_zero < 1 || n_ell < 1) {
    throw std::domain_error("uniform mesh: element count must be >= 1");
  }
  auto make = [&](int n) {
    std::vector<double> nodes(n + 1);
    for (int i = 0; i <= n; ++i) {
      nodes[i] = geometry.horizon * static_cast<double>(i) / n;
    }
    nodes[n] = geometry.horizon;
    return nodes;
  };
  return LateralMesh(geometry, make(n_zero), make(n_ell));
}

double LateralMesh::mesh_size() const {
  double h = 0.0;
  for (Side s : {Side::zero, Side::ell}) {
    for (int e = 0; e < element_count(s); ++e) {
      h = std::max(h, element_length(s, e));
    }
  }
  return h;
}

PiecewiseConstant::PiecewiseConstant(MeshPtr mesh_, Side side_,
                                     std::vector<double> values_)
    : mesh(std::move(mesh_)), side(side_), values(std::move(values_)) {
  if (!mesh) throw std::domain_error("PiecewiseConstant: null mesh");
  if (static_cast<int>(values.size()) != mesh->element_count(side)) {
    throw std::domain_error("PiecewiseConstant: value count != element count");
  }
}

PiecewiseLinear::PiecewiseLinear(MeshPtr mesh_, Side side_,
                                 std::vector<double> nodal_values_,
                                 bool zero_at_start_)
    : mesh(std::move(mesh_)),
      side(side_),
      nodal_values(std::move(nodal_values_)),
      zero_at_start(zero_at_start_) {
  if (!mesh) throw std::domain_error("PiecewiseLinear: null mesh");
  if (nodal_values.size() != mesh->nodes(side).size()) {
    throw std::domain_error("PiecewiseLinear: value count != node count");
  }
  if (zero_at_start && nodal_values.front() != 0.0) {
    throw std::domain_error("PiecewiseLinear: nonzero value at t=0");
  }
}

double l2_norm_sigma(const DensityPair& v) {
  double sum = 0.0;
  for (Side s : {Side::zero, Side::ell}) {
    const PiecewiseConstant& c = v.component(s);
    for (std::size_t e = 0; e < c.values.size(); ++e) {
      sum += c.mesh->element_length(s, static_cast<int>(e)) * c.values[e] *
             c.values[e];
    }
  }
  return std::sqrt(sum);
}

}  // namespace stwave
