#ifndef STWAVE_GEOMETRY_HPP
#define STWAVE_GEOMETRY_HPP

#include <memory>
#include <vector>

namespace stwave {

/// The two lateral boundary lines of the space-time strip (0,L) x (0,T).
enum class Side { zero, ell };

constexpr Side other_side(Side s) {
  return s == Side::zero ? Side::ell : Side::zero;
}

/// Smallest n with T <= n*L, the number of time slices of length L that
/// cover (0,T). Drives the ellipticity constant sin^2(pi/(2(n+1))).
int time_slice_count(double length, double horizon);

/// Space-time strip (0,L) x (0,T) with the derived slice count.
struct ProblemGeometry {
  double length;   ///< spatial extent L
  double horizon;  ///< final time T
  int slices;      ///< time_slice_count(L, T)

  ProblemGeometry(double length_, double horizon_);
};

/// Decomposition of the two lateral boundary lines into elements. Node
/// coordinates are stored in absolute time; the two sides may carry
/// unrelated meshes. Immutable after construction.
class LateralMesh {
 public:
  LateralMesh(const ProblemGeometry& geometry, std::vector<double> nodes_zero,
              std::vector<double> nodes_ell);

  static LateralMesh uniform(const ProblemGeometry& geometry, int n_zero,
                             int n_ell);

  const ProblemGeometry& geometry() const { return geometry_; }
  const std::vector<double>& nodes(Side s) const {
    return s == Side::zero ? nodes_zero_ : nodes_ell_;
  }
  int element_count(Side s) const {
    return static_cast<int>(nodes(s).size()) - 1;
  }
  int total_elements() const {
    return element_count(Side::zero) + element_count(Side::ell);
  }
  double element_left(Side s, int e) const { return nodes(s)[e]; }
  double element_right(Side s, int e) const { return nodes(s)[e + 1]; }
  double element_length(Side s, int e) const {
    return nodes(s)[e + 1] - nodes(s)[e];
  }
  /// Largest element length over both sides.
  double mesh_size() const;

 private:
  ProblemGeometry geometry_;
  std::vector<double> nodes_zero_;
  std::vector<double> nodes_ell_;
};

using MeshPtr = std::shared_ptr<const LateralMesh>;

/// A function on the lateral boundary is a pair of time functions.
template <class F>
struct SidePair {
  F zero;
  F ell;

  const F& component(Side s) const { return s == Side::zero ? zero : ell; }
  F& component(Side s) { return s == Side::zero ? zero : ell; }
};

/// Element of S^0_h on one side: one coefficient per mesh element.
struct PiecewiseConstant {
  MeshPtr mesh;
  Side side = Side::zero;
  std::vector<double> values;

  PiecewiseConstant() = default;
  PiecewiseConstant(MeshPtr mesh_, Side side_, std::vector<double> values_);
};

/// Element of S^1_h on one side: continuous piecewise linear nodal values.
/// With zero_at_start the t=0 value is pinned to zero (membership in the
/// space with homogeneous initial condition).
struct PiecewiseLinear {
  MeshPtr mesh;
  Side side = Side::zero;
  std::vector<double> nodal_values;
  bool zero_at_start = false;

  PiecewiseLinear() = default;
  PiecewiseLinear(MeshPtr mesh_, Side side_, std::vector<double> nodal_values_,
                  bool zero_at_start_);
};

using DensityPair = SidePair<PiecewiseConstant>;
using TracePair = SidePair<PiecewiseLinear>;

/// sqrt of the sum over both sides of the elementwise h_i * v_i^2,
/// i.e. the L^2 norm on the lateral boundary.
double l2_norm_sigma(const DensityPair& v);

}  // namespace stwave

#endif
