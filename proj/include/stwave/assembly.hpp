#ifndef STWAVE_ASSEMBLY_HPP
#define STWAVE_ASSEMBLY_HPP

#include <functional>
#include <vector>

#include "stwave/cases.hpp"
#include "stwave/geometry.hpp"
#include "stwave/linalg.hpp"
#include "stwave/parallel.hpp"
#include "stwave/wave_operators.hpp"

namespace stwave {

/// How the transform-weighted Galerkin entries are computed. The kernel
/// quadrature path is the production default (fixed cost per entry); the
/// Fourier truncation path is exact up to a controlled tail and serves as
/// the independent oracle for moderate mesh sizes.
enum class AssemblyMethod { kernel_quadrature, fourier_truncation };

enum class Formulation { ht, energetic };

/// Doubling rule for Fourier truncation: start from max(512, 16 * elements)
/// modes (or `initial` when positive) and double until the assembled
/// quantity changes by less than rel_tol in relative max norm.
struct TruncationControl {
  int initial = 0;
  double rel_tol = 1e-10;
  int max_modes = 1 << 21;
};

/// Dense Galerkin system; dof order is all side-zero elements first, then
/// side-ell, and matrix(i, j) carries the form evaluated at (trial j, test i).
struct GalerkinSystem {
  MeshPtr mesh;
  DenseMatrix matrix;
  Vector rhs;
};

/// Flat dof index <-> (side, element) for the fixed dof order.
inline Side dof_side(const LateralMesh& mesh, int dof) {
  return dof < mesh.element_count(Side::zero) ? Side::zero : Side::ell;
}
inline int dof_element(const LateralMesh& mesh, int dof) {
  int n0 = mesh.element_count(Side::zero);
  return dof < n0 ? dof : dof - n0;
}

/// Galerkin matrix of the time-differentiated (energetic) form; entries are
/// exact interval overlaps.
DenseMatrix assemble_energetic(const LateralMesh& mesh);

/// Galerkin matrix of the transform-weighted form <v, H_T V w>.
DenseMatrix assemble_ht(const LateralMesh& mesh, AssemblyMethod method,
                        Exec exec = Exec::parallel,
                        const TruncationControl& trunc = {});

/// L^2 projection of the Dirichlet datum onto continuous piecewise linears
/// with zero initial value; moment integrals split at the datum's kinks.
TracePair project_trace(const MeshPtr& mesh,
                        const SidePair<std::function<double(double)>>& g,
                        const SidePair<std::vector<double>>& kinks);

/// Right-hand side <phi_i, H_T (1/2 I + K) g_h> (ht) or
/// <phi_i, d/dt (1/2 I + K) g_h> (energetic).
Vector assemble_rhs(const LateralMesh& mesh, const TracePair& g_h,
                    Formulation formulation,
                    AssemblyMethod method = AssemblyMethod::kernel_quadrature,
                    Exec exec = Exec::parallel,
                    const TruncationControl& trunc = {});

/// Same pairing against an arbitrary continuous piecewise linear pair with
/// zero start. assemble_rhs is this applied to direct_rhs(g_h); passing the
/// datum itself realizes the indirect equation V w = g.
Vector assemble_pairing_rhs(const LateralMesh& mesh, const FunctionPair& z,
                            Formulation formulation,
                            AssemblyMethod method = AssemblyMethod::kernel_quadrature,
                            Exec exec = Exec::parallel,
                            const TruncationControl& trunc = {});

struct SolveResult {
  DensityPair density;
  double residual;  ///< relative residual of the linear solve
};

SolveResult solve(const GalerkinSystem& system);

/// || w_exact - w_h ||_{L^2(Sigma)}; elements are split at the case's kinks
/// and integrated with Gauss order 8 per sub-piece.
double l2_error(const DensityPair& w_h, const ManufacturedCase& c);

/// Experimental orders of convergence, log2 of consecutive error ratios.
std::vector<double> eoc(const std::vector<double>& errors);

/// Dual half-order norms of elements of S^0_h given by coefficient vectors
/// in the global dof order; a shared doubling rule controls the cosine
/// truncation for the whole batch.
std::vector<double> dual_half_norms(const LateralMesh& mesh,
                                    const std::vector<Vector>& coefficients,
                                    double rel_tol = 1e-8,
                                    int max_modes = 1 << 22);

}  // namespace stwave

#endif
