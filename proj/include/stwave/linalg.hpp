#ifndef STWAVE_LINALG_HPP
#define STWAVE_LINALG_HPP

#include <functional>
#include <utility>
#include <vector>

namespace stwave {

using Vector = std::vector<double>;

/// Column-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(j) * rows_ + i];
  }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(j) * rows_ + i];
  }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix transposed(const DenseMatrix& a);
DenseMatrix symmetric_part(const DenseMatrix& a);
Vector matvec(const DenseMatrix& a, const Vector& x);
Vector matvec_transposed(const DenseMatrix& a, const Vector& x);
double max_abs(const DenseMatrix& a);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);

struct LuSolveResult {
  Vector x;
  double relative_residual;  ///< ||Ax-b|| / ||b|| against the input system
};

/// LU with partial pivoting; throws std::runtime_error on a pivot below
/// 1e-14 * max|A|.
LuSolveResult lu_solve(DenseMatrix a, Vector b);

/// Extreme eigenvalues of a symmetric matrix via cyclic Jacobi.
/// Throws std::domain_error when the input is not symmetric to 1e-12
/// relative.
std::pair<double, double> sym_eig_extremes(DenseMatrix a);

/// Largest eigenvalue of B^T B by power iteration on x -> B^T (B x);
/// the Gram matrix is never formed. apply maps cols -> rows,
/// apply_transpose maps rows -> cols. Converged when the Rayleigh
/// quotient changes by less than tol relatively over three consecutive
/// iterations.
double power_max_gram(int rows, int cols,
                      const std::function<void(const double*, double*)>& apply,
                      const std::function<void(const double*, double*)>& apply_transpose,
                      double tol, Vector* eigvec_inout = nullptr);

double power_max_gram(const DenseMatrix& b, double tol);

}  // namespace stwave

#endif
