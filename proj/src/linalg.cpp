#include "stwave/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace stwave {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 1.0;
  return a;
}

DenseMatrix transposed(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
  }
  return t;
}

DenseMatrix symmetric_part(const DenseMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::domain_error("symmetric_part: matrix not square");
  }
  DenseMatrix s(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  }
  return s;
}

Vector matvec(const DenseMatrix& a, const Vector& x) {
  if (static_cast<int>(x.size()) != a.cols()) {
    throw std::domain_error("matvec: dimension mismatch");
  }
  Vector y(a.rows(), 0.0);
  for (int j = 0; j < a.cols(); ++j) {
    double xj = x[j];
    const double* col = a.data() + static_cast<std::size_t>(j) * a.rows();
    for (int i = 0; i < a.rows(); ++i) y[i] += col[i] * xj;
  }
  return y;
}

Vector matvec_transposed(const DenseMatrix& a, const Vector& x) {
  if (static_cast<int>(x.size()) != a.rows()) {
    throw std::domain_error("matvec_transposed: dimension mismatch");
  }
  Vector y(a.cols(), 0.0);
  for (int j = 0; j < a.cols(); ++j) {
    const double* col = a.data() + static_cast<std::size_t>(j) * a.rows();
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i) s += col[i] * x[i];
    y[j] = s;
  }
  return y;
}

double max_abs(const DenseMatrix& a) {
  double m = 0.0;
  const double* p = a.data();
  std::size_t n = static_cast<std::size_t>(a.rows()) * a.cols();
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(p[i]));
  return m;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::domain_error("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) {
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
    }
  }
  return m;
}

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

LuSolveResult lu_solve(DenseMatrix a, Vector b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) {
    throw std::domain_error("lu_solve: dimension mismatch");
  }
  const DenseMatrix a0 = a;
  const Vector b0 = b;
  const double pivot_floor = 1e-14 * max_abs(a);

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best <= pivot_floor) {
      throw std::runtime_error("lu_solve: numerically singular matrix");
    }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(b[k], b[p]);
    }
    double inv = 1.0 / a(k, k);
    for (int i = k + 1; i < n; ++i) {
      double m = a(i, k) * inv;
      a(i, k) = m;
      if (m != 0.0) {
        for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
        b[i] -= m * b[k];
      }
    }
  }

  Vector x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }

  Vector r = matvec(a0, x);
  for (int i = 0; i < n; ++i) r[i] -= b0[i];
  double denom = norm2(b0);
  double rel = denom > 0.0 ? norm2(r) / denom : norm2(r);
  return {std::move(x), rel};
}

std::pair<double, double> sym_eig_extremes(DenseMatrix a) {
  const int n = a.rows();
  if (a.cols() != n) throw std::domain_error("sym_eig_extremes: not square");
  double scale = max_abs(a);
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-12 * std::max(scale, 1.0)) {
        throw std::domain_error("sym_eig_extremes: matrix not symmetric");
      }
      double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = a(j, i) = v;
    }
  }
  if (n == 1) return {a(0, 0), a(0, 0)};

  auto off_norm = [&]() {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < j; ++i) s += a(i, j) * a(i, j);
    }
    return std::sqrt(2.0 * s);
  };

  const double tol = 1e-12 * std::max(scale, 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_norm() <= tol) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  double lo = a(0, 0), hi = a(0, 0);
  for (int i = 1; i < n; ++i) {
    lo = std::min(lo, a(i, i));
    hi = std::max(hi, a(i, i));
  }
  return {lo, hi};
}

namespace {

// full Jacobi eigendecomposition for the small Rayleigh-Ritz problems
void jacobi_eigen(DenseMatrix a, Vector& values, DenseMatrix& vectors) {
  const int n = a.rows();
  vectors = DenseMatrix::identity(n);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (off <= 1e-30 * std::max(1.0, max_abs(a))) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = vectors(k, p), vkq = vectors(k, q);
          vectors(k, p) = c * vkp - s * vkq;
          vectors(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  values.resize(n);
  for (int i = 0; i < n; ++i) values[i] = a(i, i);
}

// modified Gram-Schmidt with one re-orthogonalization pass; degenerate
// columns are replaced by fresh random directions
void orthonormalize(std::vector<Vector>& basis, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        double proj = dot(basis[i], basis[j]);
        for (std::size_t k = 0; k < basis[j].size(); ++k) {
          basis[j][k] -= proj * basis[i][k];
        }
      }
      double nj = norm2(basis[j]);
      if (nj > 1e-12) {
        for (double& v : basis[j]) v /= nj;
        break;
      }
      for (double& v : basis[j]) v = unif(rng);
      pass = -1;  // restart the orthogonalization of this column
    }
  }
}

}  // namespace

double power_max_gram(int rows, int cols,
                      const std::function<void(const double*, double*)>& apply,
                      const std::function<void(const double*, double*)>& apply_transpose,
                      double tol, Vector* eigvec_inout) {
  if (rows < 1 || cols < 1) throw std::domain_error("power_max_gram: empty B");
  if (!(tol > 0.0)) throw std::domain_error("power_max_gram: tol must be > 0");

  // block power iteration with Rayleigh-Ritz: single-vector iteration stalls
  // on the tightly clustered top eigenvalues of the coupling Gram matrices
  const int block = std::min(8, cols);
  std::mt19937_64 rng(0x5741564583ull);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Vector> basis(block, Vector(cols));
  for (Vector& v : basis) {
    for (double& x : v) x = unif(rng);
  }
  if (eigvec_inout && static_cast<int>(eigvec_inout->size()) == cols &&
      norm2(*eigvec_inout) > 0.0) {
    basis[0] = *eigvec_inout;
  }
  orthonormalize(basis, rng);

  Vector y(rows);
  std::vector<Vector> image(block, Vector(cols));
  double lambda = 0.0;
  int settled = 0;
  for (long iter = 0; iter < 100000; ++iter) {
    double image_norm = 0.0;
    for (int j = 0; j < block; ++j) {
      apply(basis[j].data(), y.data());
      apply_transpose(y.data(), image[j].data());
      image_norm += dot(image[j], image[j]);
    }
    if (image_norm == 0.0) return 0.0;
    // Rayleigh-Ritz on the current subspace; the top Ritz value never
    // decreases across iterations of a PSD operator, so a warm-started run
    // can only improve on its seed
    DenseMatrix gram(block, block);
    for (int i = 0; i < block; ++i) {
      for (int j = 0; j <= i; ++j) {
        double g = dot(basis[i], image[j]);
        gram(i, j) = g;
        gram(j, i) = g;
      }
    }
    Vector values;
    DenseMatrix q;
    jacobi_eigen(gram, values, q);
    int top = 0;
    for (int i = 1; i < block; ++i) {
      if (values[i] > values[top]) top = i;
    }
    double theta = values[top];
    if (iter > 0 &&
        std::abs(theta - lambda) <= tol * std::max(theta, 1e-300)) {
      ++settled;
      if (settled >= 3) {
        if (eigvec_inout) {
          Vector v(cols, 0.0);
          for (int j = 0; j < block; ++j) {
            double qj = q(j, top);
            for (int k = 0; k < cols; ++k) v[k] += qj * basis[j][k];
          }
          *eigvec_inout = v;
        }
        return theta;
      }
    } else {
      settled = 0;
    }
    lambda = theta;
    basis.swap(image);
    orthonormalize(basis, rng);
  }
  throw std::runtime_error("power_max_gram: no convergence in 1e5 iterations");
}

double power_max_gram(const DenseMatrix& b, double tol) {
  auto apply = [&b](const double* x, double* y) {
    for (int i = 0; i < b.rows(); ++i) y[i] = 0.0;
    for (int j = 0; j < b.cols(); ++j) {
      const double* col = b.data() + static_cast<std::size_t>(j) * b.rows();
      for (int i = 0; i < b.rows(); ++i) y[i] += col[i] * x[j];
    }
  };
  auto apply_t = [&b](const double* y, double* z) {
    for (int j = 0; j < b.cols(); ++j) {
      const double* col = b.data() + static_cast<std::size_t>(j) * b.rows();
      double s = 0.0;
      for (int i = 0; i < b.rows(); ++i) s += col[i] * y[i];
      z[j] = s;
    }
  };
  return power_max_gram(b.rows(), b.cols(), apply, apply_t, tol);
}

}  // namespace stwave
