#ifndef STWAVE_PIECEWISE_HPP
#define STWAVE_PIECEWISE_HPP

#include <vector>

namespace stwave {

/// Dense polynomial in one variable, monomial coefficients c[0] + c[1]*x + ...
class Poly {
 public:
  Poly() : c_{0.0} {}
  explicit Poly(std::vector<double> coeffs);
  static Poly constant(double c);
  static Poly linear(double c0, double c1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }
  bool is_zero() const;

  double eval(double x) const;
  Poly derivative() const;
  Poly antiderivative() const;  ///< constant of integration 0
  double definite_integral(double a, double b) const;
  /// q with q(x) = p(x + dx)
  Poly shifted_argument(double dx) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(double a) const;

 private:
  std::vector<double> c_;
};

/// Exact piecewise polynomial in time over a partition of [0, horizon].
/// Each piece stores its polynomial in the local variable t - midpoint,
/// which keeps time shifts exact. Evaluation outside [0, horizon] returns
/// zero (every function of time is extended by zero).
class PiecewisePoly {
 public:
  static PiecewisePoly zero(double horizon);
  /// p (given in global time) on [a, b], zero elsewhere.
  static PiecewisePoly segment(double horizon, double a, double b,
                               const Poly& p);
  /// Continuous piecewise linear interpolant of (nodes, values), zero
  /// outside [nodes.front(), nodes.back()].
  static PiecewisePoly interpolant(double horizon,
                                   const std::vector<double>& nodes,
                                   const std::vector<double>& values);
  /// Piecewise constant with the given breakpoints (values.size()+1 nodes).
  static PiecewisePoly step(double horizon, const std::vector<double>& nodes,
                            const std::vector<double>& values);

  double horizon() const { return horizon_; }
  const std::vector<double>& breakpoints() const { return breaks_; }
  int piece_count() const { return static_cast<int>(pieces_.size()); }
  const Poly& piece(int i) const { return pieces_[i]; }
  double piece_mid(int i) const { return 0.5 * (breaks_[i] + breaks_[i + 1]); }
  int max_degree() const;

  double eval(double t) const;
  PiecewisePoly derivative() const;
  /// F with F' = f and F(0) = 0.
  PiecewisePoly antiderivative() const;
  /// F with F' = f and F(horizon) = 0, i.e. F(t) = -integral over (t, T).
  PiecewisePoly antiderivative_reverse() const;
  /// t -> f(t - delta) with zero extension, delta >= 0.
  PiecewisePoly shifted_forward(double delta) const;
  PiecewisePoly scaled(double a) const;

  PiecewisePoly operator+(const PiecewisePoly& o) const;
  PiecewisePoly operator-(const PiecewisePoly& o) const;

  double integrate(double a, double b) const;
  double integral_of_square() const;

  /// Same function on the partition refined by the given breakpoints.
  PiecewisePoly refined(const std::vector<double>& extra) const;

 private:
  PiecewisePoly(double horizon, std::vector<double> breaks,
                std::vector<Poly> pieces);

  double horizon_ = 0.0;
  std::vector<double> breaks_;
  std::vector<Poly> pieces_;  // local variable t - piece midpoint
};

}  // namespace stwave

#endif
