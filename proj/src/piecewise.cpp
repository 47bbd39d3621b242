#include "stwave/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stwave {

namespace {

void trim(std::vector<double>& c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_ = {0.0};
  trim(c_);
}

Poly Poly::constant(double c) { return Poly({c}); }

Poly Poly::linear(double c0, double c1) { return Poly({c0, c1}); }

bool Poly::is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }

double Poly::eval(double x) const {
  double r = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() == 1) return Poly();
  std::vector<double> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * i;
  return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
  std::vector<double> a(c_.size() + 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / (i + 1);
  return Poly(std::move(a));
}

double Poly::definite_integral(double a, double b) const {
  Poly f = antiderivative();
  return f.eval(b) - f.eval(a);
}

Poly Poly::shifted_argument(double dx) const {
  // binomial expansion of sum c_k (x + dx)^k
  std::vector<double> r(c_.size(), 0.0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    double binom = 1.0;  // C(k, j) * dx^(k-j), built from j = k downwards
    double power = 1.0;
    for (std::size_t j = k + 1; j-- > 0;) {
      r[j] += c_[k] * binom * power;
      if (j > 0) {
        binom = binom * j / (k - j + 1);
        power *= dx;
      }
    }
  }
  return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1.0); }

Poly Poly::operator*(const Poly& o) const {
  std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::scaled(double a) const {
  std::vector<double> r = c_;
  for (double& x : r) x *= a;
  return Poly(std::move(r));
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kBreakTolScale = 1e-12;

std::vector<double> merge_breaks(const std::vector<double>& a,
                                 const std::vector<double>& b, double horizon) {
  std::vector<double> m;
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  const double tol = kBreakTolScale * std::max(1.0, horizon);
  std::vector<double> out;
  for (double x : m) {
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  }
  out.front() = 0.0;
  out.back() = horizon;
  return out;
}

}  // namespace

PiecewisePoly::PiecewisePoly(double horizon, std::vector<double> breaks,
                             std::vector<Poly> pieces)
    : horizon_(horizon), breaks_(std::move(breaks)), pieces_(std::move(pieces)) {}

PiecewisePoly PiecewisePoly::zero(double horizon) {
  if (!(horizon > 0.0)) throw std::domain_error("PiecewisePoly: horizon <= 0");
  return PiecewisePoly(horizon, {0.0, horizon}, {Poly()});
}

PiecewisePoly PiecewisePoly::segment(double horizon, double a, double b,
                                     const Poly& p) {
  if (!(horizon > 0.0)) throw std::domain_error("PiecewisePoly: horizon <= 0");
  a = std::max(a, 0.0);
  b = std::min(b, horizon);
  if (!(b > a)) return zero(horizon);
  std::vector<double> breaks{0.0};
  std::vector<Poly> pieces;
  const double tol = kBreakTolScale * std::max(1.0, horizon);
  if (a > tol) {
    breaks.push_back(a);
    pieces.push_back(Poly());
  }
  double mid = 0.5 * (std::max(a, 0.0) + b);
  breaks.push_back(b);
  pieces.push_back(p.shifted_argument(mid));
  if (b < horizon - tol) {
    breaks.push_back(horizon);
    pieces.push_back(Poly());
  } else {
    breaks.back() = horizon;
  }
  return PiecewisePoly(horizon, std::move(breaks), std::move(pieces));
}

PiecewisePoly PiecewisePoly::interpolant(double horizon,
                                         const std::vector<double>& nodes,
                                         const std::vector<double>& values) {
  if (nodes.size() < 2 || nodes.size() != values.size()) {
    throw std::domain_error("PiecewisePoly::interpolant: bad node data");
  }
  PiecewisePoly f = zero(horizon);
  const double tol = kBreakTolScale * std::max(1.0, horizon);
  std::vector<double> breaks{0.0};
  std::vector<Poly> pieces;
  if (nodes.front() > tol) {
    breaks.push_back(nodes.front());
    pieces.push_back(Poly());
  }
  for (std::size_t e = 0; e + 1 < nodes.size(); ++e) {
    double a = nodes[e], b = nodes[e + 1];
    if (!(b > a)) throw std::domain_error("interpolant: nodes not increasing");
    double mid = 0.5 * (a + b);
    double slope = (values[e + 1] - values[e]) / (b - a);
    double at_mid = values[e] + slope * (mid - a);
    breaks.push_back(b);
    pieces.push_back(Poly::linear(at_mid, slope));
  }
  if (nodes.back() < horizon - tol) {
    breaks.push_back(horizon);
    pieces.push_back(Poly());
  } else {
    breaks.back() = horizon;
  }
  return PiecewisePoly(horizon, std::move(breaks), std::move(pieces));
}

PiecewisePoly PiecewisePoly::step(double horizon,
                                  const std::vector<double>& nodes,
                                  const std::vector<double>& values) {
  if (nodes.size() != values.size() + 1) {
    throw std::domain_error("PiecewisePoly::step: bad node data");
  }
  const double tol = kBreakTolScale * std::max(1.0, horizon);
  std::vector<double> breaks{0.0};
  std::vector<Poly> pieces;
  if (nodes.front() > tol) {
    breaks.push_back(nodes.front());
    pieces.push_back(Poly());
  }
  for (std::size_t e = 0; e < values.size(); ++e) {
    breaks.push_back(nodes[e + 1]);
    pieces.push_back(Poly::constant(values[e]));
  }
  if (nodes.back() < horizon - tol) {
    breaks.push_back(horizon);
    pieces.push_back(Poly());
  } else {
    breaks.back() = horizon;
  }
  return PiecewisePoly(horizon, std::move(breaks), std::move(pieces));
}

int PiecewisePoly::max_degree() const {
  int d = 0;
  for (const Poly& p : pieces_) d = std::max(d, p.degree());
  return d;
}

double PiecewisePoly::eval(double t) const {
  if (t < 0.0 || t > horizon_) return 0.0;
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  int i = static_cast<int>(it - breaks_.begin()) - 1;
  if (i < 0) i = 0;
  if (i >= piece_count()) i = piece_count() - 1;
  return pieces_[i].eval(t - piece_mid(i));
}

PiecewisePoly PiecewisePoly::derivative() const {
  std::vector<Poly> pieces;
  pieces.reserve(pieces_.size());
  for (const Poly& p : pieces_) pieces.push_back(p.derivative());
  return PiecewisePoly(horizon_, breaks_, std::move(pieces));
}

PiecewisePoly PiecewisePoly::antiderivative() const {
  std::vector<Poly> pieces;
  pieces.reserve(pieces_.size());
  double carried = 0.0;
  for (int i = 0; i < piece_count(); ++i) {
    Poly prim = pieces_[i].antiderivative();
    double half = 0.5 * (breaks_[i + 1] - breaks_[i]);
    double at_left = prim.eval(-half);
    Poly adj = prim + Poly::constant(carried - at_left);
    carried = adj.eval(half);
    pieces.push_back(std::move(adj));
  }
  return PiecewisePoly(horizon_, breaks_, std::move(pieces));
}

PiecewisePoly PiecewisePoly::antiderivative_reverse() const {
  PiecewisePoly f = antiderivative();
  double total = f.eval(horizon_);
  for (Poly& p : f.pieces_) p = p - Poly::constant(total);
  return f;
}

PiecewisePoly PiecewisePoly::shifted_forward(double delta) const {
  if (delta < 0.0) {
    throw std::domain_error("shifted_forward: delta must be >= 0");
  }
  if (delta == 0.0) return *this;
  const double tol = kBreakTolScale * std::max(1.0, horizon_);
  if (delta >= horizon_ - tol) return zero(horizon_);
  std::vector<double> breaks{0.0, delta};
  std::vector<Poly> pieces{Poly()};
  for (int i = 0; i < piece_count(); ++i) {
    double a = breaks_[i] + delta;
    double b = breaks_[i + 1] + delta;
    if (a >= horizon_ - tol) break;
    if (b > horizon_) b = horizon_;
    breaks.push_back(b);
    // local coefficients are reused verbatim when the midpoint just moves
    // by delta; a piece clipped at the horizon must be recentered
    double new_mid = 0.5 * (a + b);
    double old_mid_shifted = piece_mid(i) + delta;
    if (new_mid == old_mid_shifted) {
      pieces.push_back(pieces_[i]);
    } else {
      pieces.push_back(pieces_[i].shifted_argument(new_mid - old_mid_shifted));
    }
    if (b == horizon_) break;
  }
  if (breaks.back() < horizon_ - tol) {
    breaks.push_back(horizon_);
    pieces.push_back(Poly());
  } else {
    breaks.back() = horizon_;
  }
  return PiecewisePoly(horizon_, std::move(breaks), std::move(pieces));
}

PiecewisePoly PiecewisePoly::scaled(double a) const {
  std::vector<Poly> pieces;
  pieces.reserve(pieces_.size());
  for (const Poly& p : pieces_) pieces.push_back(p.scaled(a));
  return PiecewisePoly(horizon_, breaks_, std::move(pieces));
}

PiecewisePoly PiecewisePoly::refined(const std::vector<double>& extra) const {
  std::vector<double> sorted = extra;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> breaks = merge_breaks(breaks_, sorted, horizon_);
  std::vector<Poly> pieces(breaks.size() - 1);
  const double tol = kBreakTolScale * std::max(1.0, horizon_);
  int src = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double mid = 0.5 * (breaks[i] + breaks[i + 1]);
    while (src + 1 < piece_count() && breaks_[src + 1] <= mid + tol) ++src;
    pieces[i] = pieces_[src].shifted_argument(mid - piece_mid(src));
  }
  return PiecewisePoly(horizon_, std::move(breaks), std::move(pieces));
}

PiecewisePoly PiecewisePoly::operator+(const PiecewisePoly& o) const {
  if (std::abs(horizon_ - o.horizon_) >
      kBreakTolScale * std::max(1.0, horizon_)) {
    throw std::domain_error("PiecewisePoly: mismatched horizons");
  }
  PiecewisePoly a = refined(o.breaks_);
  PiecewisePoly b = o.refined(breaks_);
  std::vector<Poly> pieces(a.pieces_.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    pieces[i] = a.pieces_[i] + b.pieces_[i];
  }
  return PiecewisePoly(horizon_, a.breaks_, std::move(pieces));
}

PiecewisePoly PiecewisePoly::operator-(const PiecewisePoly& o) const {
  return *this + o.scaled(-1.0);
}

double PiecewisePoly::integrate(double a, double b) const {
  a = std::max(a, 0.0);
  b = std::min(b, horizon_);
  if (!(b > a)) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < piece_count(); ++i) {
    double lo = std::max(a, breaks_[i]);
    double hi = std::min(b, breaks_[i + 1]);
    if (hi > lo) {
      double mid = piece_mid(i);
      sum += pieces_[i].definite_integral(lo - mid, hi - mid);
    }
  }
  return sum;
}

double PiecewisePoly::integral_of_square() const {
  double sum = 0.0;
  for (int i = 0; i < piece_count(); ++i) {
    double half = 0.5 * (breaks_[i + 1] - breaks_[i]);
    Poly sq = pieces_[i] * pieces_[i];
    sum += sq.definite_integral(-half, half);
  }
  return sum;
}

}  // namespace stwave
