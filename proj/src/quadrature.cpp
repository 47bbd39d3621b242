#include "stwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "stwave/fourier.hpp"

namespace stwave {

namespace {

GaussRule make_gauss_rule(int order) {
  if (order < 1) throw std::domain_error("gauss_rule: order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_rule(int order) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_gauss_rule(order)).first;
  return it->second;
}

double integrate_gauss(const std::function<double(double)>& f, double a,
                       double b, int order) {
  const GaussRule& rule = gauss_rule(order);
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

double integrate_composite(const std::function<double(double)>& f, double a,
                           double b, int panels, int order) {
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    double lo = a + (b - a) * p / panels;
    double hi = a + (b - a) * (p + 1) / panels;
    sum += integrate_gauss(f, lo, hi, order);
  }
  return sum;
}

double integrate_graded(const std::function<double(double)>& f, double a,
                        double b, bool grade_left, bool grade_right,
                        const GradedOptions& opts) {
  if (!(b > a)) return 0.0;
  const double width = (b - a) / opts.base_panels;
  double sum = 0.0;
  for (int p = 0; p < opts.base_panels; ++p) {
    double lo = a + width * p;
    double hi = (p == opts.base_panels - 1) ? b : a + width * (p + 1);
    bool left = grade_left && p == 0;
    bool right = grade_right && p == opts.base_panels - 1;
    if (left && right && opts.base_panels == 1) {
      // grade both ends of a single panel: split in the middle
      double mid = 0.5 * (lo + hi);
      GradedOptions sub = opts;
      sub.base_panels = 1;
      sum += integrate_graded(f, lo, mid, true, false, sub);
      sum += integrate_graded(f, mid, hi, false, true, sub);
      continue;
    }
    if (!left && !right) {
      sum += integrate_gauss(f, lo, hi, opts.order);
      continue;
    }
    // geometric fan toward the singular endpoint
    double len = hi - lo;
    double prev = len;
    for (int lvl = 0; lvl < opts.levels; ++lvl) {
      double next = prev * opts.ratio;
      double c0 = left ? lo + next : hi - prev;
      double c1 = left ? lo + prev : hi - next;
      sum += integrate_gauss(f, c0, c1, opts.order);
      prev = next;
    }
    double c0 = left ? lo : hi - prev;
    double c1 = left ? lo + prev : hi;
    sum += integrate_gauss(f, c0, c1, opts.order);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// fast rectangle integral of the log-tan kernel

namespace {

struct LinearPiece {
  double lo, hi;  // interval in the rotated variable, inside [0, 2T]
  double c0, c1;  // weight c0 + c1 * x
};

// trapezoidal overlap weight with breakpoints x0 <= x1 <= x2 <= x3:
// rises from 0 on [x0,x1], flat on [x1,x2], falls to 0 on [x2,x3]
void trapezoid_pieces(double x0, double x1, double x2, double x3,
                      std::vector<LinearPiece>& out) {
  const double tol = 1e-14 * std::max({std::abs(x0), std::abs(x3), 1.0});
  if (x1 - x0 > tol) out.push_back({x0, x1, -x0, 1.0});
  if (x2 - x1 > tol) out.push_back({x1, x2, x1 - x0, 0.0});
  if (x3 - x2 > tol) out.push_back({x2, x3, x3, -1.0});
}

// fold pieces in a signed variable v into |v|
void fold_abs(const std::vector<LinearPiece>& in, std::vector<LinearPiece>& out) {
  for (const LinearPiece& p : in) {
    if (p.hi <= 0.0) {
      out.push_back({-p.hi, -p.lo, p.c0, -p.c1});
    } else if (p.lo >= 0.0) {
      out.push_back(p);
    } else {
      out.push_back({0.0, -p.lo, p.c0, -p.c1});
      out.push_back({0.0, p.hi, p.c0, p.c1});
    }
  }
}

// integral over [alpha, beta] of (c0 + c1 x) ln(g x) dx, 0 <= alpha < beta
double linear_log_integral(double c0, double c1, double g, double alpha,
                           double beta) {
  auto prim = [&](double x) {
    if (x == 0.0) return 0.0;
    double lx = std::log(x);
    return c0 * x * (lx - 1.0) + 0.5 * c1 * x * x * (lx - 0.5);
  };
  double log_g = std::log(g);
  double poly = c0 * (beta - alpha) + 0.5 * c1 * (beta * beta - alpha * alpha);
  return log_g * poly + prim(beta) - prim(alpha);
}

double ln_sinc(double y) {
  if (y < 1e-4) {
    double y2 = y * y;
    return -y2 / 6.0 - y2 * y2 / 180.0;
  }
  return std::log(std::sin(y) / y);
}

// integral over [alpha, beta] of (c0 + c1 x) ln(tan(a x)) dx where
// a = pi/(4T); exact for the two logarithmic endpoint factors, Gauss on the
// analytic remainder ln sinc(a x) - ln sinc(a (2T - x))
double piece_log_tan_integral(const LinearPiece& p, double horizon) {
  const double two_t = 2.0 * horizon;
  const double a = std::numbers::pi / (4.0 * horizon);
  double value = linear_log_integral(p.c0, p.c1, a, p.lo, p.hi);
  value -= linear_log_integral(p.c0 + two_t * p.c1, -p.c1, a, two_t - p.hi,
                               two_t - p.lo);
  auto smooth = [&](double x) {
    return (p.c0 + p.c1 * x) * (ln_sinc(a * x) - ln_sinc(a * (two_t - x)));
  };
  int panels = p.hi - p.lo > horizon ? 2 : 1;
  value += integrate_composite(smooth, p.lo, p.hi, panels, 12);
  return value;
}

}  // namespace

double kernel_rect_integral(double s0, double s1, double t0, double t1,
                            double horizon) {
  if (!(s1 > s0) || !(t1 > t0)) return 0.0;
  std::vector<LinearPiece> pieces;
  pieces.reserve(8);
  // contribution of ln tan(pi (s+t) / 4T)
  trapezoid_pieces(s0 + t0, std::min(s0 + t1, s1 + t0),
                   std::max(s0 + t1, s1 + t0), s1 + t1, pieces);
  // contribution of ln tan(pi |t-s| / 4T), folded at v = 0
  std::vector<LinearPiece> signed_pieces;
  signed_pieces.reserve(4);
  trapezoid_pieces(t0 - s1, std::min(t0 - s0, t1 - s1),
                   std::max(t0 - s0, t1 - s1), t1 - s0, signed_pieces);
  fold_abs(signed_pieces, pieces);

  double sum = 0.0;
  for (const LinearPiece& p : pieces) {
    if (p.hi - p.lo > 0.0) sum += piece_log_tan_integral(p, horizon);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// graded reference

namespace {

// quadrature nodes are strictly interior, but guard against underflow when
// a node lands within rounding of the singular set
double safe_kernel(double s, double t, double horizon) {
  const double a = std::numbers::pi / (4.0 * horizon);
  double diff = std::abs(t - s);
  double sum = s + t;
  if (diff < 1e-300) diff = 1e-300;
  if (sum < 1e-300) sum = 1e-300;
  return std::log(std::tan(a * sum)) + std::log(std::tan(a * diff));
}

double inner_integral(double t, double s0, double s1, double horizon,
                      const std::function<double(double)>& q,
                      const GradedOptions& opts) {
  auto f = [&](double s) { return q(s) * safe_kernel(s, t, horizon); };
  if (t > s0 && t < s1) {
    return integrate_graded(f, s0, t, true, true, opts) +
           integrate_graded(f, t, s1, true, true, opts);
  }
  return integrate_graded(f, s0, s1, true, true, opts);
}

double weighted_rect_graded(const std::function<double(double)>& p,
                            const std::function<double(double)>& q, double s0,
                            double s1, double t0, double t1, double horizon,
                            const GradedOptions& opts) {
  auto outer = [&](double t) {
    return p(t) * inner_integral(t, s0, s1, horizon, q, opts);
  };
  std::vector<double> splits{t0};
  for (double c : {s0, s1}) {
    if (c > t0 && c < t1) splits.push_back(c);
  }
  splits.push_back(t1);
  std::sort(splits.begin(), splits.end());
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
    sum += integrate_graded(outer, splits[i], splits[i + 1], true, true, opts);
  }
  return sum;
}

}  // namespace

double kernel_rect_integral_graded(double s0, double s1, double t0, double t1,
                                   double horizon, const GradedOptions& opts) {
  if (!(s1 > s0) || !(t1 > t0)) return 0.0;
  auto one = [](double) { return 1.0; };
  return weighted_rect_graded(one, one, s0, s1, t0, t1, horizon, opts);
}

double kernel_pairing_graded(const std::function<double(double)>& p,
                             const std::function<double(double)>& q,
                             double horizon, const GradedOptions& opts) {
  return weighted_rect_graded(p, q, 0.0, horizon, 0.0, horizon, horizon, opts);
}

}  // namespace stwave
