#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace deformlab::quad {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence.
class GaussLegendre {
public:
  explicit GaussLegendre(std::size_t order = 20) : nodes_(order), weights_(order)
  {
    if (order < 1) throw std::invalid_argument("GaussLegendre: order must be positive");
    const std::size_t n = order;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
          const double kk = static_cast<double>(k);
          const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
          p0 = p1;
          p1 = p2;
        }
        dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes_[i] = -x;
      nodes_[n - 1 - i] = x;
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      weights_[i] = w;
      weights_[n - 1 - i] = w;
    }
  }

  std::size_t order() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  template <typename F>
  auto integrate(F&& f, double a, double b) const
  {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    decltype(f(mid)) sum{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
    return sum * half;
  }

private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

inline const GaussLegendre& default_rule()
{
  static const GaussLegendre rule(20);
  return rule;
}

/// Composite Gauss-Legendre over `panels` equal sub-intervals of [a, b].
template <typename F>
auto composite(F&& f, double a, double b, std::size_t panels, const GaussLegendre& rule = default_rule())
{
  if (panels == 0) throw std::invalid_argument("composite: need at least one panel");
  const double h = (b - a) / static_cast<double>(panels);
  decltype(f(a)) sum{};
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    sum += rule.integrate(f, lo, p + 1 == panels ? b : lo + h);
  }
  return sum;
}

namespace detail {
template <typename F>
double adaptive_step(F& f, double a, double b, double whole, double tol, int depth, const GaussLegendre& rule)
{
  const double mid = 0.5 * (a + b);
  const double left = rule.integrate(f, a, mid);
  const double right = rule.integrate(f, mid, b);
  if (depth <= 0 || std::abs(left + right - whole) <= tol) return left + right;
  return adaptive_step(f, a, mid, left, 0.5 * tol, depth - 1, rule) +
         adaptive_step(f, mid, b, right, 0.5 * tol, depth - 1, rule);
}
}  // namespace detail

/// Adaptive bisection on a 20-point Gauss-Legendre panel, absolute tolerance.
template <typename F>
double adaptive(F&& f, double a, double b, double tol = 1e-13, int max_depth = 40)
{
  const auto& rule = default_rule();
  return detail::adaptive_step(f, a, b, rule.integrate(f, a, b), tol, max_depth, rule);
}

}  // namespace deformlab::quad
