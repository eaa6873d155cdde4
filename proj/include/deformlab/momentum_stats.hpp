#pragma once

// Momentum statistics of the localized states e_n of the eps = -1 algebra.
// The variable P = l p = r sin(theta) has characteristic function J0(s r) and the
// arcsine density 1 / (pi sqrt(r^2 - P^2)) on (-r, r).

#include "deformlab/quadrature.hpp"
#include "deformlab/repr_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace deformlab {

/// Series / asymptotic crossover for J0.
inline constexpr double j0_crossover = 12.0;

/// Power series sum_k (-1)^k (z/2)^{2k} / (k!)^2.
inline double bessel_j0_series(double z)
{
  const double q = -0.25 * z * z;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

/// Hankel expansion sqrt(2 / pi z) (P cos chi - Q sin chi), chi = z - pi/4,
/// summed until the terms stop decreasing.
inline double bessel_j0_asymptotic(double z)
{
  z = std::abs(z);
  if (z == 0.0) throw std::domain_error("bessel_j0_asymptotic: z must be nonzero");
  // a_k = prod_{j<=k} (-(2j-1)^2) / (k! 8^k); P = sum (-1)^m a_{2m} z^{-2m}, Q = sum (-1)^m a_{2m+1} z^{-2m-1}
  double p = 1.0, q = 0.0;
  double a = 1.0;  // a_k / z^k
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    a *= -(odd * odd) / (8.0 * k * z);
    if (std::abs(a) >= prev) break;
    prev = std::abs(a);
    const int m = k / 2;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) p += sign * a; else q += sign * a;
    if (std::abs(a) < 1e-17) break;
  }
  const double chi = z - 0.25 * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * z)) * (p * std::cos(chi) - q * std::sin(chi));
}

inline double bessel_j0(double z)
{
  if (!std::isfinite(z)) throw std::domain_error("bessel_j0: argument must be finite");
  z = std::abs(z);
  return z <= j0_crossover ? bessel_j0_series(z) : bessel_j0_asymptotic(z);
}

/// (1 / 2 pi) int_0^{2 pi} cos(z sin theta) d theta by the periodic trapezoid rule,
/// which converges geometrically once the point count exceeds |z|.
inline double bessel_j0_quadrature(double z)
{
  const auto m = static_cast<std::size_t>(64 + 2 * static_cast<std::size_t>(std::ceil(std::abs(z))));
  double sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    sum += std::cos(z * std::sin(theta));
  }
  return sum / static_cast<double>(m);
}

/// C(s) = <e_n, e^{i s P} e_n> = J0(s r).
inline double char_fn(double s, double r)
{
  if (!(r > 0.0)) throw std::invalid_argument("char_fn: r must be > 0");
  return bessel_j0(s * r);
}

/// <e_n, e^{i s P} e_n> evaluated directly on a circle grid, P = r sin(theta),
/// e_n(theta) = e^{-i n theta}. The imaginary part is returned for inspection.
inline cplx char_fn_quadrature(double s, double r, int n = 0)
{
  if (!(r > 0.0)) throw std::invalid_argument("char_fn_quadrature: r must be > 0");
  auto m = static_cast<std::size_t>(64 + 2 * static_cast<std::size_t>(std::ceil(std::abs(s * r))) + 2 * static_cast<std::size_t>(std::abs(n)));
  m += m % 2;
  cplx sum{};
  for (std::size_t j = 0; j < m; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    const cplx e = std::polar(1.0, -static_cast<double>(n) * theta);
    sum += std::conj(e) * std::polar(1.0, s * r * std::sin(theta)) * e;
  }
  return sum / static_cast<double>(m);
}

/// Arcsine law of P on (-r, r).
struct ArcsineValue {
  std::optional<double> density;  ///< empty at |P| = r (integrable singularity)
  double cdf = 0.0;
  double second_moment = 0.0;
};

inline ArcsineValue arcsine_density(double P, double r)
{
  if (!(r > 0.0)) throw std::invalid_argument("arcsine_density: r must be > 0");
  ArcsineValue v;
  v.second_moment = 0.5 * r * r;
  const double u = std::clamp(P / r, -1.0, 1.0);
  v.cdf = 0.5 + std::asin(u) / std::numbers::pi;
  const double a = std::abs(P);
  if (a > r) v.density = 0.0;
  else if (a < r) v.density = 1.0 / (std::numbers::pi * std::sqrt(r * r - P * P));
  return v;
}

/// int_{lo}^{hi} f(P) nu(P) dP with P = r sin(u), which removes the endpoint
/// singularity: nu(P) dP = du / pi.
template <typename F>
double arcsine_expectation(F&& f, double r, double lo, double hi, std::size_t panels = 16)
{
  lo = std::clamp(lo, -r, r);
  hi = std::clamp(hi, -r, r);
  const double ulo = std::asin(lo / r), uhi = std::asin(hi / r);
  return quad::composite([&](double u) { return f(r * std::sin(u)) / std::numbers::pi; }, ulo, uhi, panels);
}

inline double arcsine_moment(int order, double r)
{
  return arcsine_expectation([order](double P) { return std::pow(P, order); }, r, -r, r);
}

/// nu(P) recovered by inverting C(s) over [-S, S] with a Hann taper cos^2(pi s / 2S):
/// nu(P) ~ (1 / pi) int_0^S w(s) J0(s r) cos(s P) ds.
inline double density_from_char_fn(double P, double r, double s_max)
{
  if (!(s_max > 0.0)) throw std::invalid_argument("density_from_char_fn: s_max must be > 0");
  const auto panels = static_cast<std::size_t>(std::ceil(s_max * (r + std::abs(P)) / 2.0)) + 16;
  auto integrand = [&](double s) {
    const double w = std::cos(0.5 * std::numbers::pi * s / s_max);
    return w * w * char_fn(s, r) * std::cos(s * P);
  };
  return quad::composite(integrand, 0.0, s_max, panels) / std::numbers::pi;
}

/// Density-of-states product for the eps = -1 algebra.
struct DosProduct {
  double mu_x_inv;           ///< spacing l of the position spectrum
  double mu_p;               ///< probability of p in [-1/2, 1/2]
  double mu_p_inv;
  double product;            ///< l / mu_p
  double mu_p_small_ell;     ///< l / (pi r), the small-l form of mu_p
  double small_ell_product;  ///< pi r, the l -> 0 limit of the product
};

inline DosProduct dos_product(const AlgebraParams& params)
{
  params.validate();
  if (params.epsilon != -1) throw std::invalid_argument("dos_product: requires epsilon = -1");
  if (!(params.ell > 0.0)) throw std::invalid_argument("dos_product: ell must be > 0");
  if (params.ell > 2.0 * params.r) throw std::domain_error("dos_product: momentum band narrower than the unit interval");
  const double mu_p = 2.0 / std::numbers::pi * std::asin(params.ell / (2.0 * params.r));
  return {params.ell, mu_p, 1.0 / mu_p, params.ell / mu_p, params.ell / (std::numbers::pi * params.r),
          std::numbers::pi * params.r};
}

/// Same mu_p by adaptive quadrature of the arcsine density of P = l p over
/// [-l/2, l/2]; the substitution is only used when the interval reaches the band edge.
inline double dos_mu_p_quadrature(const AlgebraParams& params)
{
  const double half = 0.5 * params.ell, r = params.r;
  if (half >= r) return arcsine_expectation([](double) { return 1.0; }, r, -half, half);
  return quad::adaptive([r](double P) { return 1.0 / (std::numbers::pi * std::sqrt(r * r - P * P)); }, -half, half, 1e-15);
}

/// Box-quantized free particle: mu(x)^{-1} mu(p)^{-1} = 2 pi.
inline constexpr double free_particle_dos_product = 2.0 * std::numbers::pi;

}  // namespace deformlab
