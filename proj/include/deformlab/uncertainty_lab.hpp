#pragma once

// Uncertainty relations for the deformed algebra and its comparators:
// Gaussian states on the hyperbola, the deformed bound dx dp >= |<I>| / 2, the
// generalized uncertainty principle dx >= 1/(2 dp) + (C/4) dp with its operator
// realization, the angle / angular-momentum bound, localized lattice states and
// the phase-space measure comparison.

#include "deformlab/linalg.hpp"
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
#include <string_view>
#include <vector>

namespace deformlab {

enum class BoundKind { heisenberg, deformed_eq16, gup_eq8, angle_eq_B2 };

constexpr std::string_view to_string(BoundKind k)
{
  switch (k) {
    case BoundKind::heisenberg: return "heisenberg";
    case BoundKind::deformed_eq16: return "deformed_eq16";
    case BoundKind::gup_eq8: return "gup_eq8";
    case BoundKind::angle_eq_B2: return "angle_eq_B2";
  }
  return "unknown";
}

inline constexpr double bound_slack = 1e-10;

struct UncertaintyReport {
  double dx = 0.0;
  double dp = 0.0;
  double product = 0.0;
  double bound = 0.0;
  bool satisfied = false;
  BoundKind bound_kind{};

  static UncertaintyReport make(double dx, double dp, double bound, BoundKind kind)
  {
    const double product = dx * dp;
    return {dx, dp, product, bound, product >= bound - bound_slack, kind};
  }
};

// ---------------------------------------------------------------------------
// Gaussian states psi(mu) = (2 pi alpha)^{-1/4} exp(-mu^2 / 4 alpha), r = 1

struct GaussianSpec {
  double alpha = 1.0;
  AlgebraParams params{1.0, 1, 1.0, 1.0};

  void validate() const
  {
    params.validate();
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("GaussianSpec: alpha must be > 0");
    if (params.epsilon != 1) throw std::invalid_argument("GaussianSpec: Gaussian family lives on the eps = +1 hyperbola");
    if (!(params.ell > 0.0)) throw std::invalid_argument("GaussianSpec: ell must be > 0");
    if (params.r != 1.0) throw std::invalid_argument("GaussianSpec: moments are defined for r = 1");
  }
};

struct GaussianMoments {
  double mu_max = 0.0;
  double x_mean = 0.0;
  double p_mean = 0.0;
  double x2_quad = 0.0;
  double p2_quad = 0.0;
  double i_mean = 0.0;  ///< <I> = <cosh mu>
  double x2_printed = 0.0;
  double p2_printed = 0.0;
  double product_printed = 0.0;
  double dx = 0.0;
  double dp = 0.0;
  double product = 0.0;
  double bound = 0.0;  ///< |<I>| / 2

  UncertaintyReport report() const { return UncertaintyReport::make(dx, dp, bound, BoundKind::deformed_eq16); }
};

inline double gaussian_amplitude(double mu, double alpha)
{
  return std::pow(2.0 * std::numbers::pi * alpha, -0.25) * std::exp(-mu * mu / (4.0 * alpha));
}

/// Moments of the Gaussian by quadrature over mu in [-mu_max, mu_max]. The
/// default cutoff is gaussian_mu_max(alpha); a smaller cutoff is rejected.
inline GaussianMoments gaussian_moments(const GaussianSpec& spec, std::optional<double> mu_max = std::nullopt)
{
  spec.validate();
  const double alpha = spec.alpha;
  const double l = spec.params.ell;
  const double cutoff = mu_max.value_or(gaussian_mu_max(alpha));
  if (cutoff < gaussian_mu_max(alpha))
    throw std::domain_error("gaussian_moments: cutoff below the tail rule, quadrature would not converge");

  const double width = std::min(0.25, 0.5 * std::sqrt(alpha));
  const auto panels = static_cast<std::size_t>(std::ceil(2.0 * cutoff / width));
  auto integrate = [&](auto&& f) { return quad::composite(f, -cutoff, cutoff, panels); };
  auto density = [alpha](double mu) { const double a = gaussian_amplitude(mu, alpha); return a * a; };

  GaussianMoments g;
  g.mu_max = cutoff;
  // x = i l d/dmu; psi real so <x> = i l int psi psi', which vanishes by parity
  g.x_mean = integrate([&](double mu) { return -mu / (2.0 * alpha) * density(mu); }) * l;
  g.p_mean = integrate([&](double mu) { return std::sinh(mu) * density(mu); }) / l;
  g.x2_quad = l * l * integrate([&](double mu) {
    const double d = mu / (2.0 * alpha);
    return d * d * density(mu);
  });
  g.p2_quad = integrate([&](double mu) {
    const double s = std::sinh(mu);
    return s * s * density(mu);
  }) / (l * l);
  g.i_mean = integrate([&](double mu) { return std::cosh(mu) * density(mu); });

  g.x2_printed = l * l / (4.0 * alpha);
  g.p2_printed = (2.0 * std::exp(2.0 * alpha) - 1.0) / (4.0 * l * l);
  g.product_printed = 0.25 * (2.0 * std::exp(alpha) - 1.0) / alpha;

  g.dx = std::sqrt(g.x2_quad - g.x_mean * g.x_mean);
  g.dp = std::sqrt(g.p2_quad - g.p_mean * g.p_mean);
  g.product = g.dx * g.dp;
  g.bound = 0.5 * std::abs(g.i_mean);
  return g;
}

/// Grid version of the Gaussian on a hyperbola realization.
inline GridState gaussian_state(const OperatorRep& rep, double alpha, double center = 0.0, double wavenumber = 0.0)
{
  if (rep.basis_kind != BasisKind::hyperbola_grid) throw std::invalid_argument("gaussian_state: requires a hyperbola grid");
  return GridState::sample(rep, [=](double mu) {
    return gaussian_amplitude(mu - center, alpha) * std::polar(1.0, wavenumber * mu);
  });
}

/// dx, dp of a state in a realization, against the bound |<I>| / 2.
inline UncertaintyReport deformed_bound_check(const GridState& state, const OperatorRep& rep)
{
  if (!state.compatible_with(rep)) throw std::invalid_argument("deformed_bound_check: state and realization use different bases");
  const double dx = state.spread(rep.X);
  const double dp = state.spread(rep.P);
  const double bound = 0.5 * std::abs(state.expectation(rep.I));
  return UncertaintyReport::make(dx, dp, bound, BoundKind::deformed_eq16);
}

// ---------------------------------------------------------------------------
// Generalized uncertainty principle

inline double gup_bound(double c, double dp)
{
  if (!(c > 0.0)) throw std::invalid_argument("gup_bound: C must be > 0");
  if (!(dp > 0.0)) throw std::invalid_argument("gup_bound: dp must be > 0");
  return 0.5 / dp + 0.25 * c * dp;
}

struct GupCurve {
  std::vector<double> bounds;
  double min_dx = 0.0;     ///< sqrt(C / 2)
  double argmin_dp = 0.0;  ///< sqrt(2 / C)
};

inline GupCurve gup_curve(double c, const std::vector<double>& dp_values)
{
  if (!(c > 0.0)) throw std::invalid_argument("gup_curve: C must be > 0");
  GupCurve out;
  out.bounds.reserve(dp_values.size());
  for (double dp : dp_values) out.bounds.push_back(gup_bound(c, dp));
  out.min_dx = std::sqrt(0.5 * c);
  out.argmin_dp = std::sqrt(2.0 / c);
  return out;
}

inline std::vector<double> log_grid(double lo, double hi, std::size_t steps)
{
  if (!(lo > 0.0) || !(hi >= lo) || steps < 1) throw std::invalid_argument("log_grid: need 0 < lo <= hi and steps >= 1");
  std::vector<double> out(steps);
  if (steps == 1) { out[0] = lo; return out; }
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t j = 0; j < steps; ++j) out[j] = std::exp(a + (b - a) * static_cast<double>(j) / static_cast<double>(steps - 1));
  return out;
}

/// Smallest sampled bound over a log grid of dp.
inline double gup_sampled_minimum(double c, double dp_min, double dp_max, std::size_t steps)
{
  const auto curve = gup_curve(c, log_grid(dp_min, dp_max, steps));
  return *std::min_element(curve.bounds.begin(), curve.bounds.end());
}

/// Operator realization x = i (1 + (C/2) p^2) d/dp + i (C/2) p on a uniform
/// symmetric momentum grid.
struct KempfGrid {
  double p_max = 40.0;
  std::size_t points = 4000;

  std::vector<double> abscissas() const { return linspace(-p_max, p_max, points); }
  double spacing() const { return 2.0 * p_max / static_cast<double>(points - 1); }
};

inline CSparse kempf_x_matrix(double c, const KempfGrid& grid)
{
  const auto p = grid.abscissas();
  const auto n = static_cast<Eigen::Index>(p.size());
  const CSparse d = central_difference_4th_sparse(grid.points, grid.spacing());
  std::vector<Eigen::Triplet<cplx>> entries;
  entries.reserve(static_cast<std::size_t>(d.nonZeros()) + p.size());
  for (Eigen::Index col = 0; col < d.outerSize(); ++col)
    for (CSparse::InnerIterator it(d, col); it; ++it) {
      const double pr = p[static_cast<std::size_t>(it.row())];
      entries.emplace_back(it.row(), it.col(), I_unit * (1.0 + 0.5 * c * pr * pr) * it.value());
    }
  for (Eigen::Index j = 0; j < n; ++j) entries.emplace_back(j, j, I_unit * 0.5 * c * p[static_cast<std::size_t>(j)]);
  CSparse x(n, n);
  x.setFromTriplets(entries.begin(), entries.end());
  return x;
}

/// Eigenvector of the realization with eigenvalue a:
/// (1 + (C/2) p^2)^{-1/2} exp(-i sqrt(2/C) a atan(sqrt(C/2) p)).
inline cplx kempf_eigenstate(double c, double a, double p)
{
  const double g = 1.0 + 0.5 * c * p * p;
  return std::polar(1.0 / std::sqrt(g), -std::sqrt(2.0 / c) * a * std::atan(std::sqrt(0.5 * c) * p));
}

struct EnergyTailPoint {
  double domain_half_width;
  double p2_partial;
};

struct KempfCheck {
  double commutator_residual = 0.0;
  double eigen_residual = 0.0;
  double norm = 0.0;
  std::vector<EnergyTailPoint> energy_tail;
  bool energy_tail_increasing = false;
};

namespace detail {
/// Interior max of ([x, p] - i (1 + (C/2) p^2)) applied to a Gaussian probe.
inline double kempf_commutator_residual(double c, const KempfGrid& grid, const CSparse& x)
{
  const auto p = grid.abscissas();
  const auto n = static_cast<Eigen::Index>(p.size());
  CVector probe(n), pv(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double pj = p[static_cast<std::size_t>(j)];
    probe[j] = std::exp(-0.5 * pj * pj);
    pv[j] = pj * probe[j];
  }
  const CVector xp = x * pv;
  const CVector xv = x * probe;
  CVector res(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double pj = p[static_cast<std::size_t>(j)];
    res[j] = xp[j] - pj * xv[j] - I_unit * (1.0 + 0.5 * c * pj * pj) * probe[j];
  }
  return max_abs_interior(res, 2);
}
}  // namespace detail

inline KempfCheck kempf_operator_check(double c, double a, const KempfGrid& grid,
                                       const std::vector<double>& tail_domains = {10.0, 100.0, 1000.0})
{
  if (!(c > 0.0)) throw std::invalid_argument("kempf_operator_check: C must be > 0");
  if (!(grid.p_max > 0.0) || grid.points < 16) throw std::invalid_argument("kempf_operator_check: grid needs p_max > 0 and >= 16 points");

  const CSparse x = kempf_x_matrix(c, grid);
  KempfCheck out;
  out.commutator_residual = detail::kempf_commutator_residual(c, grid, x);
  if (out.commutator_residual > 1e-2) throw std::domain_error("kempf_operator_check: grid too coarse for the commutator to converge");

  const auto p = grid.abscissas();
  const auto n = static_cast<Eigen::Index>(p.size());
  CVector psi(n);
  for (Eigen::Index j = 0; j < n; ++j) psi[j] = kempf_eigenstate(c, a, p[static_cast<std::size_t>(j)]);
  out.eigen_residual = max_abs_interior(CVector(x * psi - a * psi), 2);

  // whole line via p = sqrt(2/C) tan t
  const double scale = std::sqrt(2.0 / c);
  out.norm = quad::composite([&](double t) {
    const double p_t = scale * std::tan(t);
    const double jac = scale / (std::cos(t) * std::cos(t));
    return std::norm(kempf_eigenstate(c, a, p_t)) * jac;
  }, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi, 64);

  out.energy_tail_increasing = true;
  double previous = -std::numeric_limits<double>::infinity();
  for (double half_width : tail_domains) {
    const auto panels = static_cast<std::size_t>(std::ceil(half_width)) + 16;
    const double v = quad::composite([&](double q) { return q * q * std::norm(kempf_eigenstate(c, a, q)); },
                                     -half_width, half_width, panels);
    out.energy_tail.push_back({half_width, v});
    if (!(v > previous)) out.energy_tail_increasing = false;
    previous = v;
  }
  return out;
}

/// Commutator residual alone, for refinement studies.
inline double kempf_commutator_residual(double c, const KempfGrid& grid)
{
  return detail::kempf_commutator_residual(c, grid, kempf_x_matrix(c, grid));
}

// ---------------------------------------------------------------------------
// Angle and angular momentum

/// dL dphi against (1/2) |1 - 2 pi |psi(2 pi)|^2|, with psi(2 pi) read at the last
/// grid point (theta -> 2 pi from below) and psi normalized in d phi.
inline UncertaintyReport angle_bound(const GridState& state)
{
  if (state.basis_kind() != BasisKind::circle_grid) throw std::invalid_argument("angle_bound: requires a circle grid state");
  const std::size_t m = state.grid().size();
  const CMatrix lz = (-I_unit) * fourier_differentiation(m).cast<cplx>();
  const double dl = state.spread(lz);

  const auto& a = state.amplitudes();
  double mean = 0.0, second = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double w = state.weights()[j] * std::norm(a[static_cast<Eigen::Index>(j)]);
    mean += w * state.grid()[j];
    second += w * state.grid()[j] * state.grid()[j];
  }
  const double dphi = std::sqrt(std::max(0.0, second - mean * mean));
  // weights 1/M are the normalized measure: 2 pi |psi_std|^2 = |a|^2
  const double seam = std::norm(a[static_cast<Eigen::Index>(m - 1)]);
  const double bound = 0.5 * std::abs(1.0 - seam);
  return UncertaintyReport::make(dphi, dl, bound, BoundKind::angle_eq_B2);
}

/// Plane wave e^{-i n theta} on a circle realization.
inline GridState circle_plane_wave(const OperatorRep& rep, int n)
{
  if (rep.basis_kind != BasisKind::circle_grid) throw std::invalid_argument("circle_plane_wave: requires a circle grid");
  return GridState::sample(rep, [n](double theta) { return std::polar(1.0, -static_cast<double>(n) * theta); });
}

// ---------------------------------------------------------------------------
// Localized lattice states

struct LocalizedCheck {
  UncertaintyReport report;
  double scaled_p2 = 0.0;  ///< <(l p)^2>, the second moment of the arcsine law
};

inline LocalizedCheck localized_state_check(int n, const OperatorRep& rep)
{
  if (rep.basis_kind != BasisKind::fourier_lattice) throw std::invalid_argument("localized_state_check: requires the position lattice");
  const auto half_width = static_cast<long>((rep.dim() - 1) / 2);
  if (std::abs(static_cast<long>(n)) > half_width - static_cast<long>(rep.interior_margin))
    throw std::out_of_range("localized_state_check: site outside the interior of the lattice");
  const auto state = GridState::basis_vector(rep, static_cast<std::size_t>(n + half_width));
  const double dx = state.spread(rep.X);
  const double dp = state.spread(rep.P);
  const double bound = 0.5 * std::abs(state.expectation(rep.I));
  const double l = rep.params.ell;
  const double p2 = state.expectation(rep.P * rep.P).real();
  return {UncertaintyReport::make(dx, dp, bound, BoundKind::deformed_eq16), l * l * p2};
}

// ---------------------------------------------------------------------------
// Phase-space measures weighted by a Gaussian in p

struct MeasureComparison {
  double z_flat = 0.0;      ///< int e^{-p^2/2 tau} dp
  double z_deformed = 0.0;  ///< int e^{-p^2/2 tau} dp / sqrt(1 + l^2 p^2)
  double z_gup = 0.0;       ///< int e^{-p^2/2 tau} dp / (1 + beta p^2)
  double cutoff = 0.0;
};

inline MeasureComparison measure_compare(double ell, double beta, double tau, double cutoff_scale = 1.0)
{
  if (!(ell >= 0.0) || !(beta >= 0.0)) throw std::invalid_argument("measure_compare: ell and beta must be >= 0");
  if (!(tau > 0.0)) throw std::invalid_argument("measure_compare: tau must be > 0");
  MeasureComparison m;
  m.cutoff = 20.0 * std::sqrt(tau) * cutoff_scale;
  // resolve both the Gaussian and the 1/l, 1/sqrt(beta) structure of the measures
  double feature = std::sqrt(tau);
  if (ell > 0.0) feature = std::min(feature, 1.0 / ell);
  if (beta > 0.0) feature = std::min(feature, 1.0 / std::sqrt(beta));
  const auto panels = static_cast<std::size_t>(std::ceil(2.0 * m.cutoff / (0.5 * feature))) + 8;
  auto gauss = [tau](double p) { return std::exp(-p * p / (2.0 * tau)); };
  m.z_flat = quad::composite(gauss, -m.cutoff, m.cutoff, panels);
  m.z_deformed = quad::composite([&](double p) { return gauss(p) / std::sqrt(1.0 + ell * ell * p * p); }, -m.cutoff, m.cutoff, panels);
  m.z_gup = quad::composite([&](double p) { return gauss(p) / (1.0 + beta * p * p); }, -m.cutoff, m.cutoff, panels);
  return m;
}

}  // namespace deformlab
