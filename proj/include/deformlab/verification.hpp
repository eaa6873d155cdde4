#pragma once

// Invariant suites run by `deformlab verify`. Each check records the measured
// quantity, the threshold it is held to, and the verdict.

#include "deformlab/momentum_stats.hpp"
#include "deformlab/phase_counting.hpp"
#include "deformlab/repr_core.hpp"
#include "deformlab/uncertainty_lab.hpp"
#include "deformlab/well_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace deformlab::verify {

struct Check {
  int suite = 0;
  std::string name;
  double value = 0.0;
  std::string requirement;
  bool pass = false;
};

namespace detail {

inline Check at_most(int suite, std::string name, double value, double limit)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "<= %.3g", limit);
  return {suite, std::move(name), value, buf, value <= limit};
}

inline Check within(int suite, std::string name, double value, double lo, double hi)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "in [%.3g, %.3g]", lo, hi);
  return {suite, std::move(name), value, buf, value >= lo && value <= hi};
}

inline Check holds(int suite, std::string name, bool ok, double value = 0.0)
{
  return {suite, std::move(name), value, "holds", ok};
}

inline CVector smooth_probe(const OperatorRep& rep)
{
  CVector v(static_cast<Eigen::Index>(rep.dim()));
  for (std::size_t j = 0; j < rep.dim(); ++j) {
    const double mu = rep.grid[j];
    v[static_cast<Eigen::Index>(j)] = std::exp(-mu * mu) * std::polar(1.0, 0.3 * mu);
  }
  return v;
}

}  // namespace detail

inline std::vector<Check> algebra_suite()
{
  using detail::at_most;
  std::vector<Check> out;
  const AlgebraParams lattice{1.0, -1, 1.0, 1.0};
  double worst_comm = 0.0, worst_casimir = 0.0, worst_jacobi = 0.0, worst_herm = 0.0;
  for (std::size_t n : {8u, 16u, 32u, 64u}) {
    const auto rep = build_fourier_rep(lattice, n);
    const auto res = algebra_residuals(rep).interior;
    worst_comm = std::max({worst_comm, res.commutator_xp, res.commutator_xi, res.commutator_pi});
    worst_casimir = std::max(worst_casimir, res.casimir);
    worst_jacobi = std::max(worst_jacobi, res.jacobi);
    worst_herm = std::max({worst_herm, hermiticity_defect(rep.X), hermiticity_defect(rep.P), hermiticity_defect(rep.I)});
  }
  out.push_back(at_most(1, "lattice commutators (interior, N=8..64)", worst_comm, 1e-13));
  out.push_back(at_most(1, "lattice Casimir (interior)", worst_casimir, 1e-13));
  out.push_back(at_most(1, "lattice Jacobi identity (interior)", worst_jacobi, 1e-13));
  out.push_back(at_most(1, "lattice hermiticity", worst_herm, 1e-13));

  const auto circle = build_circle_rep(lattice, 16);
  out.push_back(at_most(1, "circle Casimir", algebra_residuals(circle).full.casimir, 1e-13));

  const AlgebraParams hyper{1.0, 1, 1.0, 1.0};
  const auto coarse = build_hyperbola_rep(hyper, 5.0, 200);
  const auto fine = build_hyperbola_rep(hyper, 5.0, 399);
  // I^2 reaches cosh^2(mu_max); the identity holds to rounding relative to that scale
  const double casimir_scale = std::cosh(5.0) * std::cosh(5.0);
  out.push_back(at_most(1, "hyperbola Casimir / cosh^2(mu_max)", algebra_residuals(coarse).full.casimir / casimir_scale, 1e-13));
  const double r_coarse = applied_residuals(coarse, detail::smooth_probe(coarse)).commutator_xp;
  const double r_fine = applied_residuals(fine, detail::smooth_probe(fine)).commutator_xp;
  out.push_back(detail::within(1, "hyperbola [X,P] residual ratio under h -> h/2", r_coarse / r_fine, 12.0, 20.0));
  return out;
}

inline std::vector<Check> well_suite()
{
  using detail::at_most;
  std::vector<Check> out;
  double worst = 0.0;
  for (double ell : {0.5, 1.0, 2.0})
    for (double mass : {0.5, 1.0})
      for (std::size_t k = 3; k <= 64; ++k) {
        const auto spec = WellSpec::lattice({ell, -1, 1.0, mass}, k);
        worst = std::max(worst, lattice_well_solve(spec, BoundaryMode::odd_image).max_abs_diff());
      }
  out.push_back(at_most(2, "odd-image lattice spectrum vs closed form (k=3..64)", worst, 1e-12));

  double worst_shift = 0.0;
  for (double ell : {0.01, 0.1, 0.5, 1.0})
    for (double delta : {1.0, std::numbers::pi, 10.0})
      for (std::size_t n : {1u, 2u, 3u, 5u}) {
        const auto spec = WellSpec::continuous({ell, 1, 1.0, 1.0}, delta);
        // E_n grows like e^{2 n pi l / Delta}; the identity holds to rounding relative to it
        const double scale = std::max(1.0, analytic_energy(spec, n));
        worst_shift = std::max(worst_shift, continuum_shift_residual(spec, n, 101) / scale);
      }
  out.push_back(at_most(2, "complex-shift eigenfunction residual / max(1, E_n)", worst_shift, 1e-12));

  double worst_ratio = 0.0;  // relative gap / (n pi l / Delta)^2
  for (double delta : {1.0, 2.0, 5.0})
    for (std::size_t n : {1u, 2u, 3u}) {
      const double undeformed = analytic_energy(WellSpec::continuous({0.0, 1, 1.0, 1.0}, delta), n);
      for (double x : {0.1, 0.05, 0.01, 0.001}) {
        const double ell = x * delta / (static_cast<double>(n) * std::numbers::pi);
        const double plus = analytic_energy(WellSpec::continuous({ell, 1, 1.0, 1.0}, delta), n);
        const double minus = std::pow(std::sin(x), 2) / (2.0 * ell * ell);
        worst_ratio = std::max({worst_ratio, std::abs(plus - undeformed) / undeformed / (x * x),
                                std::abs(minus - undeformed) / undeformed / (x * x)});
      }
    }
  out.push_back(at_most(2, "deformed spectra -> undeformed, gap / (n pi l / Delta)^2", worst_ratio, 1.0));
  return out;
}

inline std::vector<Check> counting_suite()
{
  std::vector<Check> out;
  bool exact_pi = true;
  for (double delta : {0.5, 1.0, 3.14159, 10.0})
    for (std::size_t n = 0; n < 20; ++n)
      exact_pi = exact_pi && phase_cell(WellSpec::continuous({0.0, 1, 1.0, 1.0}, delta), n) == std::numbers::pi;
  out.push_back(detail::holds(3, "undeformed cell equals pi", exact_pi));

  const auto plus = fill_table(WellSpec::continuous({0.1, 1, 1.0, 1.0}, 1.0), 30);
  bool increasing = true;
  for (std::size_t j = 1; j < plus.rows.size(); ++j) increasing = increasing && plus.rows[j].cell > plus.rows[j - 1].cell;
  out.push_back(detail::holds(3, "eps=+1 cells strictly increase", increasing));

  const auto minus = fill_table(WellSpec::lattice({1.0, -1, 1.0, 1.0}, 20), 19);
  bool decreasing = true;
  for (std::size_t j = 1; j < minus.rows.size(); ++j) decreasing = decreasing && minus.rows[j].cell < minus.rows[j - 1].cell;
  out.push_back(detail::holds(3, "eps=-1 cells strictly decrease", decreasing));

  double worst = 0.0;
  for (double ratio : {0.05, 0.01, 0.001}) {
    const double a2 = std::pow(std::numbers::pi * ratio, 2);
    const double cp = phase_cell(WellSpec::continuous({ratio, 1, 1.0, 1.0}, 1.0), 0);
    const auto k = static_cast<std::size_t>(std::llround(1.0 / ratio));
    const double cm = phase_cell(WellSpec::lattice({1.0, -1, 1.0, 1.0}, k), 0);
    worst = std::max({worst, std::abs(cp - std::numbers::pi) / std::numbers::pi / a2,
                      std::abs(cm - std::numbers::pi) / std::numbers::pi / a2});
  }
  out.push_back(detail::at_most(3, "deformed cells -> pi, gap / (pi l / Delta)^2", worst, 1.0));
  return out;
}

inline std::vector<Check> momentum_suite()
{
  std::vector<Check> out;
  double worst = 0.0;
  for (int j = 0; j <= 600; ++j) {
    const double z = 0.05 * j;
    worst = std::max(worst, std::abs(char_fn(z, 1.0) - char_fn_quadrature(z, 1.0).real()));
  }
  out.push_back(detail::at_most(4, "J0 series/asymptotic vs circle quadrature, s r in [0,30]", worst, 1e-9));

  double norm_err = 0.0, m2_err = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    norm_err = std::max(norm_err, std::abs(arcsine_moment(0, r) - 1.0));
    m2_err = std::max(m2_err, std::abs(arcsine_moment(2, r) - 0.5 * r * r));
  }
  out.push_back(detail::at_most(4, "arcsine normalization", norm_err, 1e-10));
  out.push_back(detail::at_most(4, "arcsine second moment r^2/2", m2_err, 1e-9));

  double worst_gap = 0.0;
  for (double ell : {0.2, 0.1, 0.05, 0.01}) {
    const auto d = dos_product({ell, -1, 1.0, 1.0});
    worst_gap = std::max(worst_gap, (std::numbers::pi - d.product) / (ell * ell / 8.0 * std::numbers::pi * 1.1));
  }
  out.push_back(detail::at_most(4, "dos product gap / (1.1 pi l^2 / 8 r^2)", worst_gap, 1.0));
  return out;
}

inline std::vector<Check> uncertainty_suite()
{
  std::vector<Check> out;
  double dx_err = 0.0, margin = 1.0;
  for (double alpha : {0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 6.0}) {
    const auto g = gaussian_moments({alpha, {1.0, 1, 1.0, 1.0}});
    dx_err = std::max(dx_err, std::abs(g.dx - 1.0 / (2.0 * std::sqrt(alpha))));
    margin = std::min(margin, g.product - g.bound);
  }
  out.push_back(detail::at_most(5, "Gaussian dx vs l / (2 sqrt(alpha))", dx_err, 1e-8));
  out.push_back({5, "Gaussian product - deformed bound, alpha in [0.01, 6]", margin, ">= 0", margin >= 0.0});
  const auto narrow = gaussian_moments({1e-3, {1.0, 1, 1.0, 1.0}});
  out.push_back(detail::at_most(5, "narrow Gaussian product vs 1/2", std::abs(narrow.product - 0.5), 0.01));
  return out;
}

inline std::vector<Check> gup_suite()
{
  std::vector<Check> out;
  const KempfGrid grid{40.0, 4000};
  double worst_eig = 0.0;
  for (double a : {0.0, 1.0}) worst_eig = std::max(worst_eig, kempf_operator_check(2.0, a, grid).eigen_residual);
  out.push_back(detail::at_most(6, "Kempf eigenvector residual, C=2, a in {0,1}", worst_eig, 1e-6));

  const double coarse = kempf_commutator_residual(2.0, {10.0, 401});
  const double fine = kempf_commutator_residual(2.0, {10.0, 801});
  out.push_back(detail::within(6, "Kempf commutator residual ratio under h -> h/2", coarse / fine, 12.0, 20.0));

  const double sampled = gup_sampled_minimum(2.0, 1e-2, 1e2, 4001);
  out.push_back(detail::at_most(6, "sampled GUP minimum vs sqrt(C/2)", std::abs(sampled - 1.0), 1e-4));

  const auto tail = kempf_operator_check(2.0, 0.0, {10.0, 401}).energy_tail;
  double worst_slope = 0.0;  // |d<p^2>/dL - 2| between successive domains
  for (std::size_t j = 1; j < tail.size(); ++j) {
    const double slope = (tail[j].p2_partial - tail[j - 1].p2_partial) / (tail[j].domain_half_width - tail[j - 1].domain_half_width);
    worst_slope = std::max(worst_slope, std::abs(slope - 2.0));
  }
  out.push_back(detail::at_most(6, "<p^2> partial integrals grow with slope 2 in L", worst_slope, 0.02));
  return out;
}

inline std::vector<Check> localized_suite()
{
  std::vector<Check> out;
  const auto rep = build_fourier_rep({1.0, -1, 1.0, 1.0}, 32);
  bool zeros = true;
  for (int n : {0, 5, -17, 30}) {
    const auto c = localized_state_check(n, rep).report;
    zeros = zeros && c.dx == 0.0 && c.product == 0.0 && c.bound == 0.0 && c.satisfied;
  }
  out.push_back(detail::holds(7, "localized lattice states give (dx, dx dp, bound) = (0, 0, 0)", zeros));

  const auto circle = build_circle_rep({1.0, -1, 1.0, 1.0}, 64);
  double worst_bound = 0.0;
  for (int n : {0, 1, 3, -7}) worst_bound = std::max(worst_bound, angle_bound(circle_plane_wave(circle, n)).bound);
  out.push_back(detail::at_most(7, "plane-wave angle bound", worst_bound, 1e-15));

  const auto packet = GridState::sample(circle, [](double t) { return std::exp(-(t - std::numbers::pi) * (t - std::numbers::pi) / 0.18); });
  const auto seam = angle_bound(packet);
  out.push_back(detail::at_most(7, "seam-vanishing packet bound vs 1/2", std::abs(seam.bound - 0.5), 1e-12));
  return out;
}

using Suite = std::function<std::vector<Check>()>;

inline std::vector<Check> run_all()
{
  const std::vector<std::pair<int, Suite>> suites = {
      {1, algebra_suite}, {2, well_suite},        {3, counting_suite}, {4, momentum_suite},
      {5, uncertainty_suite}, {6, gup_suite}, {7, localized_suite}};
  std::vector<Check> out;
  for (const auto& [id, suite] : suites) {
    try {
      auto checks = suite();
      out.insert(out.end(), checks.begin(), checks.end());
    } catch (const std::exception& e) {
      out.push_back({id, std::string("suite raised: ") + e.what(), 0.0, "no exception", false});
    }
  }
  return out;
}

}  // namespace deformlab::verify
