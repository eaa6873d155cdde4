// Acceptance criteria 1-8. Each test prints one line "criterion N: PASS|FAIL - detail"
// and asserts the same verdict.

#include "cli_runner.hpp"
#include "deformlab/deformlab.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace deformlab;

namespace {

constexpr double pi = std::numbers::pi;

void verdict(int criterion, bool pass, const std::string& detail)
{
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << detail << std::endl;
  EXPECT_TRUE(pass) << "criterion " << criterion << ": " << detail;
}

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

CVector probe(const OperatorRep& rep)
{
  CVector v(static_cast<Eigen::Index>(rep.dim()));
  for (std::size_t j = 0; j < rep.dim(); ++j) {
    const double mu = rep.grid[j];
    v[static_cast<Eigen::Index>(j)] = std::exp(-mu * mu) * std::polar(1.0, 0.3 * mu);
  }
  return v;
}

}  // namespace

TEST(Acceptance, Criterion1AlgebraRelations)
{
  double worst = 0.0;
  for (std::size_t n : {8u, 16u, 32u, 64u})
    for (const AlgebraParams& p : {AlgebraParams{1.0, -1, 1.0, 1.0}, AlgebraParams{0.3, -1, 2.0, 1.0}}) {
      const auto r = algebra_residuals(build_fourier_rep(p, n)).interior;
      worst = std::max({worst, r.commutator_xp, r.commutator_xi, r.commutator_pi, r.casimir, r.jacobi});
    }
  double worst_ratio = 1e300;
  for (const AlgebraParams& p : {AlgebraParams{1.0, 1, 1.0, 1.0}, AlgebraParams{0.5, 1, 2.0, 1.0}}) {
    const auto coarse = build_hyperbola_rep(p, 5.0, 200);
    const auto fine = build_hyperbola_rep(p, 5.0, 399);
    const auto rc = applied_residuals(coarse, probe(coarse));
    const auto rf = applied_residuals(fine, probe(fine));
    worst_ratio = std::min({worst_ratio, rc.commutator_xp / rf.commutator_xp, rc.commutator_xi / rf.commutator_xi});
  }
  verdict(1, worst <= 1e-13 && worst_ratio >= 12.0,
          "lattice interior residuals max " + sci(worst) + " (<= 1e-13); hyperbola h -> h/2 reduction " + sci(worst_ratio) + " (>= 12)");
}

TEST(Acceptance, Criterion2WellSpectra)
{
  double worst_lattice = 0.0;
  bool bounded = true;
  for (std::size_t k = 3; k <= 64; ++k)
    for (double ell : {0.5, 1.0}) {
      const auto spec = WellSpec::lattice({ell, -1, 1.0, 1.0}, k);
      const auto rep = lattice_well_solve(spec, BoundaryMode::odd_image);
      worst_lattice = std::max(worst_lattice, rep.max_abs_diff());
      for (const auto& l : rep.levels) bounded = bounded && *l.e_numeric <= 1.0 / (2.0 * ell * ell) + 1e-12;
    }

  // the shift identity holds to rounding relative to the operator scale max(1, E_n)
  double worst_shift = 0.0;
  for (double ell : {0.01, 0.1, 0.5})
    for (double delta : {1.0, 3.0})
      for (std::size_t n : {1u, 2u, 4u}) {
        const auto spec = WellSpec::continuous({ell, 1, 1.0, 1.0}, delta);
        worst_shift = std::max(worst_shift, continuum_shift_residual(spec, n, 64) / std::max(1.0, analytic_energy(spec, n)));
      }

  double worst_limit = 0.0;  // relative gap / (n pi l / Delta)^2
  for (double delta : {1.0, 4.0})
    for (std::size_t n : {1u, 2u, 3u})
      for (std::size_t k : {40u, 100u, 1000u}) {
        const double x = static_cast<double>(n) * pi / static_cast<double>(k);
        if (x > 0.1) continue;
        const double ell = delta / static_cast<double>(k);
        const double e0 = analytic_energy(WellSpec::continuous({0.0, 1, 1.0, 1.0}, delta), n);
        const double plus = analytic_energy(WellSpec::continuous({ell, 1, 1.0, 1.0}, delta), n);
        const double minus = analytic_energy(WellSpec::lattice({ell, -1, 1.0, 1.0}, k), n);
        worst_limit = std::max({worst_limit, std::abs(plus - e0) / e0 / (x * x), std::abs(minus - e0) / e0 / (x * x)});
      }

  verdict(2, worst_lattice <= 1e-12 && bounded && worst_shift <= 1e-12 && worst_limit <= 1.0,
          "lattice vs closed form " + sci(worst_lattice) + " (<= 1e-12, bounded by 1/(2 m l^2): " + (bounded ? "yes" : "no") +
              "); shift residual / max(1,E) " + sci(worst_shift) + " (<= 1e-12); limit gap ratio " + sci(worst_limit) + " (<= 1)");
}

TEST(Acceptance, Criterion3Counting)
{
  bool exact = true;
  for (double delta : {0.7, 3.14159, 12.0}) {
    const auto t = fill_table(WellSpec::continuous({0.0, 1, 1.0, 1.0}, delta), 10);
    for (const auto& r : t.rows) exact = exact && r.cell_closed_form == pi && std::abs(r.cell - pi) <= 1e-12;
  }

  bool increasing = true;
  const auto plus = fill_table(WellSpec::continuous({0.2, 1, 1.0, 1.0}, 1.0), 15);
  for (std::size_t n = 1; n < plus.rows.size(); ++n) increasing = increasing && plus.rows[n].cell > plus.rows[n - 1].cell;

  bool decreasing = true;
  const std::size_t k = 20;
  const auto minus = fill_table(WellSpec::lattice({0.1, -1, 1.0, 1.0}, k), k / 2);
  for (std::size_t n = 1; n < minus.rows.size(); ++n) decreasing = decreasing && minus.rows[n].cell < minus.rows[n - 1].cell;

  double worst = 0.0;  // relative gap / (pi l / Delta)^2
  for (std::size_t kk : {20u, 100u, 1000u}) {
    const double ratio = 1.0 / static_cast<double>(kk);
    const double a2 = (pi * ratio) * (pi * ratio);
    const double cp = phase_cell(WellSpec::continuous({ratio, 1, 1.0, 1.0}, 1.0), 0);
    const double cm = phase_cell(WellSpec::lattice({ratio, -1, 1.0, 1.0}, kk), 0);
    worst = std::max({worst, std::abs(cp - pi) / pi / a2, std::abs(cm - pi) / pi / a2});
  }
  verdict(3, exact && increasing && decreasing && worst <= 1.0,
          std::string("l=0 cell == pi: ") + (exact ? "yes" : "no") + "; eps=+1 increasing: " + (increasing ? "yes" : "no") +
              "; eps=-1 decreasing to band edge: " + (decreasing ? "yes" : "no") + "; gap ratio " + sci(worst) + " (<= 1)");
}

TEST(Acceptance, Criterion4MomentumStatistics)
{
  double worst_j0 = 0.0;
  for (double r : {0.5, 1.0, 3.0})
    for (int j = 0; j <= 300; ++j) {
      const double sr = 0.1 * j;
      worst_j0 = std::max(worst_j0, std::abs(char_fn(sr / r, r) - char_fn_quadrature(sr / r, r).real()));
    }
  double norm_err = 0.0, m2_err = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    norm_err = std::max(norm_err, std::abs(arcsine_moment(0, r) - 1.0));
    m2_err = std::max(m2_err, std::abs(arcsine_moment(2, r) - 0.5 * r * r));
  }
  double worst_dos = 0.0;
  const double r = 1.0;  // the limit is pi r; pi at the default radius
  for (double ell : {0.2, 0.1, 0.05, 0.01}) {
    const double gap = std::abs(dos_product({ell, -1, r, 1.0}).product - pi);
    worst_dos = std::max(worst_dos, gap / (ell * ell / (8.0 * r * r) * pi * 1.1));
  }
  verdict(4, worst_j0 <= 1e-9 && norm_err <= 1e-10 && m2_err <= 1e-9 && worst_dos <= 1.0,
          "J0 series vs quadrature " + sci(worst_j0) + " (<= 1e-9); normalization " + sci(norm_err) + " (<= 1e-10); <P^2> " +
              sci(m2_err) + " (<= 1e-9); dos gap ratio " + sci(worst_dos) + " (<= 1)");
}

TEST(Acceptance, Criterion5Uncertainty)
{
  double dx_err = 0.0, margin = 1e300;
  for (double alpha : log_grid(0.01, 6.0, 40))
    for (double ell : {0.5, 1.0}) {
      const auto g = gaussian_moments({alpha, {ell, 1, 1.0, 1.0}});
      dx_err = std::max(dx_err, std::abs(g.dx - ell / (2.0 * std::sqrt(alpha))));
      margin = std::min(margin, g.product - 0.5 * std::exp(0.5 * alpha));
    }
  const double narrow = std::abs(gaussian_moments({1e-3, {1.0, 1, 1.0, 1.0}}).product - 0.5);

  const auto r = run_cli("uncertainty --alpha-start 0.5 --alpha-stop 2 --steps 3");
  const bool deviation_columns = r.exit_code == 0 && r.out.find("p2_printed") != std::string::npos &&
                                 r.out.find("product_printed") != std::string::npos;
  verdict(5, dx_err <= 1e-8 && margin >= 0.0 && narrow <= 0.01 && deviation_columns,
          "dx error " + sci(dx_err) + " (<= 1e-8); min product - e^{alpha/2}/2 over [0.01, 6] " + sci(margin) +
              " (>= 0); |product - 1/2| at 1e-3 " + sci(narrow) + " (<= 0.01); printed-value deviation columns emitted: " +
              (deviation_columns ? "yes" : "no"));
}

TEST(Acceptance, Criterion6Gup)
{
  const KempfGrid grid{40.0, 4000};
  double worst_eig = 0.0;
  for (double a : {0.0, 1.0}) worst_eig = std::max(worst_eig, kempf_operator_check(2.0, a, grid).eigen_residual);
  const double ratio = kempf_commutator_residual(2.0, {10.0, 401}) / kempf_commutator_residual(2.0, {10.0, 801});
  const double min_err = std::abs(gup_sampled_minimum(2.0, 1e-2, 1e2, 4001) - 1.0);
  const auto check = kempf_operator_check(2.0, 0.0, {10.0, 401}, {10.0, 100.0, 1000.0});
  double worst_slope = 0.0;
  for (std::size_t j = 1; j < check.energy_tail.size(); ++j) {
    const auto& a = check.energy_tail[j - 1];
    const auto& b = check.energy_tail[j];
    worst_slope = std::max(worst_slope, std::abs((b.p2_partial - a.p2_partial) / (b.domain_half_width - a.domain_half_width) - 2.0));
  }
  verdict(6, worst_eig <= 1e-6 && ratio >= 12.0 && min_err <= 1e-4 && worst_slope <= 0.02 && check.energy_tail_increasing,
          "eigenstate residual " + sci(worst_eig) + " (<= 1e-6); commutator h -> h/2 reduction " + sci(ratio) +
              " (>= 12); |min - sqrt(C/2)| " + sci(min_err) + " (<= 1e-4); <p^2> slope deviation from 2 (C = 2) " + sci(worst_slope) +
              " (<= 0.02)");
}

TEST(Acceptance, Criterion7LocalizedAndAngle)
{
  bool zeros = true;
  const auto lattice = build_fourier_rep({0.5, -1, 1.0, 1.0}, 24);
  for (int n = -20; n <= 20; ++n) {
    const auto c = localized_state_check(n, lattice).report;
    zeros = zeros && c.dx == 0.0 && c.product == 0.0 && c.bound == 0.0;
  }
  const auto circle = build_circle_rep({1.0, -1, 1.0, 1.0}, 64);
  double plane = 0.0;
  for (int n = -10; n <= 10; ++n) plane = std::max(plane, angle_bound(circle_plane_wave(circle, n)).bound);
  const auto packet = GridState::sample(circle, [](double t) { return std::exp(-(t - pi) * (t - pi) / 0.18); });
  const auto seam = angle_bound(packet);
  // sampled |e^{-i n theta}|^2 is 1 to within an ulp, so "exactly 0" means a few ulps
  const double ulps = 4.0 * std::numeric_limits<double>::epsilon();
  verdict(7, zeros && plane <= ulps && std::abs(seam.bound - 0.5) <= 1e-12 && seam.satisfied,
          std::string("lattice (dx, dx dp, bound) == (0,0,0): ") + (zeros ? "yes" : "no") + "; plane-wave angle bound " + sci(plane) +
              " (<= 4 eps); seam-vanishing packet bound " + sci(seam.bound) + " (== 1/2)");
}

TEST(Acceptance, Criterion8VerifyAndDeterminism)
{
  const auto first = run_cli("verify");
  const auto second = run_cli("verify");
  const auto json_a = run_cli("--format json verify");
  const auto json_b = run_cli("--format json verify");
  bool all_pass = first.out.find(",FAIL") == std::string::npos && first.out.find(",PASS") != std::string::npos;
  for (int suite = 1; suite <= 7; ++suite)
    all_pass = all_pass && first.out.find("\n" + std::to_string(suite) + ",") != std::string::npos;
  const bool identical = first.out == second.out && json_a.out == json_b.out && !first.out.empty();
  verdict(8, first.exit_code == 0 && all_pass && identical,
          "verify exit " + std::to_string(first.exit_code) + " (== 0); suites 1-7 all PASS: " + (all_pass ? "yes" : "no") +
              "; repeated CSV/JSON reports byte-identical: " + (identical ? "yes" : "no"));
}
