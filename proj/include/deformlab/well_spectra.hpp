#pragma once

// Infinite square well under the three kinetic operators:
//   l = 0     E_n = n^2 pi^2 / (2 m Delta^2)
//   eps = +1  E_n = sinh^2(n pi l / Delta) / (2 m l^2)
//   eps = -1  E_n = sin^2(n pi l / Delta) / (2 m l^2),  Delta = k l
// The well occupies [0, Delta]; spectra are translation invariant.

#include "deformlab/linalg.hpp"
#include "deformlab/repr_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace deformlab {

enum class WellCase { undeformed, eps_plus, eps_minus };

constexpr std::string_view to_string(WellCase c)
{
  switch (c) {
    case WellCase::undeformed: return "undeformed";
    case WellCase::eps_plus: return "eps_plus";
    case WellCase::eps_minus: return "eps_minus";
  }
  return "unknown";
}

enum class BoundaryMode { odd_image, hard_zero };

constexpr std::string_view to_string(BoundaryMode b)
{
  return b == BoundaryMode::odd_image ? "odd_image" : "hard_zero";
}

inline WellCase well_case(const AlgebraParams& p)
{
  if (p.ell == 0.0) return WellCase::undeformed;
  return p.epsilon == 1 ? WellCase::eps_plus : WellCase::eps_minus;
}

/// Well of width delta. For eps = -1 with l > 0 the width must be k l.
struct WellSpec {
  AlgebraParams params;
  double delta = 1.0;
  std::size_t k = 0;

  static WellSpec continuous(const AlgebraParams& params, double delta)
  {
    WellSpec s{params, delta, 0};
    s.validate();
    return s;
  }

  static WellSpec lattice(const AlgebraParams& params, std::size_t sites)
  {
    WellSpec s{params, static_cast<double>(sites) * params.ell, sites};
    s.validate();
    return s;
  }

  /// Picks k = round(delta / l) when the case is discrete.
  static WellSpec from_width(const AlgebraParams& params, double delta)
  {
    WellSpec s{params, delta, 0};
    if (well_case(params) == WellCase::eps_minus && params.ell > 0.0) {
      const double ratio = delta / params.ell;
      if (!(ratio >= 0.5) || !std::isfinite(ratio)) throw std::invalid_argument("WellSpec: width shorter than one lattice spacing");
      s.k = static_cast<std::size_t>(std::llround(ratio));
    }
    s.validate();
    return s;
  }

  WellCase label() const { return well_case(params); }

  void validate() const
  {
    params.validate();
    if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("WellSpec: width must be > 0");
    if (label() == WellCase::eps_minus) {
      if (k == 0) throw std::invalid_argument("WellSpec: eps = -1 requires a lattice site count k");
      if (std::abs(delta - static_cast<double>(k) * params.ell) > 1e-12 * delta)
        throw std::invalid_argument("WellSpec: width is not an integral multiple of ell");
    }
  }
};

struct SpectrumLevel {
  std::size_t n = 0;
  double e_analytic = 0.0;
  std::optional<double> e_numeric;
  std::optional<double> abs_diff;
};

struct SpectrumReport {
  WellCase case_label{};
  std::vector<SpectrumLevel> levels;

  double max_abs_diff() const
  {
    double m = 0.0;
    for (const auto& l : levels)
      if (l.abs_diff) m = std::max(m, *l.abs_diff);
    return m;
  }
};

/// Closed-form level n of the well. For eps = -1 the index is folded to
/// min(n, k - n) so that E_n and E_{k-n} are bit-identical.
inline double analytic_energy(const WellSpec& spec, std::size_t n)
{
  const auto& p = spec.params;
  const double nn = static_cast<double>(n);
  switch (spec.label()) {
    case WellCase::undeformed:
      return nn * nn * std::numbers::pi * std::numbers::pi / (2.0 * p.mass * spec.delta * spec.delta);
    case WellCase::eps_plus: {
      const double s = std::sinh(nn * std::numbers::pi * p.ell / spec.delta);
      return s * s / (2.0 * p.mass * p.ell * p.ell);
    }
    case WellCase::eps_minus: {
      const std::size_t folded = std::min(n % spec.k, spec.k - n % spec.k);
      const double s = std::sin(static_cast<double>(folded) * std::numbers::pi / static_cast<double>(spec.k));
      return s * s / (2.0 * p.mass * p.ell * p.ell);
    }
  }
  return 0.0;
}

inline SpectrumReport analytic_levels(const WellSpec& spec, std::size_t n_max)
{
  spec.validate();
  if (n_max == 0) throw std::invalid_argument("analytic_levels: n_max must be positive");
  if (spec.label() == WellCase::eps_minus && n_max > spec.k - 1)
    throw std::invalid_argument("analytic_levels: eps = -1 well has only k - 1 interior states");
  SpectrumReport rep{spec.label(), {}};
  rep.levels.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) rep.levels.push_back({n, analytic_energy(spec, n), std::nullopt, std::nullopt});
  return rep;
}

/// Matrix of -(1 / (8 m l^2)) (E+ - E-)^2 on interior sites j = 1..k-1, where E+-
/// shift by one site. The stencil reaches two sites out; ghosts follow `mode`.
inline RMatrix lattice_well_matrix(const WellSpec& spec, BoundaryMode mode)
{
  spec.validate();
  if (spec.label() != WellCase::eps_minus) throw std::invalid_argument("lattice_well_matrix: requires eps = -1 and ell > 0");
  if (spec.k < 3) throw std::invalid_argument("lattice_well_matrix: k must be >= 3");
  const auto dim = static_cast<Eigen::Index>(spec.k - 1);
  const auto k = static_cast<Eigen::Index>(spec.k);
  const double c = 1.0 / (8.0 * spec.params.mass * spec.params.ell * spec.params.ell);
  RMatrix h = RMatrix::Zero(dim, dim);
  // site s in 1..k-1 maps to row s-1; (E+ - E-)^2 psi_s = psi_{s+2} - 2 psi_s + psi_{s-2}
  auto couple = [&](Eigen::Index row_site, Eigen::Index target, double coef) {
    if (target >= 1 && target <= k - 1) {
      h(row_site - 1, target - 1) += coef;
    } else if (mode == BoundaryMode::odd_image) {
      // psi_0 = psi_k = 0, psi_{-j} = -psi_j, psi_{k+j} = -psi_{k-j}
      if (target == 0 || target == k) return;
      const Eigen::Index mirror = target < 0 ? -target : 2 * k - target;
      h(row_site - 1, mirror - 1) -= coef;
    }
  };
  for (Eigen::Index s = 1; s <= k - 1; ++s) {
    h(s - 1, s - 1) += 2.0 * c;
    couple(s, s + 2, -c);
    couple(s, s - 2, -c);
  }
  return h;
}

/// Diagonalizes the lattice well and pairs sorted numeric eigenvalues with the
/// sorted closed-form multiset {E_n : n = 1..k-1}.
inline SpectrumReport lattice_well_solve(const WellSpec& spec, BoundaryMode mode)
{
  const RVector numeric = symmetric_eigenvalues(lattice_well_matrix(spec, mode));
  std::vector<std::pair<double, std::size_t>> analytic;
  analytic.reserve(spec.k - 1);
  for (std::size_t n = 1; n < spec.k; ++n) analytic.emplace_back(analytic_energy(spec, n), n);
  std::stable_sort(analytic.begin(), analytic.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  SpectrumReport rep{WellCase::eps_minus, {}};
  for (std::size_t j = 0; j < analytic.size(); ++j) {
    const double num = numeric[static_cast<Eigen::Index>(j)];
    rep.levels.push_back({analytic[j].second, analytic[j].first, num, std::abs(num - analytic[j].first)});
  }
  return rep;
}

/// Interior lattice states and distinct energies of the eps = -1 well.
struct LevelCount {
  std::size_t interior_states;
  std::size_t distinct_energies;
};

inline LevelCount lattice_level_count(std::size_t k)
{
  if (k < 2) throw std::invalid_argument("lattice_level_count: k must be >= 2");
  return {k - 1, k / 2};
}

/// Applies (1 / (8 m l^2)) (e^{i l d/dx} - e^{-i l d/dx})^2 to sin(n pi x / Delta)
/// by evaluating the sine at complex arguments x +- 2 i l, and returns
/// max |L psi - E_n psi| over `sample_count` interior points of (0, Delta).
inline double continuum_shift_residual(const WellSpec& spec, std::size_t n, std::size_t sample_count)
{
  spec.validate();
  if (spec.label() != WellCase::eps_plus) throw std::invalid_argument("continuum_shift_residual: requires eps = +1 and ell > 0");
  if (n < 1) throw std::invalid_argument("continuum_shift_residual: n must be >= 1");
  if (sample_count < 1) throw std::invalid_argument("continuum_shift_residual: need at least one sample");
  const double l = spec.params.ell;
  const double wave = static_cast<double>(n) * std::numbers::pi / spec.delta;
  const double energy = analytic_energy(spec, n);
  const double c = 1.0 / (8.0 * spec.params.mass * l * l);
  auto psi = [&](cplx x) { return std::sin(wave * x); };
  double worst = 0.0;
  for (std::size_t j = 1; j <= sample_count; ++j) {
    const double x = spec.delta * static_cast<double>(j) / static_cast<double>(sample_count + 1);
    const cplx shifted = psi(cplx(x, 2.0 * l)) - 2.0 * psi(cplx(x, 0.0)) + psi(cplx(x, -2.0 * l));
    const cplx residual = c * shifted - energy * psi(cplx(x, 0.0));
    worst = std::max(worst, std::abs(residual));
  }
  return worst;
}

/// Pointwise eigenvalue estimate (L psi_n)(x) / psi_n(x) at the first antinode.
inline double continuum_shift_eigenvalue(const WellSpec& spec, std::size_t n)
{
  spec.validate();
  if (spec.label() != WellCase::eps_plus) throw std::invalid_argument("continuum_shift_eigenvalue: requires eps = +1 and ell > 0");
  const double l = spec.params.ell;
  const double wave = static_cast<double>(n) * std::numbers::pi / spec.delta;
  const double x = spec.delta / (2.0 * static_cast<double>(n));
  auto psi = [&](cplx z) { return std::sin(wave * z); };
  const cplx shifted = psi(cplx(x, 2.0 * l)) - 2.0 * psi(cplx(x, 0.0)) + psi(cplx(x, -2.0 * l));
  return (shifted / (8.0 * spec.params.mass * l * l) / psi(cplx(x, 0.0))).real();
}

struct GroundStateRow {
  double delta;
  double e1;
};

/// E_1 as a function of well width. For eps = -1 every width must be a multiple of l.
inline std::vector<GroundStateRow> ground_state_scan(const AlgebraParams& params, const std::vector<double>& deltas)
{
  std::vector<GroundStateRow> out;
  out.reserve(deltas.size());
  for (double d : deltas) {
    const WellSpec spec = WellSpec::from_width(params, d);
    if (spec.label() == WellCase::eps_minus && spec.k < 2)
      throw std::invalid_argument("ground_state_scan: eps = -1 well needs k >= 2");
    out.push_back({d, analytic_energy(spec, 1)});
  }
  return out;
}

}  // namespace deformlab
