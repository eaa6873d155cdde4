#pragma once

// Phase-space area dp * Delta needed to add the (n+1)st fermion to a box of
// width Delta, with p_n = sqrt(2 m E_n) taken from the well spectra.

#include "deformlab/well_spectra.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace deformlab {

/// Closed-form cell for the step n -> n+1:
///   l = 0     pi
///   eps = +1  (2 Delta / l) sinh(pi l / 2 Delta) cosh((pi l / Delta)(n + 1/2))
///   eps = -1  2 k sin(pi / 2k) cos((pi / k)(n + 1/2))
inline double phase_cell(const WellSpec& spec, std::size_t n)
{
  spec.validate();
  const double half = static_cast<double>(n) + 0.5;
  switch (spec.label()) {
    case WellCase::undeformed:
      return std::numbers::pi;
    case WellCase::eps_plus: {
      const double a = std::numbers::pi * spec.params.ell / spec.delta;
      return (2.0 * spec.delta / spec.params.ell) * std::sinh(0.5 * a) * std::cosh(a * half);
    }
    case WellCase::eps_minus: {
      if (n + 1 > spec.k - 1) throw std::out_of_range("phase_cell: no (n+1)st lattice state in the well");
      const double k = static_cast<double>(spec.k);
      return 2.0 * k * std::sin(std::numbers::pi / (2.0 * k)) * std::cos(std::numbers::pi / k * half);
    }
  }
  return 0.0;
}

/// Momentum magnitude of level n, sqrt(2 m E_n); p_0 = 0.
inline double level_momentum(const WellSpec& spec, std::size_t n)
{
  if (n == 0) return 0.0;
  return std::sqrt(2.0 * spec.params.mass * analytic_energy(spec, n));
}

struct CellRow {
  std::size_t n = 0;
  double p_n = 0.0;
  double dp = 0.0;
  double cell = 0.0;              ///< dp * Delta
  double cell_closed_form = 0.0;  ///< phase_cell(spec, n)
  double cumulative = 0.0;        ///< running sum of cell
  bool band_edge = false;         ///< eps = -1 step past the spectral fold (negative cell)
};

struct CellTable {
  WellCase case_label{};
  double mass = 1.0;
  std::vector<CellRow> rows;
};

/// Rows n = 0..particles-1 of the fermion fill.
inline CellTable fill_table(const WellSpec& spec, std::size_t particles)
{
  spec.validate();
  if (particles < 1) throw std::invalid_argument("fill_table: need at least one particle");
  if (spec.label() == WellCase::eps_minus && particles > spec.k - 1)
    throw std::out_of_range("fill_table: eps = -1 well holds at most k - 1 particles");

  CellTable table{spec.label(), spec.params.mass, {}};
  table.rows.reserve(particles);
  double running = 0.0;
  double p_prev = level_momentum(spec, 0);
  for (std::size_t n = 0; n < particles; ++n) {
    const double p_next = level_momentum(spec, n + 1);
    CellRow row;
    row.n = n;
    row.p_n = p_prev;
    // past the eps = -1 fold p_{n+1} < p_n and the cell turns negative
    row.dp = p_next - p_prev;
    row.cell = row.dp * spec.delta;
    row.cell_closed_form = phase_cell(spec, n);
    running += row.cell;
    row.cumulative = running;
    row.band_edge = row.cell < 0.0;
    table.rows.push_back(row);
    p_prev = p_next;
  }
  return table;
}

}  // namespace deformlab
