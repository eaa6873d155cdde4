#pragma once

// Finite realizations of the one-dimensional deformed Heisenberg algebra
//
//   [x, p] = i I,   [x, I] = i eps l^2 p,   [p, I] = 0,
//
// with eps = -1 (ISO(2), discrete position spectrum l*Z) or eps = +1 (ISO(1,1)).
// Three bases are provided: the position lattice (x diagonal), the circle grid
// (p and I diagonal, eps = -1) and the hyperbola grid (p and I diagonal, eps = +1).

#include "deformlab/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace deformlab {

/// Deformation parameters. hbar = c = 1 throughout.
struct AlgebraParams {
  double ell = 0.0;   ///< deformation length; 0 is the Heisenberg limit
  int epsilon = -1;   ///< sign of the deformation, -1 or +1
  double r = 1.0;     ///< representation label
  double mass = 1.0;

  void validate() const
  {
    if (!(ell >= 0.0) || !std::isfinite(ell)) throw std::invalid_argument("AlgebraParams: ell must be >= 0");
    if (epsilon != -1 && epsilon != 1) throw std::invalid_argument("AlgebraParams: epsilon must be -1 or +1");
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("AlgebraParams: r must be > 0");
    if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("AlgebraParams: mass must be > 0");
  }
};

enum class BasisKind { fourier_lattice, circle_grid, hyperbola_grid };

constexpr std::string_view to_string(BasisKind k)
{
  switch (k) {
    case BasisKind::fourier_lattice: return "fourier_lattice";
    case BasisKind::circle_grid: return "circle_grid";
    case BasisKind::hyperbola_grid: return "hyperbola_grid";
  }
  return "unknown";
}

/// Matrices (X, P, I) on a finite basis together with the abscissas and
/// quadrature weights defining the inner product <f, g> = sum_j w_j conj(f_j) g_j.
struct OperatorRep {
  CMatrix X, P, I;
  BasisKind basis_kind{};
  std::vector<double> grid;
  std::vector<double> weights;
  AlgebraParams params;
  std::size_t interior_margin = 0;

  std::size_t dim() const { return static_cast<std::size_t>(X.rows()); }
};

/// Normalized wavefunction on the grid of a representation.
class GridState {
public:
  GridState(CVector amplitudes, std::vector<double> grid, std::vector<double> weights, BasisKind kind)
      : amplitudes_(std::move(amplitudes)), grid_(std::move(grid)), weights_(std::move(weights)), kind_(kind)
  {
    if (static_cast<std::size_t>(amplitudes_.size()) != grid_.size() || grid_.size() != weights_.size())
      throw std::invalid_argument("GridState: amplitude, grid and weight sizes differ");
    double norm2 = 0.0;
    for (std::size_t j = 0; j < grid_.size(); ++j)
      norm2 += weights_[j] * std::norm(amplitudes_[static_cast<Eigen::Index>(j)]);
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw std::invalid_argument("GridState: state has zero norm");
    // already-normalized input (e.g. plane waves) is kept bit-for-bit
    if (std::abs(norm2 - 1.0) > 4.0 * std::numeric_limits<double>::epsilon()) amplitudes_ /= std::sqrt(norm2);
  }

  /// Samples f on the grid of `rep` and normalizes.
  static GridState sample(const OperatorRep& rep, const std::function<cplx(double)>& f)
  {
    CVector a(static_cast<Eigen::Index>(rep.dim()));
    for (std::size_t j = 0; j < rep.dim(); ++j) a[static_cast<Eigen::Index>(j)] = f(rep.grid[j]);
    return GridState(std::move(a), rep.grid, rep.weights, rep.basis_kind);
  }

  /// Unit vector at basis index `index` (0-based).
  static GridState basis_vector(const OperatorRep& rep, std::size_t index)
  {
    if (index >= rep.dim()) throw std::out_of_range("GridState::basis_vector: index outside basis");
    CVector a = CVector::Zero(static_cast<Eigen::Index>(rep.dim()));
    a[static_cast<Eigen::Index>(index)] = 1.0 / std::sqrt(rep.weights[index]);
    return GridState(std::move(a), rep.grid, rep.weights, rep.basis_kind);
  }

  const CVector& amplitudes() const { return amplitudes_; }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& weights() const { return weights_; }
  BasisKind basis_kind() const { return kind_; }

  double squared_norm() const
  {
    double s = 0.0;
    for (std::size_t j = 0; j < grid_.size(); ++j) s += weights_[j] * std::norm(amplitudes_[static_cast<Eigen::Index>(j)]);
    return s;
  }

  cplx inner(const CVector& other) const
  {
    cplx s{};
    for (std::size_t j = 0; j < grid_.size(); ++j) {
      const auto i = static_cast<Eigen::Index>(j);
      s += weights_[j] * std::conj(amplitudes_[i]) * other[i];
    }
    return s;
  }

  /// <psi, A psi>.
  cplx expectation(const CMatrix& a) const { return inner(a * amplitudes_); }

  /// Root central second moment ||(A - <A>) psi||, A Hermitian.
  double spread(const CMatrix& a) const
  {
    const double mean = expectation(a).real();
    const CVector shifted = a * amplitudes_ - mean * amplitudes_;
    double s = 0.0;
    for (std::size_t j = 0; j < grid_.size(); ++j) s += weights_[j] * std::norm(shifted[static_cast<Eigen::Index>(j)]);
    return std::sqrt(s);
  }

  bool compatible_with(const OperatorRep& rep) const
  {
    return rep.basis_kind == kind_ && rep.grid == grid_ && rep.weights == weights_;
  }

private:
  CVector amplitudes_;
  std::vector<double> grid_;
  std::vector<double> weights_;
  BasisKind kind_;
};

/// Position lattice n in {-N..N}: X = diag(l n), P = (r / i l) Delta_-, I = r Delta_+,
/// with Delta_(+/-) f(n) = (f(n+1) +/- f(n-1)) / 2. eps = -1 only.
inline OperatorRep build_fourier_rep(const AlgebraParams& params, std::size_t half_width)
{
  params.validate();
  if (params.epsilon != -1) throw std::invalid_argument("build_fourier_rep: lattice realization requires epsilon = -1");
  if (params.ell == 0.0) throw std::invalid_argument("build_fourier_rep: ell = 0 leaves P undefined");
  if (half_width < 2) throw std::invalid_argument("build_fourier_rep: half width must be >= 2");

  const auto dim = static_cast<Eigen::Index>(2 * half_width + 1);
  const double l = params.ell, r = params.r;
  OperatorRep rep;
  rep.X = CMatrix::Zero(dim, dim);
  rep.P = CMatrix::Zero(dim, dim);
  rep.I = CMatrix::Zero(dim, dim);
  rep.basis_kind = BasisKind::fourier_lattice;
  rep.params = params;
  rep.interior_margin = 2;
  rep.grid.resize(static_cast<std::size_t>(dim));
  rep.weights.assign(static_cast<std::size_t>(dim), 1.0);

  const cplx hop = r / (2.0 * I_unit * l);  // coefficient of f(n+1) in P f(n)
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double n = static_cast<double>(j) - static_cast<double>(half_width);
    rep.grid[static_cast<std::size_t>(j)] = n;
    rep.X(j, j) = l * n;
    if (j + 1 < dim) {
      rep.P(j, j + 1) = hop;
      rep.P(j + 1, j) = -hop;
      rep.I(j, j + 1) = r / 2.0;
      rep.I(j + 1, j) = r / 2.0;
    }
  }
  return rep;
}

/// M-point circle grid theta_j = 2 pi j / M with weights 1/M (normalized Lebesgue
/// measure): P = diag((r/l) sin theta), I = diag(r cos theta), X = i l D_theta.
inline OperatorRep build_circle_rep(const AlgebraParams& params, std::size_t grid_size)
{
  params.validate();
  if (params.epsilon != -1) throw std::invalid_argument("build_circle_rep: circle realization requires epsilon = -1");
  if (params.ell == 0.0) throw std::invalid_argument("build_circle_rep: ell must be > 0");
  if (grid_size < 8 || grid_size % 2 != 0) throw std::invalid_argument("build_circle_rep: grid size must be even and >= 8");

  const auto m = static_cast<Eigen::Index>(grid_size);
  const double l = params.ell, r = params.r;
  OperatorRep rep;
  rep.basis_kind = BasisKind::circle_grid;
  rep.params = params;
  rep.interior_margin = 0;
  rep.grid.resize(grid_size);
  rep.weights.assign(grid_size, 1.0 / static_cast<double>(grid_size));
  rep.P = CMatrix::Zero(m, m);
  rep.I = CMatrix::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_size);
    rep.grid[static_cast<std::size_t>(j)] = theta;
    rep.P(j, j) = (r / l) * std::sin(theta);
    rep.I(j, j) = r * std::cos(theta);
  }
  rep.X = (I_unit * l) * fourier_differentiation(grid_size).cast<cplx>();
  return rep;
}

/// Uniform mu grid on [-mu_max, mu_max]: P = diag((r/l) sinh mu), I = diag(r cosh mu),
/// X = i l D_mu with D_mu the 4th-order central difference matrix. eps = +1 only.
inline OperatorRep build_hyperbola_rep(const AlgebraParams& params, double mu_max, std::size_t grid_size)
{
  params.validate();
  if (params.epsilon != 1) throw std::invalid_argument("build_hyperbola_rep: hyperbola realization requires epsilon = +1");
  if (params.ell == 0.0) throw std::invalid_argument("build_hyperbola_rep: ell must be > 0");
  if (!(mu_max > 0.0)) throw std::invalid_argument("build_hyperbola_rep: mu_max must be > 0");
  if (grid_size < 16) throw std::invalid_argument("build_hyperbola_rep: grid size must be >= 16");

  const auto m = static_cast<Eigen::Index>(grid_size);
  const double l = params.ell, r = params.r;
  OperatorRep rep;
  rep.basis_kind = BasisKind::hyperbola_grid;
  rep.params = params;
  rep.interior_margin = 2;
  rep.grid = linspace(-mu_max, mu_max, grid_size);
  const double h = 2.0 * mu_max / static_cast<double>(grid_size - 1);
  rep.weights.assign(grid_size, h);
  rep.P = CMatrix::Zero(m, m);
  rep.I = CMatrix::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double mu = rep.grid[static_cast<std::size_t>(j)];
    rep.P(j, j) = (r / l) * std::sinh(mu);
    rep.I(j, j) = r * std::cosh(mu);
  }
  rep.X = (I_unit * l) * central_difference_4th(grid_size, h).cast<cplx>();
  return rep;
}

/// Cutoff for Gaussian-state quadrature of width alpha on the hyperbola.
inline double gaussian_mu_max(double alpha) { return 2.0 * alpha + 10.0 * std::sqrt(2.0 * alpha) + 10.0; }

/// Max-abs residuals of the defining relations.
struct ResidualSet {
  double commutator_xp = 0.0;  ///< [X,P] - iI
  double commutator_xi = 0.0;  ///< [X,I] - i eps l^2 P
  double commutator_pi = 0.0;  ///< [P,I]
  double casimir = 0.0;        ///< I^2 - eps l^2 P^2 - r^2
  double jacobi = 0.0;         ///< [[X,P],I] + [[P,I],X] + [[I,X],P]
};

struct AlgebraResiduals {
  ResidualSet interior;  ///< restricted to the interior block; these are the asserted values
  ResidualSet full;      ///< whole truncated matrices; reported only
};

namespace detail {
struct RelationMatrices {
  CMatrix r1, r2, r3, r4, r5;
};

inline RelationMatrices relation_matrices(const OperatorRep& rep)
{
  const double eps = rep.params.epsilon;
  const double l2 = rep.params.ell * rep.params.ell;
  const double r2 = rep.params.r * rep.params.r;
  const auto n = static_cast<Eigen::Index>(rep.dim());
  const CMatrix xp = commutator(rep.X, rep.P);
  const CMatrix pi = commutator(rep.P, rep.I);
  const CMatrix ix = commutator(rep.I, rep.X);
  RelationMatrices m;
  m.r1 = xp - I_unit * rep.I;
  m.r2 = -ix - (I_unit * eps * l2) * rep.P;
  m.r3 = pi;
  m.r4 = rep.I * rep.I - (eps * l2) * (rep.P * rep.P) - r2 * CMatrix::Identity(n, n);
  m.r5 = commutator(xp, rep.I) + commutator(pi, rep.X) + commutator(ix, rep.P);
  return m;
}
}  // namespace detail

inline AlgebraResiduals algebra_residuals(const OperatorRep& rep)
{
  const auto m = detail::relation_matrices(rep);
  const auto g = rep.interior_margin;
  auto full = [](const CMatrix& a) { return a.cwiseAbs().maxCoeff(); };
  AlgebraResiduals out;
  out.interior = {max_abs_interior(m.r1, g), max_abs_interior(m.r2, g), max_abs_interior(m.r3, g),
                  max_abs_interior(m.r4, g), max_abs_interior(m.r5, g)};
  out.full = {full(m.r1), full(m.r2), full(m.r3), full(m.r4), full(m.r5)};
  return out;
}

/// Residuals of the relations applied to a probe vector, max over interior rows.
/// On grid realizations the entrywise residual of a differentiation matrix does not
/// shrink under refinement; the applied residual on a smooth probe does, at the
/// order of the stencil.
inline ResidualSet applied_residuals(const OperatorRep& rep, const CVector& probe)
{
  if (static_cast<std::size_t>(probe.size()) != rep.dim())
    throw std::invalid_argument("applied_residuals: probe dimension mismatch");
  const double eps = rep.params.epsilon;
  const double l2 = rep.params.ell * rep.params.ell;
  const double r2 = rep.params.r * rep.params.r;
  const auto g = rep.interior_margin;
  const auto& X = rep.X;
  const auto& P = rep.P;
  const auto& I = rep.I;
  const CVector Xv = X * probe, Pv = P * probe, Iv = I * probe;

  const CVector xp = X * Pv - P * Xv;
  const CVector xi = X * Iv - I * Xv;
  const CVector pi = P * Iv - I * Pv;
  // Jacobi sum expanded into products applied right to left
  const CVector xpI = X * (P * Iv) - P * (X * Iv);
  const CVector Ixp = I * xp;
  const CVector piX = P * (I * Xv) - I * (P * Xv);
  const CVector Xpi = X * pi;
  const CVector ixP = I * (X * Pv) - X * (I * Pv);
  const CVector Pix = P * (I * Xv - X * Iv);

  ResidualSet out;
  out.commutator_xp = max_abs_interior(CVector(xp - I_unit * Iv), g);
  out.commutator_xi = max_abs_interior(CVector(xi - (I_unit * eps * l2) * Pv), g);
  out.commutator_pi = max_abs_interior(pi, g);
  out.casimir = max_abs_interior(CVector(I * Iv - (eps * l2) * (P * Pv) - r2 * probe), g);
  out.jacobi = max_abs_interior(CVector((xpI - Ixp) + (piX - Xpi) + (ixP - Pix)), g);
  return out;
}

/// The center-replacement operator as a function of momentum on the representation
/// with label r: exact r sqrt(1 + eps (l p / r)^2) and its second-order expansion.
struct ImFromP {
  double exact;
  double leading_order;
};

inline ImFromP im_from_p(double p, const AlgebraParams& params)
{
  params.validate();
  const double u = params.ell * p / params.r;
  const double arg = 1.0 + params.epsilon * u * u;
  if (arg < 0.0) throw std::domain_error("im_from_p: |l p| exceeds r, momentum off the circle");
  return {params.r * std::sqrt(arg), params.r * (1.0 + 0.5 * params.epsilon * u * u)};
}

}  // namespace deformlab
