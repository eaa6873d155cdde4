#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace deformlab {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using CSparse = Eigen::SparseMatrix<std::complex<double>>;

inline constexpr cplx I_unit{0.0, 1.0};

/// AB - BA.
template <typename Derived1, typename Derived2>
auto commutator(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b)
{
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("commutator: operands must be square and of equal dimension");
  using Scalar = typename Derived1::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out = a * b - b * a;
  return out;
}

/// Largest |entry| of the block with rows and columns in [margin, dim - margin).
template <typename Derived>
double max_abs_interior(const Eigen::MatrixBase<Derived>& m, std::size_t margin)
{
  const auto n = static_cast<Eigen::Index>(m.rows());
  const auto g = static_cast<Eigen::Index>(margin);
  if (2 * g >= n) return 0.0;
  return m.block(g, g, n - 2 * g, n - 2 * g).cwiseAbs().maxCoeff();
}

/// Largest |entry| of rows [margin, dim - margin) of a vector.
inline double max_abs_interior(const CVector& v, std::size_t margin)
{
  const auto n = v.size();
  const auto g = static_cast<Eigen::Index>(margin);
  if (2 * g >= n) return 0.0;
  return v.segment(g, n - 2 * g).cwiseAbs().maxCoeff();
}

template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m)
{
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

struct EigenDecomposition {
  RVector values;   // ascending
  CMatrix vectors;  // column j belongs to values[j]
};

/// Hermitian eigendecomposition with eigenvalues ascending. Eigenvalues equal
/// to within tie_tol are ordered by the index of the dominant component of
/// their eigenvector.
inline EigenDecomposition hermitian_eigen(const CMatrix& m, double tie_tol = 1e-12)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigen: matrix not square");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eigen: no convergence");

  const auto n = m.rows();
  const RVector& vals = solver.eigenvalues();
  const CMatrix& vecs = solver.eigenvectors();
  std::vector<Eigen::Index> dominant(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) vecs.col(j).cwiseAbs().maxCoeff(&dominant[static_cast<std::size_t>(j)]);

  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (std::abs(vals[a] - vals[b]) > tie_tol * scale) return vals[a] < vals[b];
    return dominant[static_cast<std::size_t>(a)] < dominant[static_cast<std::size_t>(b)];
  });

  EigenDecomposition out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values[j] = vals[order[static_cast<std::size_t>(j)]];
    out.vectors.col(j) = vecs.col(order[static_cast<std::size_t>(j)]);
  }
  return out;
}

inline RVector hermitian_eigenvalues(const CMatrix& m) { return hermitian_eigen(m).values; }

inline RVector symmetric_eigenvalues(const RMatrix& m)
{
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric_eigenvalues: no convergence");
  return solver.eigenvalues();
}

/// Fourier (spectral) differentiation matrix on M uniform points of [0, 2π), M even.
/// D_jk = (1/2)(-1)^{j-k} cot((j-k)h/2) off the diagonal, 0 on it.
inline RMatrix fourier_differentiation(std::size_t m)
{
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("fourier_differentiation: grid size must be even");
  const auto n = static_cast<Eigen::Index>(m);
  const double h = 2.0 * std::numbers::pi / static_cast<double>(m);
  RMatrix d = RMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      if (j == k) continue;
      const auto diff = j - k;
      const double sign = (diff % 2 == 0) ? 1.0 : -1.0;
      d(j, k) = 0.5 * sign / std::tan(static_cast<double>(diff) * h / 2.0);
    }
  // exact antisymmetry; cot evaluation differs in the last bit between (j,k) and (k,j)
  return 0.5 * (d - d.transpose());
}

/// Fourth-order central first-derivative matrix on a uniform grid with spacing h.
/// Stencil (f[j-2] - 8f[j-1] + 8f[j+1] - f[j+2]) / 12h, truncated at the edges,
/// so the matrix is exactly antisymmetric. Rows 0, 1, n-2, n-1 are not accurate.
inline RMatrix central_difference_4th(std::size_t points, double h)
{
  const auto n = static_cast<Eigen::Index>(points);
  RMatrix d = RMatrix::Zero(n, n);
  const double c1 = 8.0 / (12.0 * h);
  const double c2 = 1.0 / (12.0 * h);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j + 1 < n) { d(j, j + 1) = c1; d(j + 1, j) = -c1; }
    if (j + 2 < n) { d(j, j + 2) = -c2; d(j + 2, j) = c2; }
  }
  return d;
}

/// Sparse form of central_difference_4th, for grids too large for dense storage.
inline CSparse central_difference_4th_sparse(std::size_t points, double h)
{
  const auto n = static_cast<Eigen::Index>(points);
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  entries.reserve(4 * points);
  const double c1 = 8.0 / (12.0 * h);
  const double c2 = 1.0 / (12.0 * h);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j + 1 < n) { entries.emplace_back(j, j + 1, c1); entries.emplace_back(j + 1, j, -c1); }
    if (j + 2 < n) { entries.emplace_back(j, j + 2, -c2); entries.emplace_back(j + 2, j, c2); }
  }
  CSparse d(n, n);
  d.setFromTriplets(entries.begin(), entries.end());
  return d;
}

inline std::vector<double> linspace(double a, double b, std::size_t n)
{
  std::vector<double> out(n);
  if (n == 1) { out[0] = a; return out; }
  const double h = (b - a) / static_cast<double>(n - 1);
  for (std::size_t j = 0; j < n; ++j) out[j] = a + h * static_cast<double>(j);
  out[n - 1] = b;
  return out;
}

}  // namespace deformlab
