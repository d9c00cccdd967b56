#ifndef MINORB_ORACLE_LINALG_HPP
#define MINORB_ORACLE_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace minorb::oracle {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cd = std::complex<double>;

/// Numerical policy of the oracle.
namespace tol {
/// Singular values below rank_rel * (largest singular value) count as zero.
inline constexpr double rank_rel = 1e-7;
/// Bound on normalized residuals (closure, Jacobi, homomorphism, graded action).
inline constexpr double residual = 1e-9;
/// Bound on principal angles between subspaces, and on flow-to-top distance.
inline constexpr double angle = 1e-7;
/// Eigenvalues closer than this are one cluster.
inline constexpr double cluster = 1e-6;
/// A vector whose top component is relatively smaller than this has none.
inline constexpr double zero_component = 1e-9;
/// Largest module dimension the functors will build.
inline constexpr long max_module_dim = 10000;
} // namespace tol

template <class M>
Eigen::Matrix<typename M::Scalar, Eigen::Dynamic, Eigen::Dynamic> null_space(const M& a, double rel = tol::rank_rel)
{
  using Out = Eigen::Matrix<typename M::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto cols = a.cols();
  if (a.rows() == 0) return Out::Identity(cols, cols);
  Eigen::JacobiSVD<Out> svd(Out(a), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double top = s.size() ? s(0) : 0.0;
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel * top) ++r;
  return svd.matrixV().rightCols(cols - r);
}

template <class M>
Eigen::Index numerical_rank(const M& a, double rel = tol::rank_rel)
{
  if (a.rows() == 0 || a.cols() == 0) return 0;
  using Out = Eigen::Matrix<typename M::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::JacobiSVD<Out> svd{Out(a)};
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel * s(0)) ++r;
  return r;
}

/// Orthonormal basis of the column space.
template <class M>
Eigen::Matrix<typename M::Scalar, Eigen::Dynamic, Eigen::Dynamic> orth(const M& a, double rel = tol::rank_rel)
{
  using Out = Eigen::Matrix<typename M::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.cols() == 0) return Out(a.rows(), 0);
  Eigen::JacobiSVD<Out> svd(Out(a), Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel * s(0)) ++r;
  return svd.matrixU().leftCols(r);
}

/// Largest principal angle between the column spans of two orthonormal bases;
/// pi/2 when the dimensions differ.
template <class M>
double max_principal_angle(const M& q1, const M& q2)
{
  if (q1.cols() != q2.cols()) return M_PI / 2;
  if (q1.cols() == 0) return 0.0;
  M r = q1 - q2 * (q2.adjoint() * q1);
  Eigen::JacobiSVD<M> svd{r};
  return std::asin(std::min(1.0, svd.singularValues()(0)));
}

inline Mat realify(const CMat& x)
{
  const auto n = x.rows(), m = x.cols();
  Mat r(2 * n, 2 * m);
  r << x.real(), -x.imag(), x.imag(), x.real();
  return r;
}

/// Inverse of realify on matrices of the form [[A, -B], [B, A]].
inline CMat complexify(const Mat& r)
{
  const auto n = r.rows() / 2, m = r.cols() / 2;
  return r.topLeftCorner(n, m).cast<cd>() + cd(0, 1) * r.bottomLeftCorner(n, m).cast<cd>();
}

template <class M>
M kron(const M& a, const M& b)
{
  return Eigen::kroneckerProduct(a, b).eval();
}

/// One cluster of eigenvalues of a diagonalizable matrix with real spectrum.
template <class Scalar>
struct Level {
  double value;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis;  // orthonormal
};

/// Eigenspaces of a matrix expected to be diagonalizable over the reals,
/// ordered by increasing eigenvalue. Throws if the spectrum is not real or the
/// eigenspaces do not fill the space.
template <class M>
std::vector<Level<typename M::Scalar>> real_eigenspaces(const M& a)
{
  using Scalar = typename M::Scalar;
  using Out = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto n = a.rows();
  std::vector<double> ev;
  if constexpr (std::is_same_v<Scalar, double>) {
    Eigen::EigenSolver<Out> es(a, false);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto l = es.eigenvalues()(i);
      if (std::abs(l.imag()) > tol::cluster * std::max(1.0, std::abs(l))) throw std::runtime_error("non-real eigenvalue");
      ev.push_back(l.real());
    }
  } else {
    Eigen::ComplexEigenSolver<Out> es(a, false);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto l = es.eigenvalues()(i);
      if (std::abs(l.imag()) > tol::cluster * std::max(1.0, std::abs(l))) throw std::runtime_error("non-real eigenvalue");
      ev.push_back(l.real());
    }
  }
  std::sort(ev.begin(), ev.end());
  std::vector<std::vector<double>> clusters;
  for (double x : ev) {
    if (clusters.empty() || x - clusters.back().back() > tol::cluster * std::max(1.0, std::abs(x)))
      clusters.emplace_back();
    clusters.back().push_back(x);
  }
  std::vector<Level<Scalar>> out;
  Eigen::Index total = 0;
  for (const auto& c : clusters) {
    double mean = 0;
    for (double x : c) mean += x;
    mean /= static_cast<double>(c.size());
    Out shifted = a - Scalar(mean) * Out::Identity(n, n);
    // Eigenvalue errors of order sqrt(eps) are possible; clusters are well separated.
    out.push_back({mean, null_space(shifted, 1e-6)});
    if (out.back().basis.cols() != static_cast<Eigen::Index>(c.size()))
      throw std::runtime_error("matrix is not diagonalizable at eigenvalue " + std::to_string(mean));
    total += out.back().basis.cols();
  }
  if (total != n) throw std::runtime_error("eigenspaces do not span");
  return out;
}

} // namespace minorb::oracle

#endif // MINORB_ORACLE_LINALG_HPP
