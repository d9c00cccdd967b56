#ifndef MINORB_ORACLE_ALGEBRA_HPP
#define MINORB_ORACLE_ALGEBRA_HPP

#include <functional>
#include <memory>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorb/catalog.hpp"
#include "minorb/oracle/linalg.hpp"

namespace minorb::oracle {

class UnsupportedForm : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Real matrix Lie algebra with a Frobenius-orthonormal basis.
struct MatrixLieAlgebra {
  std::string name;
  std::vector<Mat> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  Eigen::Index size() const { return basis.empty() ? 0 : basis.front().rows(); }

  /// Basis matrices as columns of vec(X).
  Mat stacked() const
  {
    const auto n = size();
    Mat b(n * n, dim());
    for (int j = 0; j < dim(); ++j) b.col(j) = Eigen::Map<const Vec>(basis[j].data(), n * n);
    return b;
  }

  Vec coordinates(const Mat& x) const
  {
    Vec c(dim());
    for (int j = 0; j < dim(); ++j) c(j) = (basis[j].array() * x.array()).sum();
    return c;
  }

  Mat element(const Vec& c) const
  {
    Mat x = Mat::Zero(size(), size());
    for (int j = 0; j < dim(); ++j) x += c(j) * basis[j];
    return x;
  }

  /// Distance of x from the span, relative to its size.
  double membership_residual(const Mat& x) const
  {
    return (x - element(coordinates(x))).norm() / std::max(1.0, x.norm());
  }
};

inline Mat bracket(const Mat& a, const Mat& b) { return a * b - b * a; }

inline Eigen::Index basis_rank(const MatrixLieAlgebra& g) { return numerical_rank(g.stacked()); }

inline double closure_residual(const MatrixLieAlgebra& g)
{
  double worst = 0;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) worst = std::max(worst, g.membership_residual(bracket(g.basis[i], g.basis[j])));
  return worst;
}

inline double jacobi_residual(const MatrixLieAlgebra& g)
{
  double worst = 0;
  const auto& x = g.basis;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      for (int k = j + 1; k < g.dim(); ++k) {
        Mat s = bracket(x[i], bracket(x[j], x[k])) + bracket(x[j], bracket(x[k], x[i])) + bracket(x[k], bracket(x[i], x[j]));
        worst = std::max(worst, s.norm());
      }
  return worst;
}

/// Matrix of ad(x) in the basis of g.
inline Mat ad_matrix(const MatrixLieAlgebra& g, const Mat& x)
{
  Mat a(g.dim(), g.dim());
  for (int k = 0; k < g.dim(); ++k) a.col(k) = g.coordinates(bracket(x, g.basis[k]));
  return a;
}

namespace detail {

/// Real n x n matrices killed by a linear map.
inline MatrixLieAlgebra from_real_constraints(std::string name, int n, const std::function<Vec(const Mat&)>& f)
{
  std::vector<Vec> cols;
  for (int k = 0; k < n * n; ++k) {
    Mat e = Mat::Zero(n, n);
    e(k % n, k / n) = 1;
    cols.push_back(f(e));
  }
  Mat a(cols.front().size(), n * n);
  for (int k = 0; k < n * n; ++k) a.col(k) = cols[k];
  const Mat ns = null_space(a);
  MatrixLieAlgebra g{std::move(name), {}};
  for (Eigen::Index j = 0; j < ns.cols(); ++j) g.basis.push_back(Eigen::Map<const Mat>(ns.col(j).data(), n, n));
  return g;
}

/// Complex n x n matrices killed by a real-linear map, realified to 2n x 2n.
inline MatrixLieAlgebra from_complex_constraints(std::string name, int n, const std::function<CVec(const CMat&)>& f)
{
  const int m = n * n;
  std::vector<CVec> cols;
  for (int k = 0; k < 2 * m; ++k) {
    CMat e = CMat::Zero(n, n);
    e(k % m % n, k % m / n) = k < m ? cd(1, 0) : cd(0, 1);
    cols.push_back(f(e));
  }
  const auto rows = cols.front().size();
  Mat a(2 * rows, 2 * m);
  for (int k = 0; k < 2 * m; ++k) {
    a.col(k).head(rows) = cols[k].real();
    a.col(k).tail(rows) = cols[k].imag();
  }
  const Mat ns = null_space(a);
  MatrixLieAlgebra g{std::move(name), {}};
  for (Eigen::Index j = 0; j < ns.cols(); ++j) {
    CMat x(n, n);
    for (int k = 0; k < m; ++k) x(k % n, k / n) = cd(ns(k, j), ns(m + k, j));
    g.basis.push_back(realify(x) / std::sqrt(2.0));
  }
  return g;
}

inline Vec flatten(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

inline CVec flatten(const CMat& m) { return Eigen::Map<const CVec>(m.data(), m.size()); }

/// Symmetric form with p hyperbolic pairs around a positive definite block:
/// basis u_1..u_p, w_1..w_{n-2p}, u*_p..u*_1.
inline Mat hyperbolic_form(int p, int n)
{
  Mat eta = Mat::Zero(n, n);
  for (int i = 0; i < p; ++i) eta(i, n - 1 - i) = eta(n - 1 - i, i) = 1;
  for (int i = p; i < n - p; ++i) eta(i, i) = 1;
  return eta;
}

inline bool has(const std::set<int>& s, int i) { return s.count(i) > 0; }

/// One simple (or compact) summand with its grading elements.
struct Piece {
  MatrixLieAlgebra algebra;
  int rank;
  /// Grading element for a set of crossed local nodes.
  std::function<Mat(const std::set<int>&)> grading;
};

inline std::function<Mat(const std::set<int>&)> no_grading(const std::string& name, int n)
{
  return [name, n](const std::set<int>& s) -> Mat {
    if (!s.empty()) throw UnsupportedForm("no grading element available for " + name + " with crossed nodes");
    return Mat::Zero(n, n);
  };
}

inline Piece special_linear(int n)
{
  const std::string name = "sl(" + std::to_string(n) + ",R)";
  auto g = from_real_constraints(name, n, [](const Mat& x) { return Vec::Constant(1, x.trace()); });
  auto z = [n](const std::set<int>& s) -> Mat {
    Vec d(n);
    d(n - 1) = 0;
    for (int i = n - 2; i >= 0; --i) d(i) = d(i + 1) + (has(s, i) ? 1 : 0);
    d.array() -= d.mean();
    return d.asDiagonal();
  };
  return {std::move(g), n - 1, z};
}

inline Piece special_orthogonal(int p, int q)
{
  const std::string name = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (p > q) std::swap(p, q);
  const int n = p + q;
  const Mat eta = hyperbolic_form(p, n);
  auto g = from_real_constraints(name, n, [eta](const Mat& x) { return flatten(Mat(x.transpose() * eta + eta * x)); });
  const int rank = n / 2;
  const bool graded = p > 0 && (n == 3 || (n % 2 == 1 && n > 4) || (n % 2 == 0 && n > 4 && p <= rank - 2));
  if (!graded) return {std::move(g), n == 4 ? 2 : rank, no_grading(name, n)};
  auto z = [p, n, name](const std::set<int>& s) -> Mat {
    for (int i : s)
      if (i >= p) throw UnsupportedForm("crossed node " + std::to_string(i + 1) + " of " + name + " is not white");
    Vec zz(p);
    zz(p - 1) = has(s, p - 1) ? 1 : 0;
    for (int i = p - 2; i >= 0; --i) zz(i) = zz(i + 1) + (has(s, i) ? 1 : 0);
    Vec d = Vec::Zero(n);
    for (int i = 0; i < p; ++i) {
      d(i) = zz(i);
      d(n - 1 - i) = -zz(i);
    }
    return d.asDiagonal();
  };
  return {std::move(g), n == 3 ? 1 : rank, z};
}

inline Piece symplectic_split4()
{
  Mat j = Mat::Zero(4, 4);
  j.topRightCorner(2, 2) = Mat::Identity(2, 2);
  j.bottomLeftCorner(2, 2) = -Mat::Identity(2, 2);
  auto g = from_real_constraints("sp(4,R)", 4, [j](const Mat& x) { return flatten(Mat(x.transpose() * j + j * x)); });
  auto z = [](const std::set<int>& s) -> Mat {
    const double z2 = has(s, 1) ? 0.5 : 0.0;
    const double z1 = z2 + (has(s, 0) ? 1 : 0);
    Vec d(4);
    d << z1, z2, -z1, -z2;
    return d.asDiagonal();
  };
  return {std::move(g), 2, z};
}

inline Piece special_unitary(int p, int q)
{
  const std::string name = q == 0 || p == 0 ? "su(" + std::to_string(p + q) + ")"
                                            : "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (p > q) std::swap(p, q);
  const int n = p + q;
  CMat eta = hyperbolic_form(p, n).cast<cd>();
  auto g = from_complex_constraints(name, n, [eta](const CMat& x) {
    CVec herm = flatten(CMat(x.adjoint() * eta + eta * x));
    CVec out(herm.size() + 1);
    out << herm, x.trace();
    return out;
  });
  if (p == 0) return {std::move(g), n - 1, no_grading(name, 2 * n)};
  auto z = [n, name](const std::set<int>& s) -> Mat {
    if (s.empty()) return Mat::Zero(2 * n, 2 * n);
    CMat d = CMat::Zero(n, n);
    if (n == 2) {
      d(0, 0) = 0.5;
      d(1, 1) = -0.5;
    } else {
      if (s != std::set<int>{0, 1}) throw UnsupportedForm("arrow-paired nodes of " + name + " must be crossed together");
      d(0, 0) = 1;
      d(2, 2) = -1;
    }
    return realify(d);
  };
  return {std::move(g), n - 1, z};
}

/// sl(2,H) as complex 4x4 matrices commuting with the quaternionic structure.
inline CMat quaternionic_structure(int n)
{
  CMat j = CMat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -CMat::Identity(n, n);
  j.bottomLeftCorner(n, n) = CMat::Identity(n, n);
  return j;
}

inline Piece quaternionic_linear2()
{
  const CMat j = quaternionic_structure(2);
  auto g = from_complex_constraints("sl(2,H)", 4, [j](const CMat& x) {
    CVec c = flatten(CMat(x * j - j * x.conjugate()));
    CVec out(c.size() + 1);
    out << c, x.trace();
    return out;
  });
  auto z = [](const std::set<int>& s) -> Mat {
    for (int i : s)
      if (i != 1) throw UnsupportedForm("crossed node " + std::to_string(i + 1) + " of sl(2,H) is not white");
    CMat d = CMat::Zero(4, 4);
    if (!s.empty()) {
      Vec v(4);
      v << 0.5, -0.5, 0.5, -0.5;
      d.diagonal() = v.cast<cd>();
    }
    return realify(d);
  };
  return {std::move(g), 3, z};
}

inline Piece piece(const std::string& raw)
{
  const std::string name = minorb::detail::trim(raw);
  static const std::regex sl(R"(^sl\((\d+),R\)$)");
  static const std::regex so(R"(^so\((\d+),(\d+)\)$)");
  static const std::regex su(R"(^su\((\d+)(?:,(\d+))?\)$)");
  std::smatch m;
  auto fail = [&]() -> Piece { throw UnsupportedForm("real form '" + name + "' is not in the oracle set"); };
  if (std::regex_match(name, m, sl)) {
    const int n = std::stoi(m[1]);
    return n >= 2 && n <= 4 ? special_linear(n) : fail();
  }
  if (std::regex_match(name, m, so)) {
    const int p = std::stoi(m[1]), q = std::stoi(m[2]);
    return p + q >= 3 && p + q <= 6 ? special_orthogonal(p, q) : fail();
  }
  if (std::regex_match(name, m, su)) {
    const int p = m[2].matched ? std::stoi(m[1]) : 0;
    const int q = m[2].matched ? std::stoi(m[2]) : std::stoi(m[1]);
    return p + q >= 2 && p + q <= 3 ? special_unitary(p, q) : fail();
  }
  if (name == "sp(4,R)") return symplectic_split4();
  if (name == "sl(2,H)") return quaternionic_linear2();
  if (name == "sp(1)") {
    auto p = special_unitary(0, 2);
    p.algebra.name = "sp(1)";
    return p;
  }
  return fail();
}

inline std::vector<std::string> summands(const std::string& form)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto plus = form.find('+', start);
    out.push_back(minorb::detail::trim(form.substr(start, plus - start)));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

inline Mat block_diagonal(const std::vector<Mat>& blocks)
{
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  Mat out = Mat::Zero(n, n);
  Eigen::Index off = 0;
  for (const auto& b : blocks) {
    out.block(off, off, b.rows(), b.cols()) = b;
    off += b.rows();
  }
  return out;
}

} // namespace detail

/// Forms the oracle can realize; '+' joins summands.
inline std::vector<std::string> supported_forms()
{
  return {"sl(2,R)", "sl(3,R)", "sl(4,R)", "so(1,2)", "so(1,3)", "so(2,2)", "so(1,4)", "so(2,3)",
          "so(1,5)", "so(2,4)", "so(3,3)", "sp(4,R)", "su(1,1)", "su(1,2)", "sl(2,H)", "sp(1)"};
}

inline MatrixLieAlgebra build_algebra(const std::string& form)
{
  const auto names = detail::summands(form);
  if (names.size() == 1) return detail::piece(names.front()).algebra;
  std::vector<MatrixLieAlgebra> parts;
  Eigen::Index n = 0;
  for (const auto& s : names) {
    parts.push_back(detail::piece(s).algebra);
    n += parts.back().size();
  }
  MatrixLieAlgebra g{join(names, " + "), {}};
  Eigen::Index off = 0;
  for (const auto& p : parts) {
    for (const auto& x : p.basis) {
      Mat big = Mat::Zero(n, n);
      big.block(off, off, x.rows(), x.cols()) = x;
      g.basis.push_back(big);
    }
    off += p.size();
  }
  return g;
}

/// Grading element of `form` for a set of crossed nodes, numbered globally as
/// in real_form_diagram(form).
inline Mat grading_element(const std::string& form, const std::set<int>& crossed)
{
  std::vector<Mat> blocks;
  int off = 0;
  std::set<int> remaining = crossed;
  for (const auto& s : detail::summands(form)) {
    auto p = detail::piece(s);
    const int rank = real_form_diagram(s).node_count();
    std::set<int> local;
    for (int i : crossed)
      if (i >= off && i < off + rank) {
        local.insert(i - off);
        remaining.erase(i);
      }
    blocks.push_back(p.grading(local));
    off += rank;
  }
  if (!remaining.empty()) throw std::invalid_argument("crossed node " + std::to_string(*remaining.begin() + 1) + " out of range");
  return detail::block_diagonal(blocks);
}

} // namespace minorb::oracle

#endif // MINORB_ORACLE_ALGEBRA_HPP
