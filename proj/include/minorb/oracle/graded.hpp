#ifndef MINORB_ORACLE_GRADED_HPP
#define MINORB_ORACLE_GRADED_HPP

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "minorb/oracle/module.hpp"

namespace minorb::oracle {

/// A module together with the action of a grading element.
struct GradedRealization {
  MatrixModule module;
  Mat z_matrix;   // rho(Z)
  Mat algebra_z;  // ad(Z) in the algebra basis
  Vec z_coords;
};

class PreconditionViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Fails if z is not in the algebra or ad(z) has non-integral spectrum.
inline GradedRealization make_graded(MatrixModule m, const Mat& z)
{
  const auto& g = *m.algebra;
  if (g.membership_residual(z) > tol::residual) throw std::invalid_argument("grading element is not in the algebra");
  GradedRealization out;
  out.z_coords = g.coordinates(z);
  out.z_matrix = m.apply(out.z_coords);
  out.algebra_z = ad_matrix(g, z);
  for (const auto& l : real_eigenspaces(out.algebra_z))
    if (std::abs(l.value - std::round(l.value)) > tol::cluster) throw std::invalid_argument("ad(Z) has a non-integral eigenvalue");
  out.module = std::move(m);
  return out;
}

/// Module eigenspaces of rho(Z), increasing.
inline std::vector<Level<double>> module_levels(const GradedRealization& g) { return real_eigenspaces(g.z_matrix); }

/// Algebra eigenspaces of ad(Z) with integral labels, increasing.
inline std::vector<Level<double>> algebra_levels(const GradedRealization& g)
{
  auto levels = real_eigenspaces(g.algebra_z);
  for (auto& l : levels) l.value = std::round(l.value);
  return levels;
}

inline Mat top_eigenspace(const GradedRealization& g) { return module_levels(g).back().basis; }

/// Intersection of the null spaces.
inline Mat joint_kernel(const std::vector<Mat>& mats)
{
  if (mats.empty()) throw std::invalid_argument("joint kernel of an empty list");
  const auto cols = mats.front().cols();
  Eigen::Index rows = 0;
  for (const auto& m : mats) {
    if (m.cols() != cols) throw std::invalid_argument("joint kernel of matrices with different shapes");
    rows += m.rows();
  }
  Mat stacked(rows, cols);
  Eigen::Index off = 0;
  for (const auto& m : mats) {
    stacked.middleRows(off, m.rows()) = m;
    off += m.rows();
  }
  if (stacked.norm() == 0) return Mat::Identity(cols, cols);
  return null_space(stacked);
}

/// rho of a basis of the positive part of the grading.
inline std::vector<Mat> positive_action(const GradedRealization& g)
{
  std::vector<Mat> out;
  for (const auto& l : algebra_levels(g))
    if (l.value > 0)
      for (Eigen::Index c = 0; c < l.basis.cols(); ++c) out.push_back(g.module.apply(Vec(l.basis.col(c))));
  return out;
}

struct GradedActionReport {
  double max_residual = 0;
  bool pass = false;
};

/// Every algebra eigenvector of degree i maps module eigenvectors of level t into level t + i.
inline GradedActionReport graded_action_check(const GradedRealization& g)
{
  const auto alg = algebra_levels(g);
  const auto mod = module_levels(g);
  auto target = [&](double t) -> const Mat* {
    for (const auto& l : mod)
      if (std::abs(l.value - t) < tol::cluster * std::max(1.0, std::abs(t))) return &l.basis;
    return nullptr;
  };
  GradedActionReport r;
  for (const auto& a : alg)
    for (Eigen::Index c = 0; c < a.basis.cols(); ++c) {
      const Mat rx = g.module.apply(Vec(a.basis.col(c)));
      const double scale = std::max(1.0, rx.norm());
      for (const auto& l : mod) {
        const Mat y = rx * l.basis;
        const Mat* u = target(l.value + a.value);
        const Mat off = u ? Mat(y - *u * (u->transpose() * y)) : y;
        r.max_residual = std::max(r.max_residual, off.norm() / scale);
      }
    }
  r.pass = r.max_residual < tol::residual;
  return r;
}

/// Same grading element, action matrices perturbed by relative noise.
inline GradedRealization perturbed(GradedRealization g, double magnitude, std::mt19937_64& rng)
{
  std::normal_distribution<double> n01;
  for (auto& x : g.module.action) {
    Mat noise = Mat::NullaryExpr(x.rows(), x.cols(), [&]() { return n01(rng); });
    x += magnitude * std::max(1.0, x.norm()) * noise / noise.norm();
  }
  return g;
}

/// sin of the angle between two nonzero vectors.
inline double angular_distance(const Vec& a, const Vec& b)
{
  const Vec bh = b.normalized();
  return std::min(1.0, (a - bh * bh.dot(a)).norm() / a.norm());
}

struct FlowReport {
  bool precondition_violation = false;
  std::vector<double> distances;  // step 0 .. steps
  int converged_at = -1;
  bool monotone = true;
  bool pass = false;
};

/// w_m = exp(mZ) v, normalized, against the top component of v.
inline FlowReport flow_to_top(const GradedRealization& g, const Vec& v, int steps = 60)
{
  if (v.norm() == 0) throw std::invalid_argument("flow from the zero vector");
  const auto levels = module_levels(g);
  const auto n = g.z_matrix.rows();
  Mat eig(n, n);
  Eigen::Index off = 0;
  for (const auto& l : levels) {
    eig.middleCols(off, l.basis.cols()) = l.basis;
    off += l.basis.cols();
  }
  const Vec c = eig.partialPivLu().solve(v);
  const auto top_dim = levels.back().basis.cols();
  const Vec v_top = levels.back().basis * c.tail(top_dim);
  FlowReport r;
  if (v_top.norm() < tol::zero_component * v.norm()) {
    r.precondition_violation = true;
    return r;
  }
  const double theta = levels.back().value;
  const Mat e = Mat(g.z_matrix - theta * Mat::Identity(n, n)).exp();
  Vec w = v.normalized();
  r.distances.push_back(angular_distance(w, v_top));
  for (int m = 1; m <= steps; ++m) {
    w = (e * w).normalized();
    r.distances.push_back(angular_distance(w, v_top));
  }
  for (std::size_t m = 0; m < r.distances.size(); ++m) {
    if (r.converged_at < 0 && r.distances[m] < tol::angle) r.converged_at = static_cast<int>(m);
    if (m > 0 && r.distances[m] > r.distances[m - 1] + 1e-12 && r.distances[m] >= tol::angle) r.monotone = false;
  }
  r.pass = r.converged_at >= 0 && r.monotone;
  return r;
}

/// dim of {X : rho(X) v in span(v)}.
inline int projective_stab_dim(const MatrixModule& m, const Vec& v)
{
  if (v.norm() == 0) throw std::invalid_argument("stabilizer of the zero vector");
  const Vec vh = v.normalized();
  Mat cols(m.dim(), static_cast<Eigen::Index>(m.action.size()));
  for (std::size_t j = 0; j < m.action.size(); ++j) {
    const Vec y = m.action[j] * vh;
    cols.col(static_cast<Eigen::Index>(j)) = y - vh * vh.dot(y);
  }
  const auto scale = cols.norm();
  if (scale < tol::residual) return static_cast<int>(m.action.size());
  return static_cast<int>(m.action.size() - numerical_rank(cols));
}

inline int projective_orbit_dim(const MatrixModule& m, const Vec& v) { return m.algebra->dim() - projective_stab_dim(m, v); }

enum class FormSymmetry { none, symmetric, antisymmetric, indefinite };

inline const char* to_string(FormSymmetry s)
{
  switch (s) {
  case FormSymmetry::none: return "none";
  case FormSymmetry::symmetric: return "symmetric";
  case FormSymmetry::antisymmetric: return "antisymmetric";
  default: return "indefinite";
  }
}

/// Symmetry of the invariant bilinear forms B (rho^T B + B rho = 0).
inline FormSymmetry invariant_form_symmetry(const MatrixModule& m)
{
  const auto n = m.dim();
  const Mat id = Mat::Identity(n, n);
  Mat eq(static_cast<Eigen::Index>(m.action.size()) * n * n, n * n);
  for (std::size_t j = 0; j < m.action.size(); ++j) {
    const Mat& x = m.action[j];
    eq.middleRows(static_cast<Eigen::Index>(j) * n * n, n * n) = kron(id, Mat(x.transpose())) + kron(Mat(x.transpose()), id);
  }
  const Mat ns = null_space(eq);
  if (ns.cols() == 0) return FormSymmetry::none;
  if (ns.cols() > 1) return FormSymmetry::indefinite;
  const Mat b = Eigen::Map<const Mat>(ns.col(0).data(), n, n);
  if ((b - b.transpose()).norm() < 1e-6 * b.norm()) return FormSymmetry::symmetric;
  if ((b + b.transpose()).norm() < 1e-6 * b.norm()) return FormSymmetry::antisymmetric;
  return FormSymmetry::indefinite;
}

/// Gram matrix of the trace form (X, Y) -> tr(rho(X) rho(Y)).
inline Mat trace_form(const MatrixModule& m)
{
  const auto d = static_cast<Eigen::Index>(m.action.size());
  Mat t(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) t(i, j) = (m.action[i] * m.action[j]).trace();
  return t;
}

} // namespace minorb::oracle

#endif // MINORB_ORACLE_GRADED_HPP
