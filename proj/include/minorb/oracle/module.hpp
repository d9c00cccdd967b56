#ifndef MINORB_ORACLE_MODULE_HPP
#define MINORB_ORACLE_MODULE_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorb/oracle/algebra.hpp"

namespace minorb::oracle {

template <class S>
using MatT = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// One matrix per algebra basis element.
template <class S>
using Action = std::vector<MatT<S>>;

/// Real representation of a matrix Lie algebra.
struct MatrixModule {
  std::shared_ptr<const MatrixLieAlgebra> algebra;
  Action<double> action;
  std::string name;

  Eigen::Index dim() const { return action.empty() ? 0 : action.front().rows(); }

  Mat apply(const Vec& coords) const
  {
    Mat r = Mat::Zero(dim(), dim());
    for (std::size_t j = 0; j < action.size(); ++j) r += coords(static_cast<Eigen::Index>(j)) * action[j];
    return r;
  }
  Mat apply(const Mat& x) const { return apply(algebra->coordinates(x)); }
};

/// max over basis pairs of |rho([X_i,X_j]) - [rho X_i, rho X_j]|, relative to the size of the bracket.
inline double homomorphism_residual(const MatrixModule& m)
{
  const auto& g = *m.algebra;
  double worst = 0;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      Mat lhs = m.apply(bracket(g.basis[i], g.basis[j]));
      Mat rhs = bracket(m.action[i], m.action[j]);
      worst = std::max(worst, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
    }
  return worst;
}

inline std::shared_ptr<const MatrixLieAlgebra> share(MatrixLieAlgebra g)
{
  return std::make_shared<const MatrixLieAlgebra>(std::move(g));
}

inline MatrixModule standard_module(std::shared_ptr<const MatrixLieAlgebra> g)
{
  Action<double> a = g->basis;
  return {g, std::move(a), "standard"};
}

inline MatrixModule adjoint_module(std::shared_ptr<const MatrixLieAlgebra> g)
{
  Action<double> a;
  for (const auto& x : g->basis) a.push_back(ad_matrix(*g, x));
  return {g, std::move(a), "adjoint"};
}

class DimensionOverflow : public std::length_error {
public:
  using std::length_error::length_error;
};

inline void guard_dim(long long d)
{
  if (d > tol::max_module_dim)
    throw DimensionOverflow("module dimension " + std::to_string(d) + " exceeds " + std::to_string(tol::max_module_dim));
}

template <class S>
Action<S> dual_action(const Action<S>& a)
{
  Action<S> out;
  for (const auto& x : a) out.push_back(-x.transpose());
  return out;
}

template <class S>
Action<S> tensor_action(const Action<S>& a, const Action<S>& b)
{
  if (a.size() != b.size()) throw std::invalid_argument("tensor product of modules over different algebras");
  const auto n = a.front().rows(), m = b.front().rows();
  guard_dim(static_cast<long long>(n) * m);
  const MatT<S> in = MatT<S>::Identity(n, n), im = MatT<S>::Identity(m, m);
  Action<S> out;
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(kron(a[j], im) + kron(in, b[j]));
  return out;
}

enum class Power { symmetric, exterior };

/// Orthonormal basis of Sym^k or Lambda^k inside the k-fold tensor power of R^n,
/// one column per sorted index tuple. Flat index of (i_1..i_k) is i_1 n^{k-1} + ... + i_k.
inline Mat power_basis(int n, int k, Power kind)
{
  long long full = 1;
  for (int i = 0; i < k; ++i) full *= n;
  if (full > 100 * tol::max_module_dim) throw DimensionOverflow("tensor power too large");
  std::vector<std::vector<int>> tuples;
  std::vector<int> t(k, 0);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == k) {
      tuples.push_back(t);
      return;
    }
    for (int i = from; i < n; ++i) {
      t[pos] = i;
      rec(pos + 1, kind == Power::symmetric ? i : i + 1);
    }
  };
  rec(0, 0);
  guard_dim(static_cast<long long>(tuples.size()));
  Mat q = Mat::Zero(full, static_cast<Eigen::Index>(tuples.size()));
  for (std::size_t c = 0; c < tuples.size(); ++c) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      long long flat = 0;
      for (int s = 0; s < k; ++s) flat = flat * n + tuples[c][perm[s]];
      double sign = 1;
      if (kind == Power::exterior)
        for (int a = 0; a < k; ++a)
          for (int b = a + 1; b < k; ++b)
            if (perm[a] > perm[b]) sign = -sign;
      // Repeated indices revisit the same entry.
      q(flat, static_cast<Eigen::Index>(c)) = kind == Power::exterior ? sign : 1.0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    q.col(static_cast<Eigen::Index>(c)).normalize();
  }
  return q;
}

/// Applies x to tensor slot `slot` of every column of t (k-fold power of C^n).
template <class S>
MatT<S> apply_slot(const MatT<S>& x, int slot, int k, const MatT<S>& t)
{
  const auto n = x.rows();
  Eigen::Index inner = 1;
  for (int s = slot + 1; s < k; ++s) inner *= n;
  const Eigen::Index outer = t.rows() / (inner * n);
  MatT<S> out = MatT<S>::Zero(t.rows(), t.cols());
  for (Eigen::Index c = 0; c < t.cols(); ++c)
    for (Eigen::Index o = 0; o < outer; ++o)
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          const S xij = x(i, j);
          if (xij == S(0)) continue;
          for (Eigen::Index r = 0; r < inner; ++r) out((o * n + i) * inner + r, c) += xij * t((o * n + j) * inner + r, c);
        }
  return out;
}

template <class S>
Action<S> power_action(const Action<S>& a, int k, Power kind)
{
  const int n = static_cast<int>(a.front().rows());
  if (k < 1) throw std::invalid_argument("power must be positive");
  if (kind == Power::exterior && k > n) throw std::invalid_argument("exterior power above module dimension");
  const MatT<S> q = power_basis(n, k, kind).cast<S>();
  Action<S> out;
  for (const auto& x : a) {
    MatT<S> y = MatT<S>::Zero(q.rows(), q.cols());
    for (int s = 0; s < k; ++s) y += apply_slot(x, s, k, q);
    out.push_back(q.transpose() * y);
  }
  return out;
}

/// An antilinear map v -> J conj(v), restricted from the k-fold tensor power.
inline CMat power_structure(const CMat& j, int k, Power kind)
{
  const CMat q = power_basis(static_cast<int>(j.rows()), k, kind).cast<cd>();
  CMat y = q;
  for (int s = 0; s < k; ++s) y = apply_slot(j, s, k, y);
  return q.transpose() * y;
}

inline MatrixModule dual(const MatrixModule& m) { return {m.algebra, dual_action(m.action), "dual(" + m.name + ")"}; }

inline MatrixModule tensor(const MatrixModule& a, const MatrixModule& b)
{
  if (a.algebra != b.algebra && a.algebra->name != b.algebra->name)
    throw std::invalid_argument("tensor product of modules over different algebras");
  return {a.algebra, tensor_action(a.action, b.action), a.name + " x " + b.name};
}

inline MatrixModule wedge(const MatrixModule& m, int k)
{
  return {m.algebra, power_action(m.action, k, Power::exterior), "wedge" + std::to_string(k) + "(" + m.name + ")"};
}

inline MatrixModule sym(const MatrixModule& m, int k)
{
  return {m.algebra, power_action(m.action, k, Power::symmetric), "sym" + std::to_string(k) + "(" + m.name + ")"};
}

/// Complex representation of a real algebra with an antilinear structure
/// v -> structure * conj(v) commuting with the action and squaring to +1.
struct ComplexModule {
  Action<cd> action;
  CMat structure;
};

inline ComplexModule tensor(const ComplexModule& a, const ComplexModule& b)
{
  return {tensor_action(a.action, b.action), kron(a.structure, b.structure)};
}

inline ComplexModule power(const ComplexModule& m, int k, Power kind)
{
  return {power_action(m.action, k, kind), power_structure(m.structure, k, kind)};
}

/// |J conj(rho) - rho J| and |J conj(J) - 1|.
inline double structure_residual(const ComplexModule& m)
{
  const auto n = m.structure.rows();
  double worst = (m.structure * m.structure.conjugate() - CMat::Identity(n, n)).norm();
  for (const auto& x : m.action) worst = std::max(worst, (m.structure * x.conjugate() - x * m.structure).norm() / std::max(1.0, x.norm()));
  return worst;
}

/// Smallest subspace containing the columns of `seed` and stable under the action.
template <class S>
MatT<S> cyclic_span(const Action<S>& a, const MatT<S>& seed)
{
  MatT<S> q = orth(seed);
  for (;;) {
    MatT<S> grown(q.rows(), q.cols() * static_cast<Eigen::Index>(a.size() + 1));
    grown.leftCols(q.cols()) = q;
    for (std::size_t j = 0; j < a.size(); ++j) grown.middleCols(q.cols() * static_cast<Eigen::Index>(j + 1), q.cols()) = a[j] * q;
    MatT<S> next = orth(grown);
    if (next.cols() == q.cols()) return q;
    q = next;
  }
}

/// Restriction to an invariant subspace with orthonormal basis q.
inline ComplexModule restrict(const ComplexModule& m, const CMat& q)
{
  ComplexModule out;
  for (const auto& x : m.action) out.action.push_back(q.adjoint() * x * q);
  out.structure = q.adjoint() * m.structure * q.conjugate();
  return out;
}

/// The real points {v : v = J conj(v)} as a real module over `g`.
inline MatrixModule real_points(const ComplexModule& m, std::shared_ptr<const MatrixLieAlgebra> g, std::string name)
{
  const auto n = m.structure.rows();
  const Mat sr = m.structure.real(), si = m.structure.imag();
  Mat eq(2 * n, 2 * n);
  eq << sr - Mat::Identity(n, n), si, si, -sr - Mat::Identity(n, n);
  const Mat basis = null_space(eq);
  if (basis.cols() != n) throw std::runtime_error("real structure has the wrong number of real points");
  MatrixModule out{std::move(g), {}, std::move(name)};
  for (const auto& x : m.action) out.action.push_back(basis.transpose() * realify(x) * basis);
  return out;
}

} // namespace minorb::oracle

#endif // MINORB_ORACLE_MODULE_HPP
