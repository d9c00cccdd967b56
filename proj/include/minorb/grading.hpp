#ifndef MINORB_GRADING_HPP
#define MINORB_GRADING_HPP

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorb/rootsystem.hpp"
#include "minorb/satake.hpp"

namespace minorb {

/// Z-grading of a (semi)simple Lie algebra given by a set of crossed simple roots.
/// The grading element pairs to 1 with crossed simple roots and 0 with the others.
class ZGrading {
public:
  ZGrading(RootSystem rs, std::set<int> crossed) : rs_(std::move(rs)), crossed_(std::move(crossed))
  {
    if (crossed_.empty()) throw std::invalid_argument("grading needs at least one crossed node");
    for (int i : crossed_)
      if (i < 0 || i >= rs_.rank())
        throw std::invalid_argument("crossed node " + std::to_string(i + 1) + " out of range");
    // theta(mu) = sum_j f_j mu_j / scale, with f_j = scale * sum_{i crossed} (A^-1)_ij.
    std::vector<Rational> f(rs_.rank(), Rational(0));
    for (int i : crossed_)
      for (int j = 0; j < rs_.rank(); ++j) f[j] += rs_.inverse_cartan()[i][j];
    scale_ = 1;
    for (const auto& q : f) scale_ = std::lcm(scale_, q.denominator());
    for (const auto& q : f) functional_.push_back(q.numerator() * (scale_ / q.denominator()));
    for (const auto& a : rs_.positive_roots()) {
      int t = 0;
      for (int i : crossed_) t += a.root[i];
      depth_ = std::max(depth_, t);
    }
  }

  const RootSystem& root_system() const { return rs_; }
  const std::set<int>& crossed() const { return crossed_; }
  /// Largest eigenvalue of ad(Z): the grading is g_{-k} + ... + g_k.
  int depth() const { return depth_; }

  /// Eigenvalue of Z on the weight space of mu, as scale() * theta.
  std::int64_t scaled_eigenvalue(const Weight& mu) const
  {
    std::int64_t s = 0;
    for (int j = 0; j < rs_.rank(); ++j) s += functional_[j] * mu[j];
    return s;
  }
  std::int64_t scale() const { return scale_; }

  Rational eigenvalue(const Weight& mu) const { return Rational(scaled_eigenvalue(mu), scale_); }

  /// Eigenvalue on a root given in simple-root coordinates.
  int root_degree(const std::vector<int>& root) const
  {
    int t = 0;
    for (int i : crossed_) t += root[i];
    return t;
  }

private:
  RootSystem rs_;
  std::set<int> crossed_;
  std::vector<std::int64_t> functional_;
  std::int64_t scale_ = 1;
  int depth_ = 0;
};

inline Rational grading_element_eigenvalue(const ZGrading& g, const Weight& mu) { return g.eigenvalue(mu); }

struct EigenDecomposition {
  std::map<Rational, std::int64_t> levels;
  Rational theta_max{0}, theta_min{0};

  std::int64_t top_dim() const { return levels.empty() ? 0 : levels.rbegin()->second; }
  std::int64_t dimension() const
  {
    std::int64_t s = 0;
    for (const auto& [t, m] : levels) s += m;
    return s;
  }
};

inline std::string to_string(const EigenDecomposition& e)
{
  std::string out;
  for (auto it = e.levels.rbegin(); it != e.levels.rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += "(" + to_string(it->first) + ", " + std::to_string(it->second) + ")";
  }
  return "[" + out + "]";
}

/// Dimensions of the Z-eigenspaces of V(lambda).
inline EigenDecomposition eigenspace_dims(const ZGrading& g, const Weight& lambda)
{
  const auto& rs = g.root_system();
  const auto dom = dominant_multiplicities(rs, lambda);
  std::map<std::int64_t, std::int64_t> scaled;
  for (const auto& [mu, m] : dom.entries)
    for (const auto& w : weyl_orbit(rs, mu)) scaled[g.scaled_eigenvalue(w)] += m;
  EigenDecomposition e;
  for (const auto& [t, m] : scaled) e.levels.emplace(Rational(t, g.scale()), m);
  e.theta_min = e.levels.begin()->first;
  e.theta_max = e.levels.rbegin()->first;
  return e;
}

inline EigenDecomposition eigenspace_dims(const RootSystem& rs, const Weight& lambda, const std::set<int>& crossed)
{
  return eigenspace_dims(ZGrading(rs, crossed), lambda);
}

/// The Levi factor of the grading: the sub-root-system on uncrossed nodes, with
/// lambda restricted to those nodes.
struct LeviRestriction {
  std::vector<int> nodes;
  RootSystem levi;
  Weight weight;
};

inline LeviRestriction levi_restriction(const RootSystem& rs, const Weight& lambda, const std::set<int>& crossed)
{
  std::vector<int> nodes;
  std::vector<int> w;
  for (int i = 0; i < rs.rank(); ++i)
    if (!crossed.count(i)) {
      nodes.push_back(i);
      w.push_back(lambda[i]);
    }
  return {nodes, RootSystem(submatrix(rs.cartan(), nodes)), Weight(w)};
}

struct TopLevelReport {
  Rational theta_max{0};
  std::int64_t top_dim = 0;
  Natural levi_dim = 0;
  std::vector<SimpleType> levi_types;
  Weight levi_weight;
  bool ok() const { return Natural(top_dim) == levi_dim; }
};

/// Compares dim of the top eigenspace with the Weyl dimension of the Levi module.
inline TopLevelReport top_level_check(const RootSystem& rs, const Weight& lambda, const std::set<int>& crossed)
{
  const auto e = eigenspace_dims(rs, lambda, crossed);
  const auto levi = levi_restriction(rs, lambda, crossed);
  return {e.theta_max, e.top_dim(), weyl_dim(levi.levi, levi.weight), levi.levi.types(), levi.weight};
}

/// All white nodes: the crossing giving the minimal parabolic.
inline std::set<int> minimal_parabolic_crossing(const SatakeDiagram& d)
{
  if (is_compact(d)) throw std::invalid_argument("compact real form has no proper parabolic subalgebra");
  const auto w = white_nodes(d);
  return {w.begin(), w.end()};
}

/// Dimension of the projective orbit of the highest weight line for a split real
/// form: the number of positive roots not orthogonal to lambda.
inline int split_minimal_orbit_dim(const SatakeDiagram& d, const Weight& lambda)
{
  if (!is_split(d)) throw std::invalid_argument("orbit dimension formula applies to split real forms only");
  const RootSystem rs(d.cartan());
  require_dominant(rs, lambda);
  if (lambda.is_zero()) throw std::invalid_argument("trivial module has no projective orbit");
  int n = 0;
  for (const auto& a : rs.positive_roots()) n += rs.coroot_pairing(lambda, a) != 0;
  return n;
}

} // namespace minorb

#endif // MINORB_GRADING_HPP
