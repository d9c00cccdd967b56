#ifndef MINORB_ORACLE_CASES_HPP
#define MINORB_ORACLE_CASES_HPP

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "minorb/grading.hpp"
#include "minorb/oracle/graded.hpp"
#include "minorb/reduction.hpp"

namespace minorb::oracle {

enum class Representative { top_vector, null_plane, sampled_top };

/// A named desk-scale example: a real form, a module built from matrices, and
/// the decorated diagram describing the same module.
struct OracleCase {
  std::string name;
  std::string description;
  std::string form;
  DecoratedSatakeDiagram decoration;
  std::function<MatrixModule(std::shared_ptr<const MatrixLieAlgebra>)> module;
  Representative representative = Representative::top_vector;
};

namespace detail {

inline ComplexModule complex_block(const MatrixLieAlgebra& g, Eigen::Index offset, Eigen::Index size, const CMat& structure)
{
  ComplexModule m;
  for (const auto& x : g.basis) m.action.push_back(complexify(x.block(offset, offset, size, size)));
  m.structure = structure;
  return m;
}

/// Real form of Sym^3(C^2) x Lambda^2(C^4) x Lambda^3(C^4) cut down to the
/// irreducible piece through the top grading level, for sp(1) + sl(2,H).
inline MatrixModule quaternionic_desk_module(std::shared_ptr<const MatrixLieAlgebra> g)
{
  const auto c2 = complex_block(*g, 0, 4, quaternionic_structure(1));
  const auto c4 = complex_block(*g, 4, 8, quaternionic_structure(2));
  const auto full = tensor(tensor(power(c2, 3, Power::symmetric), power(c4, 2, Power::exterior)), power(c4, 3, Power::exterior));
  const Vec zc = g->coordinates(grading_element("sp(1) + sl(2,H)", {2}));
  CMat z = CMat::Zero(full.structure.rows(), full.structure.cols());
  for (int j = 0; j < g->dim(); ++j) z += zc(j) * full.action[j];
  const auto top = real_eigenspaces(z).back().basis;
  const auto piece = restrict(full, cyclic_span(full.action, top));
  return real_points(piece, std::move(g), "real form of sym3(C2) x wedge2(C4) x wedge3(C4), top component");
}

inline DecoratedSatakeDiagram decorated(const std::string& form, std::vector<int> w) { return {real_form_diagram(form), std::move(w)}; }

} // namespace detail

inline const std::vector<OracleCase>& oracle_cases()
{
  static const std::vector<OracleCase> cases = [] {
    std::vector<OracleCase> out;
    for (int m = 1; m <= 4; ++m)
      out.push_back({"sl2-sym" + std::to_string(m), "sl(2,R) on Sym^" + std::to_string(m) + " R^2", "sl(2,R)",
                     detail::decorated("sl(2,R)", {m}),
                     [m](auto g) { return sym(standard_module(g), m); }});
    out.push_back({"sl3-std", "sl(3,R) on R^3", "sl(3,R)", detail::decorated("sl(3,R)", {1, 0}),
                   [](auto g) { return standard_module(g); }});
    out.push_back({"sl3-adj", "sl(3,R) on itself", "sl(3,R)", detail::decorated("sl(3,R)", {1, 1}),
                   [](auto g) { return adjoint_module(g); }});
    out.push_back({"so12-wedge2", "so(1,2) on Lambda^2 R^3", "so(1,2)", orthogonal_wedge(1, 2, 2),
                   [](auto g) { return wedge(standard_module(g), 2); }, Representative::null_plane});
    out.push_back({"so14-wedge2", "so(1,4) on Lambda^2 R^5", "so(1,4)", orthogonal_wedge(1, 4, 2),
                   [](auto g) { return wedge(standard_module(g), 2); }, Representative::null_plane});
    out.push_back({"sl2H-ex210", "sp(1) + sl(2,H) on Sym^3 C^2 x V(0,1,1), real form", "sp(1) + sl(2,H)",
                   find_family("sp1-slnH-torsion").build(2), detail::quaternionic_desk_module, Representative::sampled_top});
    return out;
  }();
  return cases;
}

inline const OracleCase& find_case(const std::string& name)
{
  for (const auto& c : oracle_cases())
    if (c.name == name) return c;
  std::vector<std::string> names;
  for (const auto& c : oracle_cases()) names.push_back(c.name);
  throw std::invalid_argument("unknown oracle case '" + name + "' (known: " + join(names, ", ") + ")");
}

/// Everything built for one case.
struct CaseRealization {
  const OracleCase* spec = nullptr;
  std::shared_ptr<const MatrixLieAlgebra> algebra;
  ReductionResult reduction;
  GradedRealization graded;
  Mat frame;  // columns: the working basis in the constructed one
};

inline std::uint64_t fnv1a(const std::string& s)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::mt19937_64 case_rng(std::uint64_t seed, const std::string& name) { return std::mt19937_64(seed ^ fnv1a(name)); }

inline Vec random_vector(Eigen::Index n, std::mt19937_64& rng)
{
  std::normal_distribution<double> n01;
  return Vec::NullaryExpr(n, [&]() { return n01(rng); });
}

/// Haar-random orthogonal matrix.
inline Mat random_orthogonal(Eigen::Index n, std::mt19937_64& rng)
{
  Mat a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) a.col(j) = random_vector(n, rng);
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  const Vec d = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < n; ++j)
    if (d(j) < 0) q.col(j) = -q.col(j);
  return q;
}

/// The module in a seeded random orthonormal basis, so no check relies on the
/// constructed basis being adapted to the weights. Seed 0 keeps the constructed basis.
inline CaseRealization realize(const OracleCase& c, std::uint64_t seed = 20240611)
{
  CaseRealization r;
  r.spec = &c;
  r.algebra = share(build_algebra(c.form));
  r.reduction = reduce(c.decoration);
  MatrixModule m = c.module(r.algebra);
  r.frame = Mat::Identity(m.dim(), m.dim());
  if (seed != 0) {
    auto rng = case_rng(seed, c.name + "/frame");
    r.frame = random_orthogonal(m.dim(), rng);
    for (auto& x : m.action) x = r.frame.transpose() * x * r.frame;
  }
  r.graded = make_graded(std::move(m), grading_element(c.form, r.reduction.crossed));
  return r;
}

/// A vector with no component in the top level of rho(Z).
inline Vec random_vector_without_top(const GradedRealization& g, std::mt19937_64& rng)
{
  const auto levels = module_levels(g);
  Vec v = Vec::Zero(g.z_matrix.rows());
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) v += levels[i].basis * random_vector(levels[i].basis.cols(), rng);
  return v;
}

inline Vec representative(const CaseRealization& r, std::mt19937_64& rng, int samples = 50)
{
  const Mat top = top_eigenspace(r.graded);
  switch (r.spec->representative) {
  case Representative::null_plane: {
    // u_1 ^ ... ^ u_p ^ w_1 is the first exterior basis vector.
    return r.frame.row(0).transpose();
  }
  case Representative::sampled_top: {
    Vec best;
    int best_dim = -1;
    for (int s = 0; s < samples; ++s) {
      Vec v = top * random_vector(top.cols(), rng);
      const int d = projective_orbit_dim(r.graded.module, v);
      if (best_dim < 0 || d < best_dim) {
        best = v;
        best_dim = d;
      }
    }
    return best;
  }
  default: return top.col(0);
  }
}

struct Check {
  std::string name;
  std::string value;
  bool pass = false;
};

struct CaseReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  bool pass() const
  {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

struct VerifyOptions {
  int flow_starts = 100;
  int flow_steps = 60;
  int orbit_samples = 200;
  /// Negative control: perturb the module action before checking.
  bool inject_fault = false;
};

namespace detail {

inline std::string sci(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

inline std::string vs(long long a, long long b) { return std::to_string(a) + (a == b ? " = " : " != ") + std::to_string(b); }

/// Dimensions of ad(Z) levels predicted from the root system: degree i > 0 counts
/// positive roots of that degree, degree 0 adds the rank.
inline std::map<int, long long> adjoint_levels(const SatakeDiagram& d, const std::set<int>& crossed)
{
  const RootSystem rs(d.cartan());
  std::map<int, long long> out;
  out[0] = rs.rank();
  if (crossed.empty()) {
    out[0] += 2 * static_cast<long long>(rs.positive_roots().size());
    return out;
  }
  const ZGrading z(rs, crossed);
  for (const auto& a : rs.positive_roots()) {
    const int t = z.root_degree(a.root);
    out[t] += 1;
    out[-t] += 1;
  }
  return out;
}

} // namespace detail

/// Numerical checks of the reduction's observable consequences for one case.
inline CaseReport verify_reduction(const OracleCase& c, std::uint64_t seed, const VerifyOptions& opt = {})
{
  CaseReport rep{c.name, seed, {}};
  auto add = [&](std::string name, std::string value, bool pass) { rep.checks.push_back({std::move(name), std::move(value), pass}); };
  auto rng = case_rng(seed, c.name);
  auto r = realize(c, seed);
  if (opt.inject_fault) r.graded = perturbed(r.graded, 1e-3, rng);
  const auto& g = *r.algebra;
  const auto& m = r.graded.module;
  const RootSystem rs(c.decoration.diagram.cartan());

  const long long expected_dim = rs.rank() + 2 * static_cast<long long>(rs.positive_roots().size());
  add("algebra dimension", detail::vs(g.dim(), expected_dim), g.dim() == expected_dim && basis_rank(g) == g.dim());
  const double closure = closure_residual(g);
  add("algebra closure residual", detail::sci(closure), closure < tol::residual);
  const double hom = homomorphism_residual(m);
  add("homomorphism residual", detail::sci(hom), hom < tol::residual);

  const auto alg_levels = algebra_levels(r.graded);
  std::map<int, long long> numeric_adj;
  for (const auto& l : alg_levels) numeric_adj[static_cast<int>(l.value)] = l.basis.cols();
  add("ad(Z) levels match roots", numeric_adj == detail::adjoint_levels(c.decoration.diagram, r.reduction.crossed) ? "match" : "mismatch",
      numeric_adj == detail::adjoint_levels(c.decoration.diagram, r.reduction.crossed));

  const auto levels = module_levels(r.graded);
  const auto symbolic = eigenspace_dims(rs, c.decoration.weight(), r.reduction.crossed);
  bool levels_ok = levels.size() == symbolic.levels.size();
  if (levels_ok) {
    auto it = symbolic.levels.begin();
    for (const auto& l : levels) {
      const double t = boost::rational_cast<double>(it->first);
      levels_ok = levels_ok && std::abs(l.value - t) < tol::cluster && l.basis.cols() == it->second;
      ++it;
    }
  }
  add("rho(Z) levels match weights", levels_ok ? "match" : "mismatch", levels_ok);

  const Mat top = levels.back().basis;
  const Mat kernel = joint_kernel(positive_action(r.graded));
  const double angle = max_principal_angle(kernel, top);
  add("joint kernel of positive part = top level (angle)", detail::sci(angle), angle < tol::angle);
  const auto tl = top_level_check(rs, c.decoration.weight(), r.reduction.crossed);
  add("top level dim = symbolic top level", detail::vs(top.cols(), tl.top_dim), top.cols() == tl.top_dim && tl.ok());
  add("top level dim = real dim of W", detail::vs(top.cols(), r.reduction.w_dim_real.convert_to<long long>()),
      Natural(top.cols()) == r.reduction.w_dim_real);

  const auto ga = graded_action_check(r.graded);
  add("graded action residual", detail::sci(ga.max_residual), ga.pass);
  const auto bad = graded_action_check(perturbed(r.graded, 1e-3, rng));
  add("graded action fault injection detected", detail::sci(bad.max_residual), !bad.pass);

  int flow_ok = 0, worst_steps = 0;
  for (int s = 0; s < opt.flow_starts; ++s) {
    const auto f = flow_to_top(r.graded, random_vector(m.dim(), rng), opt.flow_steps);
    if (f.pass && !f.precondition_violation) ++flow_ok;
    worst_steps = std::max(worst_steps, f.converged_at);
  }
  add("flow to top converges", std::to_string(flow_ok) + "/" + std::to_string(opt.flow_starts) + " starts, max " +
                                   std::to_string(worst_steps) + " steps",
      flow_ok == opt.flow_starts);
  const bool rejected = levels.size() > 1 && flow_to_top(r.graded, random_vector_without_top(r.graded, rng)).precondition_violation;
  add("flow rejects start without top component", rejected ? "rejected" : "accepted", rejected);

  const Vec v = representative(r, rng);
  const int rep_dim = projective_orbit_dim(m, v);
  const double rep_in_top = (v - top * (top.transpose() * v)).norm() / v.norm();
  add("representative lies in top level", detail::sci(rep_in_top), rep_in_top < tol::residual);
  int min_sampled = g.dim();
  for (int s = 0; s < opt.orbit_samples; ++s) min_sampled = std::min(min_sampled, projective_orbit_dim(m, random_vector(m.dim(), rng)));
  add("no sampled orbit smaller (evidence, " + std::to_string(opt.orbit_samples) + " samples)",
      "representative " + std::to_string(rep_dim) + ", smallest sampled " + std::to_string(min_sampled), rep_dim <= min_sampled);
  if (is_split(c.decoration.diagram)) {
    const int predicted = split_minimal_orbit_dim(c.decoration.diagram, c.decoration.weight());
    add("orbit dim at representative = split prediction", detail::vs(rep_dim, predicted), rep_dim == predicted);
    const auto fs = frobenius_schur(rs, c.decoration.weight());
    const auto form = invariant_form_symmetry(m);
    const bool agree = (fs == Reality::real && form == FormSymmetry::symmetric) ||
                       (fs == Reality::quaternionic && form == FormSymmetry::antisymmetric) ||
                       (fs == Reality::complex && form == FormSymmetry::none);
    add("invariant form matches Frobenius-Schur type", std::string(to_string(form)) + " / " + to_string(fs), agree);
  }
  return rep;
}

inline CaseReport verify_reduction(const std::string& name, std::uint64_t seed, const VerifyOptions& opt = {})
{
  return verify_reduction(find_case(name), seed, opt);
}

} // namespace minorb::oracle

#endif // MINORB_ORACLE_CASES_HPP
