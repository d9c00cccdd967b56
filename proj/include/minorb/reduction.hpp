#ifndef MINORB_REDUCTION_HPP
#define MINORB_REDUCTION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorb/catalog.hpp"
#include "minorb/rootsystem.hpp"
#include "minorb/satake.hpp"

namespace minorb {

/// Input rejected before reduction; carries every violation found.
class InputError : public std::invalid_argument {
public:
  explicit InputError(std::vector<std::string> problems)
      : std::invalid_argument(join(problems, "; ")), problems_(std::move(problems))
  {
  }
  const std::vector<std::string>& problems() const { return problems_; }

private:
  std::vector<std::string> problems_;
};

/// White nodes that are decorated, or adjacent to a maximal all-black connected
/// subdiagram carrying a nonzero coefficient.
inline std::set<int> cross_nodes(const DecoratedSatakeDiagram& dd)
{
  const auto& d = dd.diagram;
  const auto a = d.cartan();
  std::vector<int> black;
  for (int i = 0; i < d.node_count(); ++i)
    if (d.is_black(i)) black.push_back(i);
  std::vector<char> hot(d.node_count(), 0);
  for (const auto& comp : graph_components(a, black)) {
    bool decorated = false;
    for (int v : comp) decorated = decorated || dd.coefficients[v] != 0;
    if (decorated)
      for (int v : comp) hot[v] = 1;
  }
  std::set<int> crossed;
  for (int i = 0; i < d.node_count(); ++i) {
    if (!d.is_white(i)) continue;
    bool cross = dd.coefficients[i] != 0;
    for (int j = 0; j < d.node_count() && !cross; ++j) cross = j != i && a[i][j] != 0 && hot[j];
    if (cross) crossed.insert(i);
  }
  return crossed;
}

/// A compact simple factor of K with its highest weight on W.
struct KeptFactor {
  SubDiagram component;
  std::vector<int> coefficients;
  SimpleType type() const { return component.diagram.components.front(); }
  Weight weight() const { return Weight(coefficients); }
  Natural dim;
  Reality reality = Reality::real;
};

struct KFactorSummary {
  SimpleType type;
  Weight weight;
  friend bool operator==(const KFactorSummary&, const KFactorSummary&) = default;
  friend auto operator<=>(const KFactorSummary&, const KFactorSummary&) = default;
};

inline std::string to_string(const KFactorSummary& k) { return to_string(k.type) + to_string(k.weight); }

struct ReductionResult {
  DecoratedSatakeDiagram input;
  std::set<int> crossed;
  std::vector<KeptFactor> kept;
  std::vector<SubDiagram> discarded;
  std::vector<KFactorSummary> k_summary;
  Natural w_dim_complex = 1;
  Natural w_dim_real = 1;
  Reality w_reality = Reality::real;
  std::vector<std::string> notices;

  bool k_trivial() const { return kept.empty(); }
};

/// Removes the crossed nodes and splits the remainder into K (decorated pieces)
/// and pieces acting trivially. Throws InputError on invalid decorations.
inline ReductionResult reduce(const DecoratedSatakeDiagram& dd, bool allow_complex_type = false)
{
  auto check = validate_decoration(dd, allow_complex_type);
  if (!check.ok()) throw InputError(check.errors);

  ReductionResult r;
  r.input = dd;
  r.notices = check.warnings;
  const auto& d = dd.diagram;
  if (is_compact(d)) r.notices.push_back("compact input: the reduction is the identity (K = G, W = V)");
  r.crossed = cross_nodes(dd);

  std::vector<int> rest;
  for (int i = 0; i < d.node_count(); ++i)
    if (!r.crossed.count(i)) rest.push_back(i);
  const auto sub = induced_subdiagram(d, rest);
  int pos = 0;
  for (const auto& type : sub.diagram.components) {
    SubDiagram piece;
    std::vector<int> coeffs;
    piece.diagram.components = {type};
    for (int k = 0; k < type.rank; ++k, ++pos) {
      const int g = sub.nodes[pos];
      piece.nodes.push_back(g);
      piece.diagram.colors.push_back(d.colors[g]);
      coeffs.push_back(dd.coefficients[g]);
    }
    for (auto [x, y] : d.arrows) {
      auto ix = std::find(piece.nodes.begin(), piece.nodes.end(), x);
      auto iy = std::find(piece.nodes.begin(), piece.nodes.end(), y);
      if (ix != piece.nodes.end() && iy != piece.nodes.end())
        piece.diagram.arrows.emplace_back(std::minmax(int(ix - piece.nodes.begin()), int(iy - piece.nodes.begin())));
    }
    const bool decorated = std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c != 0; });
    if (!decorated) {
      r.discarded.push_back(std::move(piece));
      continue;
    }
    if (!is_compact(piece.diagram))
      throw std::logic_error("crossing rule left a decorated piece with white nodes at node " +
                             std::to_string(piece.nodes.front() + 1));
    KeptFactor f{std::move(piece), std::move(coeffs), 0, Reality::real};
    const auto rs = RootSystem::of(f.type());
    f.dim = weyl_dim(rs, f.weight());
    f.reality = frobenius_schur(rs, f.weight());
    r.kept.push_back(std::move(f));
  }

  for (std::size_t i = 0; i < r.kept.size(); ++i) {
    const auto& f = r.kept[i];
    r.k_summary.push_back({f.type(), f.weight()});
    r.w_dim_complex *= f.dim;
    r.w_reality = i == 0 ? f.reality : combine(r.w_reality, f.reality);
  }
  r.w_dim_real = r.w_dim_complex * (r.w_reality == Reality::real ? 1 : 2);
  return r;
}

enum class Verdict { unique, unknown };

inline std::string to_string(Verdict v) { return v == Verdict::unique ? "unique" : "unknown"; }

struct UniquenessVerdict {
  Verdict verdict = Verdict::unknown;
  std::string reason;
};

namespace detail {

inline bool is_fundamental(const Weight& w, int node)
{
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (w[i] != (i == node ? 1 : 0)) return false;
  return true;
}

/// Name of K acting sphere-transitively through this single factor, if it does.
inline std::optional<std::string> sphere_transitive_simple(const KFactorSummary& k)
{
  const int n = k.type.rank;
  const auto& w = k.weight;
  switch (k.type.family) {
    case Family::A:
      if (n == 1 && w[0] == 2) return "(SO(3), standard)";
      if (n == 3 && is_fundamental(w, 1)) return "(SO(6), standard)";
      if (is_fundamental(w, 0) || is_fundamental(w, n - 1)) return "(SU(" + std::to_string(n + 1) + "), standard)";
      break;
    case Family::B:
      if (is_fundamental(w, 0)) return "(SO(" + std::to_string(2 * n + 1) + "), standard)";
      if (n == 2 && is_fundamental(w, 1)) return "(Sp(2), standard)";
      if (n == 3 && is_fundamental(w, 2)) return "(Spin(7), spin)";
      if (n == 4 && is_fundamental(w, 3)) return "(Spin(9), spin)";
      break;
    case Family::C:
      if (is_fundamental(w, 0)) return "(Sp(" + std::to_string(n) + "), standard)";
      if (n == 2 && is_fundamental(w, 1)) return "(SO(5), standard)";
      break;
    case Family::D:
      if (is_fundamental(w, 0)) return "(SO(" + std::to_string(2 * n) + "), standard)";
      if (n == 3 && (is_fundamental(w, 1) || is_fundamental(w, 2))) return "(SU(4), standard)";
      break;
    default:
      break;
  }
  return std::nullopt;
}

/// Quaternionic rank of K's factor if it is Sp(m) on H^m.
inline std::optional<int> quaternionic_standard(const KFactorSummary& k)
{
  if (k.type.family == Family::C && is_fundamental(k.weight, 0)) return k.type.rank;
  if (k.type == SimpleType{Family::B, 2} && is_fundamental(k.weight, 1)) return 2;
  if (k.type == SimpleType{Family::A, 1} && is_fundamental(k.weight, 0)) return 1;
  return std::nullopt;
}

} // namespace detail

/// Unique when K is trivial or (K, W) is a sphere-transitive pair; unknown otherwise.
inline UniquenessVerdict unique_closed_orbit(const ReductionResult& r)
{
  const auto& ks = r.k_summary;
  if (ks.empty()) return {Verdict::unique, "K trivial"};
  if (ks.size() == 1)
    if (auto name = detail::sphere_transitive_simple(ks[0]))
      return {Verdict::unique, "sphere-transitive pair " + *name};
  if (ks.size() == 2) {
    const bool sp1_first = ks[0].type == SimpleType{Family::A, 1} && detail::is_fundamental(ks[0].weight, 0);
    const bool sp1_second = ks[1].type == SimpleType{Family::A, 1} && detail::is_fundamental(ks[1].weight, 0);
    std::optional<int> m;
    if (sp1_second) m = detail::quaternionic_standard(ks[0]);
    if (!m && sp1_first) m = detail::quaternionic_standard(ks[1]);
    if (m) return {Verdict::unique, "sphere-transitive pair (Sp(" + std::to_string(*m) + ")Sp(1), H^" + std::to_string(*m) + ")"};
  }
  return {Verdict::unknown, "(K, W) is not in the sphere-transitive list"};
}

/// A parametrized decorated diagram.
struct NamedFamily {
  std::string name;
  std::string description;
  int min_parameter;
  std::function<DecoratedSatakeDiagram(int)> build;
};

namespace detail {

inline DecoratedSatakeDiagram quaternionic_family(int n, std::vector<int> sp1, int a_first, int a_second, int a_last)
{
  if (n < 2) throw std::invalid_argument("parameter n = " + std::to_string(n) + " must be at least 2");
  auto d = real_form_diagram("sp(1) + sl(" + std::to_string(n) + ",H)");
  std::vector<int> w = std::move(sp1);
  std::vector<int> tail(2 * n - 1, 0);
  tail[0] += a_first;
  tail[1] += a_second;
  tail[2 * n - 2] += a_last;
  w.insert(w.end(), tail.begin(), tail.end());
  return {std::move(d), std::move(w)};
}

} // namespace detail

/// Decoration of so(p,q) by the exterior power Lambda^k of the vector module.
inline DecoratedSatakeDiagram orthogonal_wedge(int p, int q, int k)
{
  auto d = real_form_diagram("so(" + std::to_string(p) + "," + std::to_string(q) + ")");
  const auto rs = RootSystem(d.cartan());
  auto w = wedge_power_highest_weight(rs, vector_module_weight(p + q), k);
  return {std::move(d), w.coords};
}

inline const std::vector<NamedFamily>& named_families()
{
  static const std::vector<NamedFamily> families = {
      {"sp1-slnH-torsion", "Sp(1)SL(n,H), A1 w=[3] + A_{2n-1} with 1 at nodes 2 and 2n-1", 2,
       [](int n) { return detail::quaternionic_family(n, {3}, 0, 1, 1); }},
      {"sp1-slnH-curvature", "Sp(1)SL(n,H), A1 w=[0] + A_{2n-1} with 3 at node 1 and 1 at node 2n-1", 2,
       [](int n) { return detail::quaternionic_family(n, {0}, 3, 0, 1); }},
      {"so-p-p3-wedge", "SO(p,p+3) on the (p+1)-th exterior power of the vector module", 1,
       [](int p) {
         if (p < 1) throw std::invalid_argument("parameter p = " + std::to_string(p) + " must be at least 1");
         return orthogonal_wedge(p, p + 3, p + 1);
       }},
      {"sl-n-R-adjoint", "SL(n,R) on its adjoint module", 2,
       [](int n) {
         if (n < 2) throw std::invalid_argument("parameter n = " + std::to_string(n) + " must be at least 2");
         auto d = real_form_diagram("sl(" + std::to_string(n) + ",R)");
         std::vector<int> w(n - 1, 0);
         w.front() += 1;
         w.back() += 1;
         return DecoratedSatakeDiagram{std::move(d), std::move(w)};
       }},
  };
  return families;
}

inline const NamedFamily& find_family(const std::string& name)
{
  for (const auto& f : named_families())
    if (f.name == name) return f;
  std::vector<std::string> names;
  for (const auto& f : named_families()) names.push_back(f.name);
  throw std::invalid_argument("unknown family '" + name + "' (known: " + join(names, ", ") + ")");
}

struct FamilyResult {
  std::string family;
  std::vector<int> parameters;
  std::vector<ReductionResult> results;
  /// Whether the sorted (K, W) summary is the same for every parameter.
  bool stable = true;
};

inline FamilyResult family_reduce(const NamedFamily& family, int first, int last)
{
  if (first > last) throw std::invalid_argument("empty parameter range");
  FamilyResult out{family.name, {}, {}, true};
  std::optional<std::vector<KFactorSummary>> reference;
  for (int n = first; n <= last; ++n) {
    auto dd = family.build(n);
    if (auto v = validate(dd.diagram); !v.empty())
      throw std::invalid_argument("parameter " + std::to_string(n) + " gives an invalid diagram: " + v.front());
    out.parameters.push_back(n);
    out.results.push_back(reduce(dd));
    auto summary = out.results.back().k_summary;
    std::sort(summary.begin(), summary.end());
    if (!reference) reference = summary;
    out.stable = out.stable && summary == *reference;
  }
  return out;
}

inline FamilyResult family_reduce(const std::string& name, int first, int last)
{
  return family_reduce(find_family(name), first, last);
}

} // namespace minorb

#endif // MINORB_REDUCTION_HPP
