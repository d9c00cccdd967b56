#ifndef MINORB_SATAKE_HPP
#define MINORB_SATAKE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minorb/rootsystem.hpp"

namespace minorb {

enum class NodeColor { white, black };

/// Satake diagram of a real semisimple Lie algebra. Nodes of all components are
/// numbered globally (0-based, components concatenated in input order); each
/// component is a connected Dynkin diagram in Bourbaki numbering.
struct SatakeDiagram {
  std::vector<SimpleType> components;
  std::vector<NodeColor> colors;
  /// Arrow pairs (i, j), i < j, sorted.
  std::vector<std::pair<int, int>> arrows;

  int node_count() const { return static_cast<int>(colors.size()); }

  int offset(int component) const
  {
    int off = 0;
    for (int c = 0; c < component; ++c) off += components[c].rank;
    return off;
  }

  /// (component, 0-based local index) of a global node.
  std::pair<int, int> locate(int node) const
  {
    int off = 0;
    for (int c = 0; c < static_cast<int>(components.size()); ++c) {
      if (node < off + components[c].rank) return {c, node - off};
      off += components[c].rank;
    }
    throw std::out_of_range("node " + std::to_string(node + 1) + " out of range");
  }

  bool is_white(int node) const { return colors[node] == NodeColor::white; }
  bool is_black(int node) const { return colors[node] == NodeColor::black; }

  CartanMatrix cartan() const { return cartan_matrix(components); }

  /// Arrow partner of a node, or -1.
  int partner(int node) const
  {
    for (auto [a, b] : arrows) {
      if (a == node) return b;
      if (b == node) return a;
    }
    return -1;
  }

  friend bool operator==(const SatakeDiagram&, const SatakeDiagram&) = default;
};

/// Satake diagram with highest-weight coefficients (fundamental-weight basis).
struct DecoratedSatakeDiagram {
  SatakeDiagram diagram;
  std::vector<int> coefficients;

  Weight weight() const { return Weight(coefficients); }
  friend bool operator==(const DecoratedSatakeDiagram&, const DecoratedSatakeDiagram&) = default;
};

inline SatakeDiagram make_diagram(std::vector<SimpleType> components, const std::set<int>& black = {},
                                  std::vector<std::pair<int, int>> arrows = {})
{
  SatakeDiagram d;
  d.components = std::move(components);
  int n = 0;
  for (auto t : d.components) n += t.rank;
  d.colors.assign(n, NodeColor::white);
  for (int b : black) d.colors.at(b) = NodeColor::black;
  for (auto& [a, b] : arrows)
    if (a > b) std::swap(a, b);
  std::sort(arrows.begin(), arrows.end());
  d.arrows = std::move(arrows);
  return d;
}

struct Edge {
  int a = 0, b = 0;
  int multiplicity = 1;
  /// Node carrying the longer root of a multiple bond, -1 for simple bonds.
  int longer = -1;
};

inline std::vector<Edge> edges(const SatakeDiagram& d)
{
  const auto a = d.cartan();
  std::vector<Edge> out;
  for (int i = 0; i < d.node_count(); ++i)
    for (int j = i + 1; j < d.node_count(); ++j) {
      if (a[i][j] == 0) continue;
      const int m = a[i][j] * a[j][i];
      Edge e{i, j, m, -1};
      // a_ij = <alpha_i^vee, alpha_j>: |a_ij| > 1 means alpha_j is the longer root.
      if (m > 1) e.longer = a[i][j] < a[j][i] ? j : i;
      out.push_back(e);
    }
  return out;
}

inline bool is_compact(const SatakeDiagram& d)
{
  return d.arrows.empty() &&
         std::all_of(d.colors.begin(), d.colors.end(), [](NodeColor c) { return c == NodeColor::black; });
}

inline bool is_split(const SatakeDiagram& d)
{
  return d.arrows.empty() &&
         std::all_of(d.colors.begin(), d.colors.end(), [](NodeColor c) { return c == NodeColor::white; });
}

/// A permutation of the nodes preserving the Cartan matrix and the colors that
/// restricts to the arrow pairing on white nodes (fixing unpaired white nodes).
inline std::optional<std::vector<int>> compatible_automorphism(const SatakeDiagram& d)
{
  const int n = d.node_count();
  const auto a = d.cartan();
  std::vector<int> target(n, -1);
  for (int i = 0; i < n; ++i)
    if (d.is_white(i)) {
      const int p = d.partner(i);
      target[i] = p < 0 ? i : p;
    }
  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (target[i] >= 0) order.push_back(i);
  for (int i = 0; i < n; ++i)
    if (target[i] < 0) order.push_back(i);

  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t pos) {
    if (pos == order.size()) return true;
    const int i = order[pos];
    std::vector<int> cands;
    if (target[i] >= 0) {
      cands.push_back(target[i]);
    } else {
      for (int j = 0; j < n; ++j)
        if (d.is_black(j)) cands.push_back(j);
    }
    for (int j : cands) {
      if (used[j]) continue;
      bool ok = a[i][i] == a[j][j];
      for (std::size_t q = 0; q < pos && ok; ++q) {
        const int k = order[q];
        ok = a[i][k] == a[j][perm[k]] && a[k][i] == a[perm[k]][j];
      }
      if (!ok) continue;
      perm[i] = j;
      used[j] = 1;
      if (place(pos + 1)) return true;
      used[j] = 0;
      perm[i] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return perm;
}

/// All invariant violations of a Satake diagram; empty means valid.
inline std::vector<std::string> validate(const SatakeDiagram& d)
{
  std::vector<std::string> v;
  int total = 0;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    if (auto r = rank_violation(d.components[c]))
      v.push_back("component " + std::to_string(c + 1) + ": " + *r);
    total += d.components[c].rank;
  }
  if (d.components.empty()) v.push_back("diagram has no components");
  if (total != d.node_count()) {
    v.push_back("color count " + std::to_string(d.node_count()) + " does not match node count " +
                std::to_string(total));
    return v;
  }
  if (!v.empty()) return v;

  std::map<int, int> seen;
  bool structural = false;
  for (auto [a, b] : d.arrows) {
    const std::string label = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
    if (a < 0 || b < 0 || a >= d.node_count() || b >= d.node_count()) {
      v.push_back("arrow " + label + " references a node out of range");
      structural = true;
      continue;
    }
    if (a == b) {
      v.push_back("arrow not between distinct nodes: " + label);
      structural = true;
      continue;
    }
    for (int x : {a, b}) {
      if (!d.is_black(x)) continue;
      const int c = d.locate(x).first;
      const int off = d.offset(c);
      bool all_black = true;
      for (int k = off; k < off + d.components[c].rank; ++k) all_black = all_black && d.is_black(k);
      v.push_back(all_black ? "arrows on black component " + std::to_string(c + 1) + ": " + label
                            : "arrow endpoint " + std::to_string(x + 1) + " is black: " + label);
      structural = true;
    }
    for (int x : {a, b})
      if (++seen[x] > 1) {
        v.push_back("arrow pairing is not an involution at node " + std::to_string(x + 1));
        structural = true;
      }
  }
  if (!structural && !compatible_automorphism(d))
    v.push_back("arrow pairing is not induced by a color-preserving diagram automorphism");
  return v;
}

struct DecorationCheck {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

/// Checks coefficient count and sign, non-triviality, and equality across arrows.
/// Unequal arrow-paired coefficients describe a module of complex type; they are
/// errors unless `allow_complex_type` downgrades them to warnings.
inline DecorationCheck validate_decoration(const DecoratedSatakeDiagram& dd, bool allow_complex_type = false)
{
  DecorationCheck out;
  for (auto& s : validate(dd.diagram)) out.errors.push_back(std::move(s));
  const auto& d = dd.diagram;
  if (static_cast<int>(dd.coefficients.size()) != d.node_count()) {
    out.errors.push_back("coefficient count ≠ rank (" + std::to_string(dd.coefficients.size()) + " vs " +
                         std::to_string(d.node_count()) + ")");
    return out;
  }
  for (int i = 0; i < d.node_count(); ++i)
    if (dd.coefficients[i] < 0)
      out.errors.push_back("coefficient at node " + std::to_string(i + 1) + " is negative");
  if (std::all_of(dd.coefficients.begin(), dd.coefficients.end(), [](int c) { return c == 0; }))
    out.errors.push_back("trivial decoration: all coefficients are zero");
  for (auto [a, b] : d.arrows) {
    if (a < 0 || b < 0 || a >= d.node_count() || b >= d.node_count()) continue;
    if (dd.coefficients[a] == dd.coefficients[b]) continue;
    std::string msg = "unequal coefficients on arrow-paired nodes " + std::to_string(a + 1) + " and " +
                      std::to_string(b + 1) + " (" + std::to_string(dd.coefficients[a]) + " vs " +
                      std::to_string(dd.coefficients[b]) + "): module of complex type";
    (allow_complex_type ? out.warnings : out.errors).push_back(std::move(msg));
  }
  return out;
}

/// A diagram carved out of a parent, with provenance: nodes[k] is the parent's
/// global index of the sub-diagram's node k.
struct SubDiagram {
  SatakeDiagram diagram;
  std::vector<int> nodes;
};

/// The sub-diagram induced on `nodes`: connected pieces are re-identified as
/// simple types (canonical B2/A3 forms) and renumbered in Bourbaki order, ordered
/// by their smallest parent node. Arrows with both ends inside are kept.
inline SubDiagram induced_subdiagram(const SatakeDiagram& d, std::vector<int> nodes)
{
  std::sort(nodes.begin(), nodes.end());
  const auto a = d.cartan();
  SubDiagram out;
  for (const auto& comp : graph_components(a, nodes)) {
    auto rc = recognize_component(a, comp);
    out.diagram.components.push_back(rc.type);
    for (int v : rc.nodes) {
      out.nodes.push_back(v);
      out.diagram.colors.push_back(d.colors[v]);
    }
  }
  std::map<int, int> local;
  for (std::size_t k = 0; k < out.nodes.size(); ++k) local[out.nodes[k]] = static_cast<int>(k);
  for (auto [x, y] : d.arrows) {
    if (!local.count(x) || !local.count(y)) continue;
    int p = local[x], q = local[y];
    if (p > q) std::swap(p, q);
    out.diagram.arrows.emplace_back(p, q);
  }
  std::sort(out.diagram.arrows.begin(), out.diagram.arrows.end());
  return out;
}

/// Connected components of the diagram, keeping components linked by arrows
/// together as one unit. Component types and numbering are preserved.
inline std::vector<SubDiagram> connected_components(const SatakeDiagram& d)
{
  const int nc = static_cast<int>(d.components.size());
  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int c) { return parent[c] == c ? c : parent[c] = root(parent[c]); };
  for (auto [a, b] : d.arrows) {
    const int ca = root(d.locate(a).first), cb = root(d.locate(b).first);
    if (ca != cb) parent[std::max(ca, cb)] = std::min(ca, cb);
  }
  std::map<int, std::vector<int>> units;
  for (int c = 0; c < nc; ++c) units[root(c)].push_back(c);
  std::vector<SubDiagram> out;
  for (const auto& [r, comps] : units) {
    SubDiagram s;
    std::map<int, int> local;
    for (int c : comps) {
      s.diagram.components.push_back(d.components[c]);
      for (int k = 0; k < d.components[c].rank; ++k) {
        const int g = d.offset(c) + k;
        local[g] = static_cast<int>(s.nodes.size());
        s.nodes.push_back(g);
        s.diagram.colors.push_back(d.colors[g]);
      }
    }
    for (auto [a, b] : d.arrows)
      if (local.count(a) && local.count(b)) s.diagram.arrows.emplace_back(local[a], local[b]);
    std::sort(s.diagram.arrows.begin(), s.diagram.arrows.end());
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<int> white_nodes(const SatakeDiagram& d)
{
  std::vector<int> w;
  for (int i = 0; i < d.node_count(); ++i)
    if (d.is_white(i)) w.push_back(i);
  return w;
}

} // namespace minorb

#endif // MINORB_SATAKE_HPP
