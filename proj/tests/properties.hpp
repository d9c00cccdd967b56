#ifndef MINORB_TESTS_PROPERTIES_HPP
#define MINORB_TESTS_PROPERTIES_HPP

// Randomized and exhaustive property checks over rootsystem, satake, reduction
// and grading. Shared by the unit suite and the acceptance runner.

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "minorb/catalog.hpp"
#include "minorb/grading.hpp"
#include "minorb/reduction.hpp"
#include "minorb/rootsystem.hpp"
#include "minorb/satake_io.hpp"

namespace minorb::props {

struct Outcome {
  std::string name;
  bool pass = true;
  std::string detail;
  int cases = 0;
};

/// Records the first failure; later ones only bump the counter.
class Recorder {
public:
  explicit Recorder(std::string name) { out_.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& what)
  {
    ++out_.cases;
    if (ok) return;
    if (out_.pass) out_.detail = what();
    out_.pass = false;
    ++failures_;
  }
  Outcome done()
  {
    if (failures_ > 1) out_.detail += " (+" + std::to_string(failures_ - 1) + " more)";
    return out_;
  }

private:
  Outcome out_;
  int failures_ = 0;
};

inline std::vector<SimpleType> types_up_to_rank(int max_rank)
{
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

inline std::vector<Weight> box(int rank, int max_coord)
{
  std::vector<Weight> out;
  std::vector<int> c(rank, 0);
  for (;;) {
    out.emplace_back(c);
    int i = 0;
    while (i < rank && c[i] == max_coord) c[i++] = 0;
    if (i == rank) break;
    ++c[i];
  }
  return out;
}

inline int cartan_determinant(SimpleType t)
{
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return 9 - t.rank;
    default: return 1;
  }
}

inline int standard_positive_root_count(SimpleType t)
{
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

// ---- rootsystem --------------------------------------------------------------

inline Outcome rootsystem_invariants()
{
  Recorder r("rootsystem: Cartan inverse exact, det-integral; standard positive-root counts");
  for (auto t : types_up_to_rank(8)) {
    const auto rs = RootSystem::of(t);
    const int n = rs.rank();
    bool identity = true, integral = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s(0);
        for (int k = 0; k < n; ++k) s += rs.cartan()[i][k] * rs.inverse_cartan()[k][j];
        identity = identity && s == Rational(i == j ? 1 : 0);
        integral = integral && (rs.inverse_cartan()[i][j] * cartan_determinant(t)).denominator() == 1;
      }
    r.check(identity && integral, [&] { return to_string(t) + ": inverse Cartan check failed"; });
    r.check(static_cast<int>(rs.positive_roots().size()) == standard_positive_root_count(t),
            [&] { return to_string(t) + ": " + std::to_string(rs.positive_roots().size()) + " positive roots"; });
  }
  return r.done();
}

inline Outcome multiplicities_sum_to_weyl_dim()
{
  Recorder r("rootsystem: sum of multiplicities = Weyl dimension (rank <= 4, coords <= 2)");
  for (auto t : types_up_to_rank(4)) {
    const auto rs = RootSystem::of(t);
    for (const auto& lambda : box(t.rank, 2)) {
      const auto ch = dominant_multiplicities(rs, lambda);
      r.check(character_dimension(rs, ch) == weyl_dim(rs, lambda),
              [&] { return to_string(t) + to_string(lambda); });
    }
  }
  return r.done();
}

inline Outcome weight_system_reflection_invariant()
{
  Recorder r("rootsystem: weight systems invariant under simple reflections (rank <= 3, coords <= 2)");
  for (auto t : types_up_to_rank(3)) {
    const auto rs = RootSystem::of(t);
    for (const auto& lambda : box(t.rank, 2)) {
      const auto ws = weight_multiplicities(rs, lambda);
      bool ok = Natural(ws.dimension()) == weyl_dim(rs, lambda);
      for (int i = 0; i < rs.rank() && ok; ++i)
        for (const auto& [mu, m] : ws.entries) {
          auto it = ws.entries.find(rs.reflect(mu, i));
          if (it == ws.entries.end() || it->second != m) {
            ok = false;
            break;
          }
        }
      r.check(ok, [&] { return to_string(t) + to_string(lambda); });
    }
  }
  return r.done();
}

inline Outcome duality_preserves_dimension()
{
  Recorder r("rootsystem: weyl_dim(lambda) = weyl_dim(dual(lambda)); A1 quaternionic iff odd");
  for (auto t : types_up_to_rank(4)) {
    const auto rs = RootSystem::of(t);
    for (const auto& lambda : box(t.rank, 2))
      r.check(weyl_dim(rs, lambda) == weyl_dim(rs, dual_weight(rs, lambda)),
              [&] { return to_string(t) + to_string(lambda); });
  }
  const auto a1 = RootSystem::of({Family::A, 1});
  for (int m = 0; m <= 10; ++m)
    r.check((frobenius_schur(a1, Weight{m}) == Reality::quaternionic) == (m % 2 == 1),
            [&] { return "A1 weight " + std::to_string(m); });
  return r.done();
}

// ---- satake ------------------------------------------------------------------

inline Outcome catalog_validates()
{
  Recorder r("satake: catalog entries validate; split <-> all white, compact <-> is_compact");
  for (const auto& e : catalog_instances(8)) {
    r.check(validate(e.diagram).empty(), [&] { return e.name + ": " + validate(e.diagram).front(); });
    r.check(is_split(e.diagram) == catalog_entry_is_split(e.name), [&] { return e.name + ": split mismatch"; });
    r.check(is_compact(e.diagram) == catalog_entry_is_compact(e.name),
            [&] { return e.name + ": compact mismatch"; });
  }
  return r.done();
}

inline Outcome parse_serialize_round_trip(std::uint64_t seed, int count = 1000)
{
  Recorder r("satake: parse(serialize(x)) = x, text and structured, " + std::to_string(count) + " diagrams");
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto dd = corpus::random_decorated(rng, 8);
    const auto text = serialize(dd);
    bool ok = false;
    try {
      ok = parse_decorated(text) == dd && parse_json(to_json(dd).dump()) == dd;
    } catch (const std::exception&) {
    }
    r.check(ok, [&] { return text; });
  }
  return r.done();
}

inline Outcome components_partition_nodes(std::uint64_t seed, int count = 1000)
{
  Recorder r("satake: connected components partition the nodes");
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto d = corpus::random_diagram(rng);
    std::vector<int> hits(d.node_count(), 0);
    int total = 0;
    for (const auto& u : connected_components(d)) {
      total += u.diagram.node_count();
      for (int v : u.nodes) ++hits[v];
    }
    const bool once = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    r.check(total == d.node_count() && once, [&] { return serialize({d, std::vector<int>(d.node_count(), 0)}); });
  }
  return r.done();
}

// ---- reduction ---------------------------------------------------------------

inline Outcome kept_components_black(std::uint64_t seed, int count = 1000)
{
  Recorder r("reduction: kept components all black, decorated; discarded all zero; nodes partitioned");
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto dd = corpus::random_decorated(rng, 8);
    std::string problem;
    try {
      const auto res = reduce(dd);
      std::vector<int> hits(dd.diagram.node_count(), 0);
      for (int c : res.crossed) ++hits[c];
      for (const auto& f : res.kept) {
        if (!is_compact(f.component.diagram)) problem = "kept component with white node";
        if (f.weight().is_zero()) problem = "kept component without decoration";
        for (int v : f.component.nodes) ++hits[v];
      }
      for (const auto& s : res.discarded)
        for (int v : s.nodes) {
          if (dd.coefficients[v] != 0) problem = "discarded component with nonzero coefficient";
          ++hits[v];
        }
      if (!std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) problem = "nodes not partitioned";
    } catch (const std::exception& e) {
      problem = e.what();
    }
    r.check(problem.empty(), [&] { return serialize(dd) + ": " + problem; });
  }
  return r.done();
}

inline Outcome crossing_monotone(std::uint64_t seed, int count = 1000)
{
  Recorder r("reduction: adding a coefficient on a white node only grows the crossed set");
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto dd = corpus::random_decorated(rng, 8);
    const auto whites = white_nodes(dd.diagram);
    const int i = whites.empty() ? -1 : whites[corpus::uniform(rng, 0, static_cast<int>(whites.size()) - 1)];
    if (i < 0) continue;
    auto more = dd;
    const int add = corpus::uniform(rng, 1, 3);
    more.coefficients[i] += add;
    if (const int p = dd.diagram.partner(i); p >= 0) more.coefficients[p] += add;
    const auto before = cross_nodes(dd), after = cross_nodes(more);
    r.check(std::includes(after.begin(), after.end(), before.begin(), before.end()),
            [&] { return serialize(dd) + " at node " + std::to_string(i + 1); });
  }
  return r.done();
}

/// Compact decorated diagram formed by the kept factors of a reduction.
inline DecoratedSatakeDiagram kept_as_input(const ReductionResult& res)
{
  std::vector<SatakeDiagram> parts;
  std::vector<int> w;
  for (const auto& f : res.kept) {
    parts.push_back(f.component.diagram);
    w.insert(w.end(), f.coefficients.begin(), f.coefficients.end());
  }
  return {detail::concat(parts), w};
}

inline Outcome reduction_idempotent(std::uint64_t seed, int count = 1000)
{
  Recorder r("reduction: reducing the kept compact pair returns it unchanged");
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto dd = corpus::random_decorated(rng, 8);
    const auto res = reduce(dd);
    if (res.kept.empty()) continue;
    const auto again = reduce(kept_as_input(res));
    r.check(again.crossed.empty() && again.discarded.empty() && again.k_summary == res.k_summary &&
                again.w_dim_real == res.w_dim_real,
            [&] { return serialize(dd); });
  }
  return r.done();
}

inline Outcome split_gives_trivial_k(std::uint64_t seed, int count = 1000)
{
  Recorder r("reduction: split diagrams always give K trivial");
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    std::vector<SimpleType> types;
    int budget = 8;
    do {
      types.push_back(corpus::random_simple_type(rng, budget));
      budget -= types.back().rank;
    } while (budget > 0 && corpus::uniform(rng, 0, 1));
    const auto d = make_diagram(types);
    const DecoratedSatakeDiagram dd{d, corpus::random_decoration(rng, d)};
    const auto res = reduce(dd);
    r.check(res.kept.empty() && unique_closed_orbit(res).verdict == Verdict::unique,
            [&] { return serialize(dd); });
  }
  return r.done();
}

inline Outcome crossing_local(std::uint64_t seed, int count = 1000)
{
  Recorder r("reduction: crossed status depends only on the node and its adjacent black components");
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto dd = corpus::random_decorated(rng, 8);
    const auto& d = dd.diagram;
    const int n = d.node_count();
    const int i = corpus::uniform(rng, 0, n - 1);
    const auto a = d.cartan();
    // Region: node i plus every black node reachable from a neighbour of i through black nodes.
    std::vector<char> region(n, 0);
    region[i] = 1;
    std::vector<int> stack;
    for (int j = 0; j < n; ++j)
      if (j != i && a[i][j] && d.is_black(j)) {
        region[j] = 1;
        stack.push_back(j);
      }
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (u != v && a[v][u] && d.is_black(u) && !region[u]) {
          region[u] = 1;
          stack.push_back(u);
        }
    }
    auto scrambled = dd;
    std::vector<int> outside;
    for (int v = 0; v < n; ++v)
      if (!region[v]) outside.push_back(v);
    std::vector<int> vals;
    for (int v : outside) vals.push_back(dd.coefficients[v]);
    std::shuffle(vals.begin(), vals.end(), rng);
    for (std::size_t t = 0; t < outside.size(); ++t)
      scrambled.coefficients[outside[t]] = vals[t] + (corpus::uniform(rng, 0, 1) ? corpus::uniform(rng, 0, 2) : 0);
    r.check(cross_nodes(dd).count(i) == cross_nodes(scrambled).count(i),
            [&] { return serialize(dd) + " at node " + std::to_string(i + 1); });
  }
  return r.done();
}

// ---- grading -----------------------------------------------------------------

inline std::set<int> random_crossing(std::mt19937_64& rng, int rank)
{
  std::set<int> c;
  while (c.empty())
    for (int i = 0; i < rank; ++i)
      if (corpus::uniform(rng, 0, 1)) c.insert(i);
  return c;
}

inline Weight random_weight(std::mt19937_64& rng, int rank, int max_coord)
{
  Weight w(std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) w[i] = corpus::uniform(rng, -max_coord, max_coord);
  return w;
}

inline Outcome eigenvalue_linear(std::uint64_t seed, int count = 1000)
{
  Recorder r("grading: theta(mu + nu) = theta(mu) + theta(nu); theta(alpha) = crossed height");
  std::mt19937_64 rng(seed);
  const auto types = types_up_to_rank(8);
  for (int k = 0; k < count; ++k) {
    const auto t = types[corpus::uniform(rng, 0, static_cast<int>(types.size()) - 1)];
    const ZGrading g(RootSystem::of(t), random_crossing(rng, t.rank));
    const auto mu = random_weight(rng, t.rank, 5), nu = random_weight(rng, t.rank, 5);
    r.check(g.eigenvalue(mu + nu) == g.eigenvalue(mu) + g.eigenvalue(nu),
            [&] { return to_string(t) + to_string(mu) + to_string(nu); });
    const auto& roots = g.root_system().positive_roots();
    const auto& a = roots[corpus::uniform(rng, 0, static_cast<int>(roots.size()) - 1)];
    r.check(g.eigenvalue(a.weight) == Rational(g.root_degree(a.root)), [&] { return to_string(t) + " root"; });
  }
  return r.done();
}

inline Weight highest_root_weight(const RootSystem& rs) { return rs.positive_roots().back().weight; }

inline Outcome adjoint_levels(std::uint64_t seed, int count = 300)
{
  Recorder r("grading: adjoint levels are -k..k, symmetric, level 0 = rank + uncrossed roots");
  std::mt19937_64 rng(seed);
  const auto types = types_up_to_rank(6);
  for (int k = 0; k < count; ++k) {
    const auto t = types[corpus::uniform(rng, 0, static_cast<int>(types.size()) - 1)];
    const auto rs = RootSystem::of(t);
    const auto crossed = random_crossing(rng, t.rank);
    const ZGrading g(rs, crossed);
    const auto e = eigenspace_dims(g, highest_root_weight(rs));
    const auto levi = levi_restriction(rs, rs.zero(), crossed);
    const int depth = g.depth();
    bool ok = static_cast<int>(e.levels.size()) == 2 * depth + 1;
    for (int i = -depth; i <= depth && ok; ++i) {
      auto it = e.levels.find(Rational(i)), jt = e.levels.find(Rational(-i));
      ok = it != e.levels.end() && jt != e.levels.end() && it->second == jt->second;
    }
    if (ok)
      ok = e.levels.at(Rational(0)) ==
           static_cast<std::int64_t>(t.rank + 2 * levi.levi.positive_roots().size());
    r.check(ok, [&] { return to_string(t) + " crossed " + std::to_string(crossed.size()) + ": " + to_string(e); });
  }
  return r.done();
}

inline Outcome roots_shift_levels(std::uint64_t seed, int count = 200)
{
  Recorder r("grading: a root of degree i moves module weights from level t to t + i");
  std::mt19937_64 rng(seed);
  const auto types = types_up_to_rank(4);
  for (int k = 0; k < count; ++k) {
    const auto t = types[corpus::uniform(rng, 0, static_cast<int>(types.size()) - 1)];
    const auto rs = RootSystem::of(t);
    const ZGrading g(rs, random_crossing(rng, t.rank));
    Weight lambda(std::vector<int>(t.rank, 0));
    for (int i = 0; i < t.rank; ++i) lambda[i] = corpus::uniform(rng, 0, 1);
    const auto ws = weight_multiplicities(rs, lambda);
    bool ok = true;
    for (const auto& [mu, m] : ws.entries)
      for (const auto& a : rs.positive_roots())
        for (int sign : {1, -1}) {
          const Weight nu = mu + sign * a.weight;
          if (!ws.entries.count(nu)) continue;
          ok = ok && g.eigenvalue(nu) == g.eigenvalue(mu) + Rational(sign * g.root_degree(a.root));
        }
    r.check(ok, [&] { return to_string(t) + to_string(lambda); });
  }
  return r.done();
}

/// Decorated diagrams of the worked examples and oracle cases.
inline std::vector<std::pair<std::string, DecoratedSatakeDiagram>> acceptance_corpus()
{
  std::vector<std::pair<std::string, DecoratedSatakeDiagram>> out;
  for (const char* fam : {"sp1-slnH-torsion", "sp1-slnH-curvature"})
    for (int n = 2; n <= 6; ++n) out.emplace_back(std::string(fam) + " n=" + std::to_string(n), find_family(fam).build(n));
  for (auto [p, q] : {std::pair{1, 2}, {1, 4}, {2, 5}, {3, 6}})
    out.emplace_back("so(" + std::to_string(p) + "," + std::to_string(q) + ") wedge", orthogonal_wedge(p, q, p + 1));
  for (int m = 1; m <= 4; ++m) out.emplace_back("sl(2,R) Sym^" + std::to_string(m), DecoratedSatakeDiagram{real_form_diagram("sl(2,R)"), {m}});
  out.emplace_back("sl(3,R) standard", DecoratedSatakeDiagram{real_form_diagram("sl(3,R)"), {1, 0}});
  out.emplace_back("sl(3,R) adjoint", DecoratedSatakeDiagram{real_form_diagram("sl(3,R)"), {1, 1}});
  out.emplace_back("sp(1)+sl(2,H) desk", find_family("sp1-slnH-torsion").build(2));
  return out;
}

inline Outcome top_level_matches_levi(std::uint64_t seed, int count = 300)
{
  Recorder r("grading: top eigenspace dim = Levi module dim (acceptance corpus and random crossings)");
  for (const auto& [name, dd] : acceptance_corpus()) {
    const auto res = reduce(dd);
    const RootSystem rs(dd.diagram.cartan());
    for (const auto& crossed : {res.crossed, minimal_parabolic_crossing(dd.diagram)}) {
      if (crossed.empty()) continue;
      const auto rep = top_level_check(rs, dd.weight(), crossed);
      r.check(rep.ok(), [&] {
        return name + ": top " + std::to_string(rep.top_dim) + " vs Levi " + to_string(rep.levi_dim);
      });
    }
  }
  std::mt19937_64 rng(seed);
  const auto types = types_up_to_rank(4);
  for (int k = 0; k < count; ++k) {
    const auto t = types[corpus::uniform(rng, 0, static_cast<int>(types.size()) - 1)];
    const auto rs = RootSystem::of(t);
    Weight lambda(std::vector<int>(t.rank, 0));
    for (int i = 0; i < t.rank; ++i) lambda[i] = corpus::uniform(rng, 0, 2);
    const auto crossed = random_crossing(rng, t.rank);
    const auto rep = top_level_check(rs, lambda, crossed);
    r.check(rep.ok(), [&] { return to_string(t) + to_string(lambda); });
  }
  return r.done();
}

inline Outcome top_level_is_levi_weight_system(std::uint64_t seed, int count = 200)
{
  Recorder r("grading: theta_max attained at lambda; top-level weights form the Levi module's weight system");
  std::mt19937_64 rng(seed);
  const auto types = types_up_to_rank(4);
  for (int k = 0; k < count; ++k) {
    const auto t = types[corpus::uniform(rng, 0, static_cast<int>(types.size()) - 1)];
    const auto rs = RootSystem::of(t);
    Weight lambda(std::vector<int>(t.rank, 0));
    for (int i = 0; i < t.rank; ++i) lambda[i] = corpus::uniform(rng, 0, 2);
    if (weyl_dim(rs, lambda) > 20000) continue;
    const auto crossed = random_crossing(rng, t.rank);
    const ZGrading g(rs, crossed);
    const auto ws = weight_multiplicities(rs, lambda);
    Rational top = g.eigenvalue(lambda);
    bool ok = true;
    std::map<Weight, std::int64_t> restricted;
    const auto levi = levi_restriction(rs, lambda, crossed);
    for (const auto& [mu, m] : ws.entries) {
      const auto th = g.eigenvalue(mu);
      ok = ok && th <= top;
      if (th != top) continue;
      std::vector<int> c;
      for (int v : levi.nodes) c.push_back(mu[v]);
      restricted[Weight(c)] += m;
    }
    const auto lws = weight_multiplicities(levi.levi, levi.weight);
    ok = ok && restricted == lws.entries;
    r.check(ok, [&] { return to_string(t) + to_string(lambda); });
  }
  return r.done();
}

inline std::vector<Outcome> all(std::uint64_t seed)
{
  std::vector<Outcome> out;
  out.push_back(rootsystem_invariants());
  out.push_back(multiplicities_sum_to_weyl_dim());
  out.push_back(weight_system_reflection_invariant());
  out.push_back(duality_preserves_dimension());
  out.push_back(catalog_validates());
  out.push_back(parse_serialize_round_trip(seed + 1));
  out.push_back(components_partition_nodes(seed + 2));
  out.push_back(kept_components_black(seed + 3));
  out.push_back(crossing_monotone(seed + 4));
  out.push_back(reduction_idempotent(seed + 5));
  out.push_back(split_gives_trivial_k(seed + 6));
  out.push_back(crossing_local(seed + 7));
  out.push_back(eigenvalue_linear(seed + 8));
  out.push_back(adjoint_levels(seed + 9));
  out.push_back(roots_shift_levels(seed + 10));
  out.push_back(top_level_matches_levi(seed + 11));
  out.push_back(top_level_is_levi_weight_system(seed + 12));
  return out;
}

} // namespace minorb::props

#endif // MINORB_TESTS_PROPERTIES_HPP
