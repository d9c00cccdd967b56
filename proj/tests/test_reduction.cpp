#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "minorb/reduction.hpp"
#include "minorb/satake_io.hpp"

using namespace minorb;

namespace minorb {
inline void PrintTo(const KFactorSummary& k, std::ostream* os) { *os << to_string(k); }
} // namespace minorb

namespace {

std::set<int> one_based(const std::set<int>& s)
{
  std::set<int> out;
  for (int i : s) out.insert(i + 1);
  return out;
}

/// Crossing rule by explicit search: a white node is crossed when decorated or
/// when a path through black nodes only leads from a neighbour to a decorated node.
std::set<int> crossed_by_search(const DecoratedSatakeDiagram& dd)
{
  const auto& d = dd.diagram;
  const auto a = d.cartan();
  const int n = d.node_count();
  std::set<int> out;
  for (int i = 0; i < n; ++i) {
    if (!d.is_white(i)) continue;
    if (dd.coefficients[i]) {
      out.insert(i);
      continue;
    }
    std::vector<int> stack;
    std::vector<char> seen(n, 0);
    for (int j = 0; j < n; ++j)
      if (j != i && a[i][j] && d.is_black(j)) {
        stack.push_back(j);
        seen[j] = 1;
      }
    bool hit = false;
    while (!stack.empty() && !hit) {
      const int v = stack.back();
      stack.pop_back();
      hit = dd.coefficients[v] != 0;
      for (int u = 0; u < n; ++u)
        if (u != v && a[v][u] && d.is_black(u) && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    if (hit) out.insert(i);
  }
  return out;
}

std::vector<KFactorSummary> sorted(std::vector<KFactorSummary> v)
{
  std::sort(v.begin(), v.end());
  return v;
}

const std::vector<KFactorSummary> ex210 = {{{Family::A, 1}, Weight{1}}, {{Family::A, 1}, Weight{3}}};

} // namespace

TEST(CrossNodes, Examples)
{
  auto a2 = real_form_diagram("sl(3,R)");
  EXPECT_EQ(one_based(cross_nodes({a2, {1, 1}})), (std::set<int>{1, 2}));
  EXPECT_EQ(one_based(cross_nodes({a2, {1, 0}})), (std::set<int>{1}));
}

TEST(CrossNodes, QuaternionicExampleMarksTwoNodes)
{
  for (int n = 3; n <= 6; ++n) {
    const int last = 2 * n - 1;
    auto t = find_family("sp1-slnH-torsion").build(n);
    auto c = find_family("sp1-slnH-curvature").build(n);
    // Global numbering: node 1 is the sp(1) factor, the A-part starts at node 2.
    EXPECT_EQ(one_based(cross_nodes(t)), (std::set<int>{1 + 2, 1 + last - 1})) << n;
    EXPECT_EQ(one_based(cross_nodes(c)), (std::set<int>{1 + 2, 1 + last - 1})) << n;
  }
}

TEST(CrossNodes, AgreesWithPathSearch)
{
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    auto dd = corpus::random_decorated(rng);
    EXPECT_EQ(cross_nodes(dd), crossed_by_search(dd)) << serialize(dd);
  }
}

TEST(Reduce, QuaternionicExample)
{
  for (int n : {2, 3, 5}) {
    for (const char* fam : {"sp1-slnH-torsion", "sp1-slnH-curvature"}) {
      auto r = reduce(find_family(fam).build(n));
      ASSERT_EQ(r.kept.size(), 2u) << fam << n;
      EXPECT_EQ(sorted(r.k_summary), ex210);
      EXPECT_EQ(r.w_dim_complex, 8);
      EXPECT_EQ(r.w_dim_real, 8);
      EXPECT_EQ(r.w_reality, Reality::real);
      for (const auto& f : r.kept) EXPECT_EQ(f.reality, Reality::quaternionic);
    }
  }
}

TEST(Reduce, QuaternionicExampleFromText)
{
  auto dd = parse_decorated("A1 black=[1] w=[3] + A5 black=[1,3,5] w=[0,1,0,0,1]");
  auto r = reduce(dd);
  EXPECT_EQ(one_based(r.crossed), (std::set<int>{3, 5}));
  EXPECT_EQ(sorted(r.k_summary), ex210);
  EXPECT_EQ(r.w_dim_real, 8);
}

TEST(Reduce, SplitFormsHaveTrivialK)
{
  for (const char* name : {"sl(4,R)", "so(3,4)", "sp(6,R)", "G2(2)", "F4(4)"}) {
    auto d = real_form_diagram(name);
    std::vector<int> w(d.node_count(), 0);
    w.back() = 2;
    auto r = reduce({d, w});
    EXPECT_TRUE(r.kept.empty()) << name;
    EXPECT_EQ(r.w_dim_real, 1);
    EXPECT_EQ(unique_closed_orbit(r).verdict, Verdict::unique);
    EXPECT_EQ(unique_closed_orbit(r).reason, "K trivial");
  }
}

TEST(Reduce, SO14Wedge2)
{
  auto dd = orthogonal_wedge(1, 4, 2);
  EXPECT_EQ(dd.coefficients, (std::vector<int>{0, 2}));
  auto r = reduce(dd);
  EXPECT_EQ(one_based(r.crossed), (std::set<int>{1}));
  ASSERT_EQ(r.kept.size(), 1u);
  EXPECT_EQ(r.kept[0].component.nodes, (std::vector<int>{1}));
  EXPECT_EQ(r.k_summary[0], (KFactorSummary{{Family::A, 1}, Weight{2}}));
  EXPECT_EQ(r.w_dim_real, 3);
}

TEST(Reduce, OrthogonalWedgeGivesStandardModuleOfSOqMinusP)
{
  struct Case {
    int p, q;
    std::optional<KFactorSummary> k;
  };
  const std::vector<Case> cases = {
      {1, 2, std::nullopt},
      {1, 4, KFactorSummary{{Family::A, 1}, Weight{2}}},
      {2, 5, KFactorSummary{{Family::A, 1}, Weight{2}}},
      {3, 6, KFactorSummary{{Family::A, 1}, Weight{2}}},
      {1, 8, KFactorSummary{{Family::B, 3}, Weight{1, 0, 0}}},
      {1, 9, KFactorSummary{{Family::D, 4}, Weight{1, 0, 0, 0}}},
      {2, 10, KFactorSummary{{Family::D, 4}, Weight{1, 0, 0, 0}}},
      {1, 6, KFactorSummary{{Family::B, 2}, Weight{1, 0}}},
      {1, 7, KFactorSummary{{Family::A, 3}, Weight{0, 1, 0}}},
  };
  for (const auto& c : cases) {
    auto r = reduce(orthogonal_wedge(c.p, c.q, c.p + 1));
    if (!c.k) {
      EXPECT_TRUE(r.kept.empty());
    } else {
      ASSERT_EQ(r.k_summary.size(), 1u) << c.p << "," << c.q;
      EXPECT_EQ(r.k_summary[0], *c.k) << c.p << "," << c.q;
      EXPECT_EQ(r.w_dim_real, c.q - c.p);
    }
    EXPECT_EQ(unique_closed_orbit(r).verdict, Verdict::unique) << c.p << "," << c.q;
  }
}

TEST(Reduce, CompactInputIsIdentity)
{
  auto d = real_form_diagram("su(3) + sp(2)");
  auto r = reduce({d, {1, 0, 0, 0}});
  EXPECT_TRUE(r.crossed.empty());
  ASSERT_EQ(r.kept.size(), 1u);
  EXPECT_EQ(r.k_summary[0].type, (SimpleType{Family::A, 2}));
  ASSERT_EQ(r.discarded.size(), 1u);
  EXPECT_EQ(r.w_dim_complex, 3);
  EXPECT_EQ(r.w_dim_real, 6);
  EXPECT_FALSE(r.notices.empty());
}

TEST(Reduce, RejectsInvalidDecorations)
{
  auto a2 = real_form_diagram("sl(3,R)");
  EXPECT_THROW(reduce({a2, {0, 0}}), InputError);
  auto su22 = real_form_diagram("su(2,2)");
  EXPECT_THROW(reduce({su22, {1, 0, 0}}), InputError);
  auto r = reduce({su22, {1, 0, 0}}, true);
  EXPECT_EQ(r.notices.size(), 1u);
}

TEST(Uniqueness, Examples)
{
  auto ex = reduce(find_family("sp1-slnH-torsion").build(3));
  EXPECT_EQ(unique_closed_orbit(ex).verdict, Verdict::unknown);

  // sp(1,3) on H^4: node 2 is the only white node, crossing it leaves Sp(1) on node 1.
  auto sp = reduce({real_form_diagram("sp(1,3)"), {1, 0, 0, 0}});
  EXPECT_EQ(one_based(sp.crossed), (std::set<int>{2}));
  EXPECT_EQ(sp.k_summary, (std::vector<KFactorSummary>{{{Family::A, 1}, Weight{1}}}));
  EXPECT_EQ(sp.discarded.size(), 1u);
  EXPECT_EQ(unique_closed_orbit(sp).reason, "sphere-transitive pair (SU(2), standard)");

  ReductionResult fake;
  auto check = [&](std::vector<KFactorSummary> ks, Verdict v, const std::string& reason = "") {
    fake.k_summary = std::move(ks);
    auto u = unique_closed_orbit(fake);
    EXPECT_EQ(u.verdict, v) << u.reason;
    if (!reason.empty()) EXPECT_EQ(u.reason, reason);
  };
  check({{{Family::D, 5}, Weight{1, 0, 0, 0, 0}}}, Verdict::unique, "sphere-transitive pair (SO(10), standard)");
  check({{{Family::A, 4}, Weight{0, 0, 0, 1}}}, Verdict::unique, "sphere-transitive pair (SU(5), standard)");
  check({{{Family::B, 3}, Weight{0, 0, 1}}}, Verdict::unique, "sphere-transitive pair (Spin(7), spin)");
  check({{{Family::B, 4}, Weight{0, 0, 0, 1}}}, Verdict::unique, "sphere-transitive pair (Spin(9), spin)");
  check({{{Family::C, 3}, Weight{1, 0, 0}}, {{Family::A, 1}, Weight{1}}}, Verdict::unique,
        "sphere-transitive pair (Sp(3)Sp(1), H^3)");
  check({{{Family::A, 1}, Weight{1}}, {{Family::B, 2}, Weight{0, 1}}}, Verdict::unique);
  check({{{Family::A, 1}, Weight{1}}, {{Family::A, 1}, Weight{1}}}, Verdict::unique);
  check({{{Family::A, 1}, Weight{3}}}, Verdict::unknown);
  check({{{Family::B, 5}, Weight{0, 0, 0, 0, 1}}}, Verdict::unknown);
  check({{{Family::G, 2}, Weight{1, 0}}}, Verdict::unknown);
  check({{{Family::A, 2}, Weight{1, 0}}, {{Family::A, 1}, Weight{1}}}, Verdict::unknown);
}

TEST(FamilyReduce, Examples)
{
  for (const char* fam : {"sp1-slnH-torsion", "sp1-slnH-curvature"}) {
    auto fr = family_reduce(fam, 2, 5);
    EXPECT_TRUE(fr.stable);
    EXPECT_EQ(fr.results.size(), 4u);
    for (const auto& r : fr.results) EXPECT_EQ(sorted(r.k_summary), ex210);
  }
  auto so = family_reduce("so-p-p3-wedge", 1, 3);
  EXPECT_TRUE(so.stable);
  for (const auto& r : so.results)
    EXPECT_EQ(r.k_summary, (std::vector<KFactorSummary>{{{Family::A, 1}, Weight{2}}}));
  auto sl = family_reduce("sl-n-R-adjoint", 2, 4);
  for (const auto& r : sl.results) EXPECT_TRUE(r.kept.empty());
  EXPECT_THROW(family_reduce("sp1-slnH-torsion", 1, 2), std::invalid_argument);
  EXPECT_THROW(family_reduce("nope", 1, 2), std::invalid_argument);
}
