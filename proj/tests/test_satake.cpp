#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "minorb/catalog.hpp"
#include "minorb/satake.hpp"
#include "minorb/satake_io.hpp"

using namespace minorb;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& needle)
{
  for (const auto& s : v)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

std::set<int> black_set(const SatakeDiagram& d)
{
  std::set<int> s;
  for (int i = 0; i < d.node_count(); ++i)
    if (d.is_black(i)) s.insert(i + 1);
  return s;
}

} // namespace

TEST(Catalog, SplitAndCompactBasics)
{
  auto sl3 = real_form_diagram("sl(3,R)");
  EXPECT_EQ(sl3.components, (std::vector<SimpleType>{{Family::A, 2}}));
  EXPECT_TRUE(is_split(sl3));
  EXPECT_FALSE(is_compact(sl3));
  auto su3 = real_form_diagram("su(3)");
  EXPECT_TRUE(is_compact(su3));
  EXPECT_TRUE(is_compact(make_diagram({{Family::B, 2}}, {0, 1})));
}

TEST(Catalog, QuaternionicSlBlackAtOddNodes)
{
  for (int n = 1; n <= 4; ++n) {
    auto d = real_form_diagram("sl(" + std::to_string(n) + ",H)");
    ASSERT_EQ(d.components, (std::vector<SimpleType>{{Family::A, 2 * n - 1}}));
    std::set<int> odd;
    for (int i = 1; i <= 2 * n - 1; i += 2) odd.insert(i);
    EXPECT_EQ(black_set(d), odd);
    EXPECT_TRUE(d.arrows.empty());
    EXPECT_EQ(is_compact(d), n == 1);
  }
}

TEST(Catalog, EveryEntryValidates)
{
  const auto entries = catalog_instances(8);
  EXPECT_GT(entries.size(), 100u);
  for (const auto& e : entries) {
    EXPECT_TRUE(validate(e.diagram).empty()) << e.name << ": " << validate(e.diagram).front();
    EXPECT_EQ(is_split(e.diagram), catalog_entry_is_split(e.name)) << e.name;
    EXPECT_EQ(is_compact(e.diagram), catalog_entry_is_compact(e.name)) << e.name;
  }
}

TEST(Catalog, IndefiniteOrthogonal)
{
  auto so14 = real_form_diagram("so(1,4)");
  EXPECT_EQ(so14.components, (std::vector<SimpleType>{{Family::B, 2}}));
  EXPECT_EQ(black_set(so14), (std::set<int>{2}));
  auto so25 = real_form_diagram("so(2,5)");
  EXPECT_EQ(black_set(so25), (std::set<int>{3}));
  auto so13 = real_form_diagram("so(1,3)");
  EXPECT_EQ(so13.arrows, (std::vector<std::pair<int, int>>{{0, 1}}));
  auto so35 = real_form_diagram("so(3,5)");
  EXPECT_EQ(so35.arrows, (std::vector<std::pair<int, int>>{{2, 3}}));
  EXPECT_TRUE(black_set(so35).empty());
  // so(p,q) and so(q,p) coincide.
  EXPECT_EQ(real_form_diagram("so(5,2)"), so25);
}

TEST(Catalog, UnitaryArrows)
{
  auto su23 = real_form_diagram("su(2,3)");
  EXPECT_EQ(su23.arrows, (std::vector<std::pair<int, int>>{{0, 3}, {1, 2}}));
  EXPECT_TRUE(black_set(su23).empty());
  auto su22 = real_form_diagram("su(2,2)");
  EXPECT_EQ(su22.arrows, (std::vector<std::pair<int, int>>{{0, 2}}));
  auto su15 = real_form_diagram("su(1,5)");
  EXPECT_EQ(black_set(su15), (std::set<int>{2, 3, 4}));
}

TEST(Catalog, Errors)
{
  EXPECT_THROW(real_form_diagram("su(0,1)"), std::invalid_argument);
  EXPECT_THROW(real_form_diagram("sl(1,R)"), std::invalid_argument);
  EXPECT_THROW(real_form_diagram("xx(3)"), UnknownRealForm);
  EXPECT_THROW(real_form_diagram("E6(5)"), UnknownRealForm);
  EXPECT_THROW(real_form_diagram("sp(3,R)"), std::invalid_argument);
}

TEST(Catalog, DirectSum)
{
  auto d = real_form_diagram("sp(1) + sl(3,H)");
  EXPECT_EQ(d.components, (std::vector<SimpleType>{{Family::A, 1}, {Family::A, 5}}));
  EXPECT_EQ(black_set(d), (std::set<int>{1, 2, 4, 6}));
}

TEST(Catalog, VectorModuleWeights)
{
  EXPECT_EQ(vector_module_weight(3), (Weight{2}));
  EXPECT_EQ(vector_module_weight(4), (Weight{1, 1}));
  EXPECT_EQ(vector_module_weight(7), (Weight{1, 0, 0}));
  for (int n = 3; n <= 12; ++n) {
    auto rs = RootSystem::of(detail::orthogonal_types(n));
    EXPECT_EQ(weyl_dim(rs, vector_module_weight(n)), n) << n;
  }
}

TEST(Validate, Examples)
{
  EXPECT_TRUE(validate(make_diagram({{Family::A, 3}})).empty());
  auto loop = make_diagram({{Family::A, 3}}, {}, {{0, 0}});
  EXPECT_TRUE(contains(validate(loop), "arrow not between distinct nodes"));
  auto black_b2 = make_diagram({{Family::B, 2}}, {0, 1}, {{0, 1}});
  EXPECT_TRUE(contains(validate(black_b2), "arrows on black component"));
  auto non_auto = make_diagram({{Family::A, 3}}, {}, {{0, 1}});
  EXPECT_TRUE(contains(validate(non_auto), "not induced"));
  auto b3_arrow = make_diagram({{Family::B, 3}}, {}, {{0, 2}});
  EXPECT_FALSE(validate(b3_arrow).empty());
  auto twice = make_diagram({{Family::A, 5}}, {}, {{0, 4}, {0, 3}});
  EXPECT_TRUE(contains(validate(twice), "involution"));
}

TEST(Validate, Decorations)
{
  auto su22 = real_form_diagram("su(2,2)");
  DecoratedSatakeDiagram dd{su22, {1, 0, 2}};
  auto strict = validate_decoration(dd);
  EXPECT_FALSE(strict.ok());
  EXPECT_TRUE(contains(strict.errors, "nodes 1 and 3"));
  auto lenient = validate_decoration(dd, true);
  EXPECT_TRUE(lenient.ok());
  EXPECT_EQ(lenient.warnings.size(), 1u);

  EXPECT_TRUE(contains(validate_decoration({su22, {0, 0, 0}}).errors, "trivial decoration"));
  EXPECT_TRUE(contains(validate_decoration({su22, {1, 1}}).errors, "coefficient count ≠ rank"));
  EXPECT_TRUE(contains(validate_decoration({su22, {1, -1, 1}}).errors, "negative"));
}

TEST(Components, Examples)
{
  auto a2a1 = make_diagram({{Family::A, 2}, {Family::A, 1}});
  EXPECT_EQ(connected_components(a2a1).size(), 2u);
  EXPECT_EQ(connected_components(make_diagram({{Family::D, 4}})).size(), 1u);
  auto sl3c = real_form_diagram("sl(3,C)");
  EXPECT_TRUE(validate(sl3c).empty());
  auto units = connected_components(sl3c);
  ASSERT_EQ(units.size(), 1u);
  EXPECT_EQ(units[0].diagram, sl3c);
}

TEST(Components, NodeCountsSum)
{
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    auto d = corpus::random_diagram(rng);
    int total = 0;
    std::set<int> seen;
    for (const auto& u : connected_components(d)) {
      total += u.diagram.node_count();
      EXPECT_TRUE(validate(u.diagram).empty());
      for (std::size_t i = 0; i < u.nodes.size(); ++i) {
        seen.insert(u.nodes[i]);
        EXPECT_EQ(u.diagram.colors[i], d.colors[u.nodes[i]]);
      }
    }
    EXPECT_EQ(total, d.node_count());
    EXPECT_EQ(static_cast<int>(seen.size()), d.node_count());
  }
}

TEST(Subdiagram, RecognizesAndRenumbers)
{
  // Removing node 1 of B3 leaves B2 on nodes {2,3}.
  auto d = make_diagram({{Family::B, 3}}, {2});
  auto s = induced_subdiagram(d, {1, 2});
  EXPECT_EQ(s.diagram.components, (std::vector<SimpleType>{{Family::B, 2}}));
  EXPECT_EQ(s.nodes, (std::vector<int>{1, 2}));
  EXPECT_TRUE(s.diagram.is_black(1));
  // Removing node 2 of A4 leaves A1 + A2.
  auto t = induced_subdiagram(make_diagram({{Family::A, 4}}), {0, 2, 3});
  EXPECT_EQ(t.diagram.components, (std::vector<SimpleType>{{Family::A, 1}, {Family::A, 2}}));
}

TEST(Io, TextExamples)
{
  auto dd = parse_decorated("A2 black=[] arrows=[] w=[1,1]");
  EXPECT_TRUE(is_split(dd.diagram));
  EXPECT_EQ(dd.coefficients, (std::vector<int>{1, 1}));
  auto h = real_form_diagram("sl(2,H)");
  EXPECT_EQ(serialize({h, {0, 1, 0}}), "A3 black=[1,3] arrows=[] w=[0,1,0]");
  auto minimal = parse_decorated("A3 w=[0,1,0]");
  EXPECT_EQ(minimal.diagram.node_count(), 3);
}

TEST(Io, CoefficientCountError)
{
  try {
    parse_decorated("A2 w=[1]");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("coefficient count ≠ rank"), std::string::npos);
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 4);
  }
}

TEST(Io, SyntaxErrorsCarryPosition)
{
  try {
    parse_decorated("A2 w=[1,1]\n + B3 black=[1 w=[0,0,1]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 16);
  }
  EXPECT_THROW(parse_decorated("Q2 w=[1,1]"), ParseError);
  EXPECT_THROW(parse_decorated("A2 w=[1,1] colour=[]"), ParseError);
  EXPECT_THROW(parse_decorated("A2 black=[3] w=[1,1]"), ParseError);
  EXPECT_THROW(parse_decorated("A2 arrows=[(1,3:1)] w=[1,1]"), ParseError);
  EXPECT_THROW(parse_decorated(""), ParseError);
  EXPECT_THROW(parse_json("{\"components\": [}"), ParseError);
}

TEST(Io, CrossComponentArrows)
{
  auto sl3c = real_form_diagram("sl(3,C)");
  DecoratedSatakeDiagram dd{sl3c, {1, 0, 1, 0}};
  const auto text = serialize(dd);
  EXPECT_EQ(text, "A2 black=[] arrows=[(1,2:1),(2,2:2)] w=[1,0] + A2 black=[] arrows=[] w=[1,0]");
  EXPECT_EQ(parse_decorated(text), dd);
  EXPECT_EQ(from_json(to_json(dd)), dd);
}

TEST(Io, RoundTripRandomCorpus)
{
  std::mt19937_64 rng(20240611);
  for (int k = 0; k < 1000; ++k) {
    auto dd = corpus::random_decorated(rng, 8);
    ASSERT_TRUE(validate_decoration(dd).ok()) << serialize(dd);
    EXPECT_EQ(parse_decorated(serialize(dd)), dd) << serialize(dd);
    EXPECT_EQ(parse_json(to_json(dd).dump()), dd) << serialize(dd);
    EXPECT_EQ(parse_any(to_json(dd).dump(2)), dd);
  }
}
