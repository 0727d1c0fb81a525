#include <gtest/gtest.h>

#include <algorithm>

#include "creoletag/sexpr.hpp"
#include "creoletag/specializer.hpp"
#include "creoletag/tables.hpp"
#include "support.hpp"

using namespace creoletag;
using namespace testsupport;

namespace {

bool has_symbol(const SExpr& e, std::string_view sym) {
  if (e.is_symbol(sym)) return true;
  return std::any_of(e.items.begin(), e.items.end(), [&](const SExpr& c) { return has_symbol(c, sym); });
}

bool has_tree(const Grammar& g, const std::string& name) { return g.find_tree(name) != nullptr; }

}  // namespace

TEST(Specializer, NameAndDomains) {
  auto s = specialize(G(), "MQ");
  EXPECT_EQ(s.name, "creole.MQ");
  EXPECT_FALSE(s.lan_domain());
  EXPECT_TRUE(validate(s).empty());
}

TEST(Specializer, DropsForeignTreesAndVariants) {
  std::vector<std::string> dropped;
  auto s = specialize(G(), "GP", &dropped);
  EXPECT_FALSE(has_tree(s, "aux-Dem-ht"));
  EXPECT_FALSE(has_tree(s, "aux-Plur-gf"));
  EXPECT_FALSE(has_tree(s, "aux-Progressive-ht"));
  EXPECT_FALSE(has_tree(s, "aux-Conditional-mq"));
  EXPECT_TRUE(has_tree(s, "aux-Dem-Det-gpmq"));
  EXPECT_TRUE(has_tree(s, "aux-Imperfective-general"));
  EXPECT_FALSE(s.find_lexeme("AP"));
  EXPECT_FALSE(s.find_lexeme("DEM"));
  ASSERT_TRUE(s.find_lexeme("BIRD"));
  EXPECT_EQ(s.find_lexeme("BIRD")->variants.size(), 1u);
  EXPECT_EQ(s.find_lexeme("BIRD")->variants[0].surface, "zozyo");
  EXPECT_TRUE(s.fusion_rules.empty());
  EXPECT_NE(std::find(dropped.begin(), dropped.end(), "tree aux-Dem-ht"), dropped.end());
}

TEST(Specializer, KeepsHaitianFusionUnguarded) {
  auto s = specialize(G(), "HT");
  ASSERT_EQ(s.fusion_rules.size(), 4u);
  for (const auto& r : s.fusion_rules) EXPECT_FALSE(r.lan);
}

TEST(Specializer, NoLanSymbolInOutput) {
  for (const auto& d : G().lan_domain()->values) {
    auto text = serialize(specialize(G(), d));
    SExprReader reader(text);
    for (const auto& form : reader.read_all()) EXPECT_FALSE(has_symbol(form, "lan")) << d;
  }
}

TEST(Specializer, OutputReloads) {
  for (const auto& d : G().lan_domain()->values) {
    auto s = specialize(G(), d);
    EXPECT_TRUE(structurally_equal(load_grammar(serialize(s)), s)) << d;
  }
}

TEST(Specializer, EquivalentOnGoldenCorpus) {
  for (const auto& d : G().lan_domain()->values) {
    auto m = equivalence_check(G(), d, golden_corpus());
    EXPECT_TRUE(m.empty()) << d << ": " << (m.empty() ? "" : m.front().detail);
  }
}

TEST(Specializer, SpecializedGrammarGenerates) {
  auto s = specialize(G(), "MQ");
  SemSpec spec;
  spec.args.push_back(NPSpec{"BIRD", "pl", true, false, std::nullopt});
  auto rs = generate(s, spec);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].text(), "sé zwézo a");
  EXPECT_TRUE(rs[0].lan_set.empty());
}

TEST(Specializer, UnknownDialect) { EXPECT_THROW(specialize(G(), "XX"), UnknownValue); }

TEST(Specializer, IdentityWithoutLan) {
  auto s = specialize(G(), "GP");
  auto again = specialize(s, "GP");
  EXPECT_TRUE(structurally_equal(s, again));
}

TEST(Specializer, EmptyResult) {
  Grammar g = G();
  for (auto& t : g.trees) t.root.top.set(G().domains, "lan", {"HT"});
  EXPECT_THROW(specialize(g, "GF"), EmptyGrammar);
}
