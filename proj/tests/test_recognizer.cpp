#include <gtest/gtest.h>

#include <set>

#include "creoletag/recognizer.hpp"
#include "creoletag/tables.hpp"
#include "support.hpp"

using namespace creoletag;
using namespace testsupport;

namespace {

std::vector<std::string> names(ValueSet v) { return G().lan_domain()->names(v); }
ValueSet lan(std::initializer_list<std::string_view> v) { return G().domains.at("lan").subset(v); }

}  // namespace

TEST(ReverseFusion, ExpandsEveryDecomposition) {
  auto c = reverse_fusion(words("ta vap danse"), G().fusion_rules);
  std::set<std::vector<std::string>> got(c.begin(), c.end());
  EXPECT_TRUE(got.count(words("te va ap danse")));
  EXPECT_TRUE(got.count(words("te va va ap danse")));
  EXPECT_TRUE(got.count(words("ta vap danse")));
}

TEST(Recognizer, PluralNounPhraseGuadeloupeMartinique) {
  auto as = recognize(G(), words("sé tab la"), "NP");
  ASSERT_EQ(as.size(), 1u);
  EXPECT_EQ(as[0].lan_set, lan({"GP", "MQ"}));
  EXPECT_EQ(as[0].features.value(G().domains, "nbr"), G().domains.at("nbr").subset({"pl"}));
  EXPECT_EQ(as[0].features.value(G().domains, "spe"), G().domains.at("spe").subset({"+"}));
  EXPECT_FALSE(as[0].mixed);
}

TEST(Recognizer, HaitianPlural) {
  auto as = recognize(G(), words("tab yo"), "NP");
  ASSERT_EQ(as.size(), 1u);
  EXPECT_EQ(names(as[0].lan_set), (std::vector<std::string>{"HT"}));
}

TEST(Recognizer, BareNounIsPanDialectal) {
  auto as = recognize(G(), words("moun"), "NP");
  ASSERT_FALSE(as.empty());
  ValueSet all;
  for (const auto& a : as) all |= a.lan_set;
  EXPECT_EQ(all, G().lan_domain()->full());
}

TEST(Recognizer, FusedFormIsAmbiguous) {
  auto as = recognize(G(), words("tap danse"), "S");
  std::set<std::string> aspects;
  for (const auto& a : as)
    for (const auto& n : G().domains.at("asp").names(a.features.value(G().domains, "asp"))) aspects.insert(n);
  EXPECT_TRUE(aspects.count("imp"));
  EXPECT_TRUE(aspects.count("prg"));
  for (const auto& a : as) EXPECT_EQ(a.lan_set, lan({"HT"}));
}

TEST(Recognizer, VerbalParticleInsideNounPhrase) {
  EXPECT_THROW(recognize(G(), words("ka zozyo la"), "NP"), NoAnalysis);
}

TEST(Recognizer, EmptyInput) { EXPECT_THROW(recognize(G(), {}, "NP"), NoAnalysis); }

TEST(Recognizer, AnalysesReplayToInput) {
  for (const auto& input : {"sé tab la", "moun sa yo", "roun chyen", "zozo ya"}) {
    for (const auto& a : recognize(G(), words(input), "NP")) {
      auto t = replay(G(), a.trace);
      auto f = finalize(t);
      auto l = f.features.value(G().domains, "lan");
      EXPECT_EQ(fuse_frontier(f.tokens, l, G().fusion_rules), words(input));
    }
  }
}

TEST(Recognizer, GeneratedSurfacesAreRecognized) {
  for (const auto& row : np_rows())
    for (const auto& r : generate(G(), row.spec)) {
      auto as = recognize(G(), r.tokens, "NP");
      ValueSet covered;
      for (const auto& a : as) covered |= a.lan_set;
      EXPECT_TRUE(r.lan_set.subset_of(covered)) << r.text();
    }
}

TEST(Identify, SingleDialect) {
  auto rep = identify_dialect(G(), words("té ké dansé"));
  EXPECT_FALSE(rep.mixed);
  EXPECT_EQ(rep.lan_set, lan({"GP", "MQ", "GF"}));
}

TEST(Identify, MixedInput) {
  auto rep = identify_dialect(G(), words("sé zwazo la"));
  ASSERT_TRUE(rep.mixed);
  ASSERT_EQ(rep.per_token_lan.size(), 3u);
  EXPECT_EQ(rep.per_token_lan[0], lan({"GP", "MQ"}));
  EXPECT_EQ(rep.per_token_lan[1], lan({"HT"}));
  EXPECT_EQ(rep.per_token_lan[2], lan({"GP", "MQ"}));
}

TEST(Identify, NothingToAnalyse) { EXPECT_THROW(identify_dialect(G(), words("xyzzy")), NoAnalysis); }
