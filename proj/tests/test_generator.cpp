#include <gtest/gtest.h>

#include <map>
#include <fstream>
#include <set>
#include <sstream>

#include "creoletag/tables.hpp"
#include "support.hpp"

using namespace creoletag;
using namespace testsupport;

namespace {

SemSpec np(const std::string& lex, const std::string& nbr, bool spe, bool dem = false) {
  SemSpec s;
  s.args.push_back(NPSpec{lex, nbr, spe, dem, std::nullopt});
  return s;
}

SemSpec verb(TMASpec t = {}) {
  SemSpec s;
  s.pred = "DANCE";
  s.tma = t;
  return s;
}

std::vector<std::string> only(const SemSpec& s, const std::string& dialect) {
  auto rs = generate(G(), s.with_lan({dialect}));
  EXPECT_EQ(rs.size(), 1u) << dialect;
  return rs.front().tokens;
}

const std::vector<std::string> kDialects{"HT", "GP", "MQ", "GF"};

}  // namespace

TEST(Generator, SpecificSingularAllomorphy) {
  const std::map<std::string, std::vector<std::string>> expected{
      {"PERSON", {"moun nan", "moun la", "moun lan", "moun an"}},
      {"TABLE", {"tab la", "tab la", "tab la", "tab a"}},
      {"DOG", {"chyen an", "chyen la", "chyen an", "chyen an"}},
      {"BIRD", {"zwazo a", "zozyo la", "zwézo a", "zozo a"}},
  };
  for (const auto& [noun, cells] : expected)
    for (std::size_t d = 0; d < kDialects.size(); ++d)
      EXPECT_EQ(text(only(np(noun, "sg", true), kDialects[d])), cells[d]) << noun << " " << kDialects[d];
}

TEST(Generator, ArticleAllomorphsAreExclusive) {
  // exactly one definite article per noun and dialect
  for (const char* noun : {"PERSON", "TABLE", "DOG", "BIRD"})
    for (const auto& d : kDialects) {
      auto rs = generate(G(), np(noun, "sg", true).with_lan({d}));
      EXPECT_EQ(rs.size(), 1u) << noun << " " << d;
      EXPECT_TRUE(rs.front().alternatives.empty());
    }
}

TEST(Generator, MergesDialectsWithIdenticalOutput) {
  auto rs = generate(G(), verb());
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0].text(), "danse");
  EXPECT_EQ(G().lan_domain()->names(rs[0].lan_set), (std::vector<std::string>{"HT"}));
  EXPECT_EQ(rs[1].text(), "dansé");
  EXPECT_EQ(G().lan_domain()->names(rs[1].lan_set), (std::vector<std::string>{"GP", "MQ", "GF"}));
}

TEST(Generator, MergingIsSound) {
  // every merged realization is produced by each of its dialects alone
  for (const auto& spec : golden_corpus()) {
    for (const auto& r : generate(G(), spec)) {
      for (const auto& d : G().lan_domain()->names(r.lan_set)) {
        auto own = generate(G(), spec.with_lan({d}));
        bool found = false;
        for (const auto& o : own) found = found || (o.tokens == r.tokens && o.alternatives == r.alternatives);
        EXPECT_TRUE(found) << r.text() << " in " << d;
      }
    }
  }
}

TEST(Generator, EveryDialectHasAGoldenCell) {
  for (const auto& spec : golden_corpus()) {
    ValueSet covered;
    for (const auto& r : generate(G(), spec)) covered |= r.lan_set;
    EXPECT_EQ(covered, G().lan_domain()->full());
  }
}

TEST(Generator, ResultsAreDeterministic) {
  auto a = generate(G(), np("BIRD", "pl", true));
  auto b = generate(G(), np("BIRD", "pl", true));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].tokens, b[i].tokens);
    EXPECT_EQ(a[i].lan_set, b[i].lan_set);
  }
}

TEST(Generator, FourBirdRealizations) {
  auto rs = generate(G(), np("BIRD", "sg", true));
  std::vector<std::string> got;
  for (const auto& r : rs) got.push_back(r.text());
  EXPECT_EQ(got, (std::vector<std::string>{"zwazo a", "zozyo la", "zwézo a", "zozo a"}));
}

TEST(Generator, HaitianFusion) {
  EXPECT_EQ(text(only(verb({true, false, false, "imp", false}), "HT")), "tap danse");
  EXPECT_EQ(text(only(verb({true, true, false, "none", false}), "HT")), "ta danse");
  EXPECT_EQ(text(only(verb({true, true, false, "imp", false}), "HT")), "ta vap danse");
  EXPECT_EQ(text(only(verb({false, true, false, "imp", false}), "HT")), "vap danse");
}

TEST(Generator, OptionalParticleBecomesAlternative) {
  auto rs = generate(G(), verb({false, false, false, "imp", false}).with_lan({"GF"}));
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].text(), "ka dansé");
  ASSERT_EQ(rs[0].alternatives.size(), 1u);
  EXPECT_EQ(text(rs[0].alternatives[0]), "dansé");
  EXPECT_EQ(render_cell(rs[0].tokens, rs[0].alternatives), "(ka) dansé");
}

TEST(Generator, NearFutureAlternativeInGuiana) {
  auto rs = generate(G(), verb({false, false, true, "none", false}).with_lan({"GF"}));
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(render_cell(rs[0].tokens, rs[0].alternatives), "k'alé / kay dansé");
}

TEST(Generator, MartiniqueConditional) {
  EXPECT_EQ(text(only(verb({false, false, false, "none", true}), "MQ")), "sé dansé");
  EXPECT_EQ(text(only(verb({false, false, false, "none", true}), "GP")), "té ké dansé");
}

TEST(Generator, SubjectClause) {
  SemSpec s = verb({true, false, false, "none", false});
  s.args.push_back(NPSpec{"PERSON", "sg", true, false, std::nullopt});
  EXPECT_EQ(text(only(s, "HT")), "moun nan te danse");
  EXPECT_EQ(text(only(s, "MQ")), "moun lan té dansé");
}

TEST(Generator, NounComplement) {
  SemSpec s = np("PERSON", "pl", true, true);
  s.args[0].complement = "SAINT-THOMAS";
  EXPECT_EQ(text(only(s, "HT")), "moun Sentoma sa yo");
  EXPECT_EQ(text(only(s, "GF")), "sa moun Sentoma ya");
}

TEST(Generator, LexicalGapIsNoRealization) {
  Grammar g = G();
  for (auto& l : g.lexicon)
    if (l.id == "BIRD") std::erase_if(l.variants, [](const LexicalVariant& v) { return v.surface == "zozo"; });
  auto s = np("BIRD", "sg", true);
  EXPECT_THROW(generate(g, s.with_lan({"GF"})), NoRealization);
  EXPECT_EQ(generate(g, s).size(), 3u);
}

TEST(Generator, UnknownLexemeIsInvalidSpec) {
  auto s = np("BIRD", "sg", true);
  s.args[0].lexeme = "UNICORN";
  EXPECT_THROW(generate(G(), s), InvalidSpec);
}

TEST(Generator, InvalidSpecs) {
  EXPECT_THROW(generate(G(), SemSpec{}), InvalidSpec);
  EXPECT_THROW(generate(G(), verb({false, true, true, "none", false})), InvalidSpec);
  EXPECT_THROW(generate(G(), verb({false, false, false, "perfect", false})), InvalidSpec);
  EXPECT_THROW(generate(G(), np("DOG", "dual", false)), InvalidSpec);
  EXPECT_THROW(generate(G(), np("DOG", "sg", true).with_lan({"XX"})), InvalidSpec);
  EXPECT_THROW(generate(G(), np("DOG", "sg", true).with_lan({})), InvalidSpec);
  SemSpec dem_only = np("DOG", "sg", false, true);
  EXPECT_THROW(generate(G(), dem_only), InvalidSpec);
  dem_only.args[0].normalize();
  EXPECT_NO_THROW(generate(G(), dem_only));
}

TEST(Fusion, LongestPatternFirst) {
  auto rules = G().fusion_rules;
  auto ht = G().domains.at("lan").subset({"HT"});
  EXPECT_EQ(apply_fusion(words("te va ap danse"), ht, rules), words("ta vap danse"));
  EXPECT_EQ(apply_fusion(words("te ap danse"), ht, rules), words("tap danse"));
  EXPECT_EQ(apply_fusion(words("te va danse"), ht, rules), words("ta danse"));
}

TEST(Fusion, GuardRestrictsDialects) {
  auto rules = G().fusion_rules;
  auto sig = G().domains.at("lan");
  EXPECT_EQ(apply_fusion(words("te ap"), sig.subset({"GP"}), rules), words("te ap"));
  // a mixed set is not covered by an HT-only guard
  EXPECT_EQ(apply_fusion(words("te ap"), sig.subset({"HT", "GP"}), rules), words("te ap"));
}

TEST(Fusion, HeadsAreBarriers) {
  std::vector<FusionRule> rules{{std::nullopt, {"a", "b"}, {"ab"}}};
  EXPECT_EQ(apply_fusion(words("a b"), {}, rules), words("ab"));
  EXPECT_EQ(apply_fusion(words("a b"), {}, rules, {false, true}), words("a b"));
}

TEST(Fusion, SinglePassLeftToRight) {
  std::vector<FusionRule> rules{{std::nullopt, {"a", "a"}, {"a"}}};
  EXPECT_EQ(apply_fusion(words("a a a"), {}, rules), words("a a"));
  auto f = fuse_tracked(words("x a a"), {}, rules);
  ASSERT_EQ(f.origin.size(), 2u);
  EXPECT_EQ(f.origin[1], (std::pair<std::size_t, std::size_t>{1, 3}));
}

TEST(RenderCell, Forms) {
  EXPECT_EQ(render_cell(words("moun"), {}), "moun");
  EXPECT_EQ(render_cell(words("ka dansé"), {words("dansé")}), "(ka) dansé");
  EXPECT_EQ(render_cell(words("k'alé dansé"), {words("kay dansé")}), "k'alé / kay dansé");
  EXPECT_EQ(render_cell(words("a"), {words("b c d")}), "a / b c d");
}

TEST(Tables, MatchGoldenFiles) {
  auto read = [](const char* name) {
    std::ifstream in(std::string(CREOLETAG_SOURCE_DIR "/golden/") + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  EXPECT_EQ(table_np(G()).to_tsv(), read("np.tsv"));
  EXPECT_EQ(table_tma(G()).to_tsv(), read("tma.tsv"));
}

TEST(Tables, MissingCellNamesRowAndDialect) {
  Grammar g = G();
  std::erase_if(g.lexicon, [](const Lexeme& l) { return l.id == "COND"; });
  std::erase_if(g.trees, [](const ElementaryTree& t) { return t.name == "aux-Conditional-mq"; });
  // MQ still has the periphrastic conditional, so drop that too
  std::erase_if(g.trees, [](const ElementaryTree& t) { return t.name == "aux-Conditional-periphrastic"; });
  try {
    table_tma(g);
    FAIL() << "expected MissingCell";
  } catch (const MissingCell& e) {
    EXPECT_EQ(e.row, "Conditional/Optative");
    EXPECT_EQ(e.dialect, "HT");
  }
}
