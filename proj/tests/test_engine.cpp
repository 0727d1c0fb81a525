#include <gtest/gtest.h>

#include <set>

#include "creoletag/generator.hpp"
#include "support.hpp"

using namespace creoletag;
using namespace testsupport;

namespace {

ValueSet sym(const std::string& attr, std::initializer_list<std::string_view> v) {
  return G().domains.at(attr).subset(v);
}

DerivedTree np_of(DerivedTree n) {
  return substitute(bare("alpha-NP-promote"), {0}, n);
}

}  // namespace

TEST(Engine, BareNounFinalizes) {
  auto f = finalize(anchored("alpha-N", "PERSON", "moun", "HT"));
  EXPECT_EQ(text(f.surface()), "moun");
  EXPECT_EQ(f.features.value(G().domains, "spe"), sym("spe", {"-"}));
  EXPECT_EQ(f.features.value(G().domains, "dem"), sym("dem", {"-"}));
  EXPECT_EQ(f.features.value(G().domains, "lan"), sym("lan", {"HT", "GP", "MQ", "GF"}));
}

TEST(Engine, SpecificArticleAfterConsonantOralNoun) {
  auto t = adjoin(anchored("alpha-N", "TABLE", "tab", "HT"), {}, anchored("aux-Spec-Art", "DEF", "la", "HT"));
  auto f = finalize(t);
  EXPECT_EQ(text(f.surface()), "tab la");
  EXPECT_EQ(f.features.value(G().domains, "nbr"), sym("nbr", {"sg"}));
  EXPECT_EQ(f.features.value(G().domains, "spe"), sym("spe", {"+"}));
  EXPECT_EQ(f.features.value(G().domains, "lan"), sym("lan", {"HT", "MQ"}));
}

TEST(Engine, NasalArticleRejectedAfterOralNoun) {
  auto n = anchored("alpha-N", "TABLE", "tab", "HT");
  EXPECT_THROW(adjoin(n, {}, anchored("aux-Spec-Art", "DEF", "nan", "HT")), UnificationFailure);
}

TEST(Engine, AnchorIncompatibleWithTreeThrows) {
  // GF demonstrative tree restricted to GF; the HT plural marker cannot anchor a Dem slot anyway,
  // so use a HT-only Dem tree with a lexeme variant outside HT
  const auto* t = G().find_tree("aux-Dem-ht");
  Lexeme fake{"DEM", "Dem", {{"sa", FeatureStructure{}.set(G().domains, "lan", {"GF"})}}};
  EXPECT_THROW(instantiate(G().domains, *t, anchor_choice(G().domains, *t, fake, 0)), AnchorUnificationFailure);
}

TEST(Engine, DemonstrativeAloneFailsToCollapse) {
  auto t = adjoin(anchored("alpha-N", "TABLE", "tab", "HT"), {}, anchored("aux-Dem-ht", "DEM", "sa", "HT"));
  try {
    finalize(t);
    FAIL() << "expected CollapseFailure";
  } catch (const CollapseFailure& e) {
    EXPECT_EQ(e.node_address, format_address({}));
  }
  EXPECT_FALSE(try_finalize(t));
}

TEST(Engine, DemonstrativeThenArticleFinalizes) {
  auto t = adjoin(anchored("alpha-N", "TABLE", "tab", "HT"), {}, anchored("aux-Dem-ht", "DEM", "sa", "HT"));
  t = adjoin(t, {}, anchored("aux-Spec-Art", "DEF", "a", "HT"));
  auto f = finalize(t);
  EXPECT_EQ(text(f.surface()), "tab sa a");
  EXPECT_EQ(f.features.value(G().domains, "dem"), sym("dem", {"+"}));
}

TEST(Engine, DemDetCannotStackOnHaitianDemonstrative) {
  auto t = adjoin(anchored("alpha-N", "TABLE", "tab", "HT"), {}, anchored("aux-Dem-ht", "DEM", "sa", "HT"));
  EXPECT_THROW(adjoin(t, {}, anchored("aux-Dem-Det-gpmq", "DEM-DET", "lasa", "GP")), UnificationFailure);
}

TEST(Engine, KaRejectedOnHaitianPredicate) {
  auto v = anchored("alpha-V", "DANCE", "danse", "HT");
  EXPECT_THROW(adjoin(v, {0}, anchored("aux-Imperfective-general", "KA", "ka", "GP")), UnificationFailure);
}

TEST(Engine, ApNeedsTenseBelowIt) {
  auto v = anchored("alpha-V", "DANCE", "danse", "HT");
  auto ap = anchored("aux-Imperfective-ht-bound", "AP", "ap", "HT");
  // bare "ap danse" does not finalize: the bound form needs a preceding tense marker
  auto alone = adjoin(v, {0}, ap);
  EXPECT_FALSE(try_finalize(alone));
  auto with_past = adjoin(alone, {0}, anchored("aux-Past", "PAST", "te", "HT"));
  auto f = finalize(with_past);
  EXPECT_EQ(text(f.surface()), "te ap danse");
  EXPECT_EQ(f.features.value(G().domains, "asp"), sym("asp", {"imp"}));
  EXPECT_EQ(f.features.value(G().domains, "pas"), sym("pas", {"+"}));
}

TEST(Engine, SubstitutionErrors) {
  auto v = anchored("alpha-V-subj", "DANCE", "danse", "HT");
  auto np = np_of(anchored("alpha-N", "PERSON", "moun", "HT"));
  EXPECT_THROW(substitute(v, {1}, np), NotASubstitutionSite);
  EXPECT_THROW(substitute(v, {0}, anchored("alpha-N", "PERSON", "moun", "HT")), LabelMismatch);
  EXPECT_THROW(substitute(v, {0}, anchored("aux-Spec-Art", "DEF", "la", "HT")), NotASubstitutionSite);
  EXPECT_THROW(finalize(v), PendingSite);
  EXPECT_THROW(adjoin(v, {7}, anchored("aux-Past", "PAST", "te", "HT")), InvalidAddress);
  EXPECT_THROW(adjoin(v, {1}, anchored("aux-Spec-Art", "DEF", "la", "HT")), LabelMismatch);
}

TEST(Engine, SubjectClause) {
  auto np = np_of(adjoin(anchored("alpha-N", "PERSON", "moun", "HT"), {}, anchored("aux-Spec-Art", "DEF", "nan", "HT")));
  auto s = substitute(anchored("alpha-V-subj", "DANCE", "danse", "HT"), {0}, np);
  s = adjoin(s, {1}, anchored("aux-Past", "PAST", "te", "HT"));
  EXPECT_EQ(text(finalize(s).surface()), "moun nan te danse");
}

TEST(Engine, SubjectDialectMustAgreeWithVerb) {
  auto np = np_of(anchored("alpha-N", "BIRD", "zozyo", "GP"));
  auto s = substitute(anchored("alpha-V-subj", "DANCE", "danse", "HT"), {0}, np);
  EXPECT_THROW(finalize(s), CollapseFailure);
}

TEST(Engine, AdjunctionsAtDistinctNodesCommute) {
  auto base = substitute(anchored("alpha-V-subj", "DANCE", "dansé", "GP"), {0},
                         np_of(anchored("alpha-N", "PERSON", "moun", "GP")));
  auto art = anchored("aux-Spec-Art", "DEF", "la", "GP");
  auto past = anchored("aux-Past", "PAST", "té", "GP");
  auto a = adjoin(adjoin(base, {0, 0}, art), {1}, past);
  auto b = adjoin(adjoin(base, {1}, past), {0, 0}, art);
  auto fa = finalize(a), fb = finalize(b);
  EXPECT_EQ(text(fa.surface()), "moun la té dansé");
  EXPECT_EQ(fa.surface(), fb.surface());
  EXPECT_EQ(fa.features, fb.features);
  EXPECT_EQ(a.structure_key(), b.structure_key());
}

TEST(Engine, ReplayReproducesDerivation) {
  auto t = adjoin(anchored("alpha-N", "BIRD", "zwazo", "HT"), {}, anchored("aux-Plur-ht", "PLUR", "yo", "HT"));
  t = np_of(t);
  auto r = replay(G(), t.trace);
  EXPECT_EQ(r.structure_key(), t.structure_key());
  EXPECT_EQ(finalize(r).surface(), finalize(t).surface());
  EXPECT_EQ(finalize(r).features, finalize(t).features);
}

TEST(Engine, TraceText) {
  auto v = adjoin(anchored("alpha-V", "DANCE", "danse", "HT"), {0}, anchored("aux-Past", "PAST", "te", "HT"));
  EXPECT_EQ(v.trace.to_string(), "init alpha-V[DANCE#0]; adjoin aux-Past[PAST#0] @" + format_address({0}));
  EXPECT_EQ(v.trace.operations(), 1);
}

TEST(Engine, EveryOperationOnlyNarrowsExistingVariables) {
  EnumerateOptions o;
  o.admit_variant = [](const Lexeme& l, std::size_t) { return l.category != "N" || l.id == "DOG"; };
  auto ds = enumerate_derivations(G(), "NP", {}, 4, o);
  ASSERT_FALSE(ds.empty());
  for (const auto& d : ds) {
    DerivationTrace prefix;
    std::optional<DerivedTree> prev;
    for (const auto& step : d.tree.trace.steps) {
      prefix.steps.push_back(step);
      DerivedTree cur;
      try {
        cur = replay(G(), prefix);
      } catch (const UnificationFailure&) {
        break;  // a prefix may need a later substitution; not reachable here
      }
      if (prev) {
        for (int v = 0; v < static_cast<int>(prev->store.size()); ++v)
          ASSERT_TRUE(cur.store.value(v).subset_of(prev->store.value(v))) << d.tree.trace.to_string();
      }
      prev = cur;
    }
  }
}

TEST(Engine, NounPhraseSpaceForOneNoun) {
  // 18 distinct NP strings over TABLE with at most four operations, counted by hand from the determiner grid
  EnumerateOptions o;
  o.admit_variant = [](const Lexeme& l, std::size_t) {
    return (l.category != "N" && l.category != "Npr") || l.id == "TABLE";
  };
  std::set<std::string> strings;
  for (const auto& d : enumerate_derivations(G(), "NP", {}, 4, o)) strings.insert(text(d.result.surface()));
  EXPECT_EQ(strings.size(), 18u);
  for (const char* s : {"tab", "tab la", "tab yo", "sé tab la", "tab lasa", "tab tala", "tab sa a", "tab sa yo",
                        "yon tab", "on tab", "an tab", "roun tab", "sa tab a", "sa tab ya", "tab a", "tab ya"})
    EXPECT_TRUE(strings.count(s)) << s;
}
