#pragma once

#include <string>
#include <vector>

#include "creoletag/engine.hpp"
#include "creoletag/shipped.hpp"

namespace testsupport {

using namespace creoletag;

inline const Grammar& G() { return shipped_grammar(); }

/// Variant index of `surface` in `lexeme` whose lan set contains `dialect`.
inline std::size_t variant_of(const std::string& lexeme, const std::string& surface, const std::string& dialect) {
  const auto* lex = G().find_lexeme(lexeme);
  auto d = *G().lan_domain()->index_of(dialect);
  for (std::size_t i = 0; i < lex->variants.size(); ++i)
    if (lex->variants[i].surface == surface && lex->variants[i].features.value(G().domains, kLanAttr).contains(d))
      return i;
  throw Error("no variant " + surface + " of " + lexeme + " in " + dialect);
}

inline DerivedTree anchored(const std::string& tree, const std::string& lexeme, const std::string& surface,
                            const std::string& dialect) {
  const auto* t = G().find_tree(tree);
  const auto* lex = G().find_lexeme(lexeme);
  return instantiate(G().domains, *t, anchor_choice(G().domains, *t, *lex, variant_of(lexeme, surface, dialect)));
}

inline DerivedTree bare(const std::string& tree) { return instantiate(G().domains, *G().find_tree(tree)); }

inline std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    auto j = s.find(' ', i);
    if (j == std::string::npos) j = s.size();
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

inline std::string text(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& w : v) out += (out.empty() ? "" : " ") + w;
  return out;
}

}  // namespace testsupport
