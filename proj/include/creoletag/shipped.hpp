#pragma once

#include "creoletag/grammar_io.hpp"
#include "creoletag/shipped_grammar_source.hpp"

namespace creoletag {

/// The embedded four-dialect Creole grammar, loaded once.
inline const Grammar& shipped_grammar() {
  static const Grammar g = load_grammar(detail::kShippedGrammarSource);
  return g;
}

inline std::string_view shipped_grammar_source() { return detail::kShippedGrammarSource; }

}  // namespace creoletag
