#pragma once

// Recognition by filtered enumeration: derivations are enumerated with only
// the lexical variants whose surface occurs in some reverse-fusion expansion
// of the input, and kept when their fused frontier equals the input.
//
// When nothing derives, the search is repeated with the lexical features of
// one surface form ignored (then two, ...). Such analyses may have an empty
// global lan set; they are reported as mixed rather than discarded.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "creoletag/engine.hpp"
#include "creoletag/generator.hpp"

namespace creoletag {

class NoAnalysis : public Error {
 public:
  using Error::Error;
};

struct Analysis {
  std::vector<std::string> tokens;
  FeatureStructure features;  // collapsed root, lan removed when merged
  ValueSet lan_set;
  std::vector<ValueSet> per_token_lan;
  bool mixed = false;
  int stripped = 0;  // tokens whose lexical features were ignored
  DerivationTrace trace;
  std::vector<DerivationTrace> traces;  // every merged derivation
};

/// Input re-expanded through the fusion rules, every decomposition.
inline std::vector<std::vector<std::string>> reverse_fusion(const std::vector<std::string>& tokens,
                                                            const std::vector<FusionRule>& rules) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == tokens.size()) {
      out.push_back(cur);
      return;
    }
    cur.push_back(tokens[i]);
    go(i + 1);
    cur.pop_back();
    for (const auto& r : rules) {
      std::size_t m = r.replacement.size();
      if (i + m > tokens.size() || !std::equal(r.replacement.begin(), r.replacement.end(), tokens.begin() + i))
        continue;
      cur.insert(cur.end(), r.pattern.begin(), r.pattern.end());
      go(i + m);
      cur.resize(cur.size() - r.pattern.size());
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline bool subsequence(const std::vector<Token>& part, const std::vector<std::string>& whole) {
  std::size_t j = 0;
  for (const auto& t : part) {
    while (j < whole.size() && whole[j] != t.surface) ++j;
    if (j == whole.size()) return false;
    ++j;
  }
  return true;
}

/// Trace with variant choices erased: analyses differing only there merge.
inline std::string skeleton(const DerivationTrace& t) {
  std::string out;
  for (const auto& s : t.steps) {
    DerivationStep c = s;
    c.variant = 0;
    out += c.to_string() + ";";
  }
  return out;
}

inline std::vector<Analysis> analyse(const Grammar& g, const std::vector<std::string>& input,
                                     const std::string& goal, const std::set<std::string>& strip_surfaces) {
  auto candidates = reverse_fusion(input, g.fusion_rules);
  std::set<std::string> surfaces;
  std::size_t longest = 0;
  for (const auto& c : candidates) {
    surfaces.insert(c.begin(), c.end());
    longest = std::max(longest, c.size());
  }

  EnumerateOptions opts;
  opts.admit_variant = [&](const Lexeme& l, std::size_t v) { return surfaces.count(l.variants[v].surface) != 0; };
  opts.strip_variant = [&](const Lexeme& l, std::size_t v) { return strip_surfaces.count(l.variants[v].surface) != 0; };
  opts.keep = [&](const DerivedTree& t) {
    auto f = t.frontier();
    return std::any_of(candidates.begin(), candidates.end(), [&](const auto& c) { return subsequence(f, c); });
  };

  const auto* lan = g.lan_domain();
  std::vector<Analysis> found;
  for (auto& d : enumerate_derivations(g, goal, {}, static_cast<int>(longest) + 2, opts)) {
    ValueSet dlan = lan ? d.result.features.value(g.domains, kLanAttr) : ValueSet{};
    auto fused = fuse_frontier_tracked(d.result.tokens, dlan, g.fusion_rules);
    if (fused.tokens != input) continue;

    Analysis a;
    a.tokens = input;
    a.features = d.result.features;
    a.trace = d.tree.trace;
    a.traces = {d.tree.trace};
    a.lan_set = dlan;
    for (std::size_t j = 0; j < fused.tokens.size(); ++j) {
      ValueSet set = lan ? lan->full() : ValueSet{};
      for (std::size_t k = fused.origin[j].first; k < fused.origin[j].second; ++k) {
        const auto& tok = d.result.tokens[k];
        set &= tok.stripped ? tok.lan : (tok.lan & dlan);
      }
      a.per_token_lan.push_back(set);
      a.lan_set &= set;
    }
    for (const auto& tok : d.result.tokens) a.stripped += tok.stripped;
    a.mixed = lan && a.lan_set.empty();
    found.push_back(std::move(a));
  }

  // merge analyses that differ only in the dialect-specific variant chosen
  std::vector<Analysis> merged;
  std::map<std::string, std::size_t> index;
  for (auto& a : found) {
    FeatureStructure rest = erase_attribute(a.features, std::string(kLanAttr));
    std::string key = skeleton(a.trace) + "|" + to_string(g.domains, rest);
    auto [it, fresh] = index.try_emplace(key, merged.size());
    if (fresh) {
      merged.push_back(std::move(a));
      continue;
    }
    auto& m = merged[it->second];
    m.lan_set |= a.lan_set;
    for (std::size_t j = 0; j < m.per_token_lan.size(); ++j) m.per_token_lan[j] |= a.per_token_lan[j];
    if (lan) {
      ValueSet all = m.features.value(g.domains, kLanAttr) | a.features.value(g.domains, kLanAttr);
      m.features.set(std::string(kLanAttr), all);
    }
    m.traces.push_back(a.trace);
    m.mixed = lan && m.lan_set.empty();
  }
  return merged;
}

}  // namespace detail

/// Analyses of `tokens` as a constituent of category `goal`.
inline std::vector<Analysis> recognize(const Grammar& g, const std::vector<std::string>& tokens,
                                       const std::string& goal) {
  if (tokens.empty()) throw NoAnalysis("empty input");
  auto strict = detail::analyse(g, tokens, goal, {});
  if (!strict.empty()) return strict;

  std::set<std::string> forms(tokens.begin(), tokens.end());
  for (const auto& c : reverse_fusion(tokens, g.fusion_rules)) forms.insert(c.begin(), c.end());
  std::vector<std::string> pool(forms.begin(), forms.end());

  // ignore the lexical features of k surface forms, smallest k first
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    std::vector<Analysis> out;
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::set<std::string> strip;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pick[i]) strip.insert(pool[i]);
      for (auto& a : detail::analyse(g, tokens, goal, strip))
        if (a.stripped > 0) out.push_back(std::move(a));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!out.empty()) return out;
  }
  throw NoAnalysis("no analysis as " + goal);
}

struct DialectReport {
  bool mixed = false;
  ValueSet lan_set;                    // unmixed: union over analyses
  std::vector<std::string> tokens;
  std::vector<ValueSet> per_token_lan;  // mixed: from the best analysis
  std::vector<Analysis> analyses;
};

/// Dialects consistent with `tokens` read as an NP or a clause.
inline DialectReport identify_dialect(const Grammar& g, const std::vector<std::string>& tokens,
                                      const std::vector<std::string>& goals = {"NP", "S"}) {
  DialectReport rep;
  rep.tokens = tokens;
  for (const auto& goal : goals) {
    try {
      auto as = recognize(g, tokens, goal);
      rep.analyses.insert(rep.analyses.end(), as.begin(), as.end());
    } catch (const NoAnalysis&) {
    }
  }
  if (rep.analyses.empty()) throw NoAnalysis("no analysis for input");

  bool any_clean = false;
  for (const auto& a : rep.analyses)
    if (!a.mixed) {
      any_clean = true;
      rep.lan_set |= a.lan_set;
    }
  if (any_clean) return rep;

  rep.mixed = true;
  const Analysis* best = &rep.analyses.front();
  for (const auto& a : rep.analyses)
    if (a.stripped < best->stripped) best = &a;
  rep.per_token_lan = best->per_token_lan;
  return rep;
}

}  // namespace creoletag
