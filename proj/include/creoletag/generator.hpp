#pragma once

// Realization of flat semantic specifications. Derived trees are seeded with
// the lexemes named by the spec, the goal features are unified into the root
// top plane up front, and the remaining material comes from adjoining
// function-word and unanchored auxiliary trees. Fusion rules then rewrite the
// frontier per dialect.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "creoletag/engine.hpp"
#include "creoletag/grammar.hpp"

namespace creoletag {

/// Attribute marking a derivation as a stylistic alternative (value +).
inline constexpr std::string_view kAltAttr = "alt";

class NoRealization : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class MissingCell : public Error {
 public:
  MissingCell(std::string row_, std::string dialect_)
      : Error("no realization for row '" + row_ + "' in dialect " + dialect_), row(std::move(row_)),
        dialect(std::move(dialect_)) {}
  std::string row;
  std::string dialect;
};

struct NPSpec {
  std::string lexeme;
  std::string nbr = "sg";
  bool spe = false;
  bool dem = false;
  std::optional<std::string> complement;

  /// Applies dem => spe.
  NPSpec& normalize() {
    if (dem) spe = true;
    return *this;
  }
  bool operator==(const NPSpec&) const = default;
};

struct TMASpec {
  bool pas = false;
  bool psp = false;
  bool prx = false;
  std::string asp = "none";
  bool cnd = false;
  bool operator==(const TMASpec&) const = default;
};

/// Without `pred` the spec describes a single noun phrase (exactly one arg).
struct SemSpec {
  std::optional<std::string> pred;
  std::vector<NPSpec> args;
  TMASpec tma;
  std::optional<std::vector<std::string>> lan;

  SemSpec with_lan(std::vector<std::string> dialects) const {
    SemSpec s = *this;
    s.lan = std::move(dialects);
    return s;
  }
  bool operator==(const SemSpec&) const = default;
};

struct Realization {
  std::vector<std::string> tokens;
  ValueSet lan_set;
  std::vector<std::vector<std::string>> alternatives;
  DerivationTrace trace;

  std::string text() const { return join(tokens); }

  static std::string join(const std::vector<std::string>& toks) {
    std::string out;
    for (std::size_t i = 0; i < toks.size(); ++i) out += (i ? " " : "") + toks[i];
    return out;
  }
};

struct GenerateOptions {
  /// Open-class categories: their lexemes appear only when named by the spec.
  std::set<std::string> content_categories{"N", "Npr", "V"};
  std::string np_category = "NP";
  std::string clause_category = "S";
  /// Bound on adjunctions added around the seeded material.
  int max_adjunctions = 8;
};

inline void check_spec(const SemSpec& s) {
  if (!s.pred && s.args.size() != 1) throw InvalidSpec("a noun-phrase spec needs exactly one argument");
  if (s.pred && s.pred->empty()) throw InvalidSpec("empty predicate");
  for (const auto& a : s.args) {
    if (a.lexeme.empty()) throw InvalidSpec("argument without lexeme");
    if (a.nbr != "sg" && a.nbr != "pl") throw InvalidSpec("nbr must be sg or pl");
    if (a.dem && !a.spe) throw InvalidSpec("dem requires spe (normalize the spec)");
  }
  static const std::set<std::string> aspects{"none", "imp", "frq", "prg"};
  if (!aspects.count(s.tma.asp)) throw InvalidSpec("unknown aspect '" + s.tma.asp + "'");
  if (s.tma.prx && s.tma.psp) throw InvalidSpec("prx excludes psp");
  if (s.tma.cnd && (s.tma.pas || s.tma.psp)) throw InvalidSpec("cnd excludes explicit pas/psp");
  if (!s.pred && (s.tma != TMASpec{})) throw InvalidSpec("tense/aspect given without a predicate");
  if (s.lan && s.lan->empty()) throw InvalidSpec("empty lan constraint");
}

inline FeatureStructure np_goal(const Signature& sig, const NPSpec& np) {
  FeatureStructure fs;
  fs.set(sig, "nbr", {np.nbr});
  fs.set(sig, "spe", {np.spe ? "+" : "-"});
  fs.set(sig, "dem", {np.dem ? "+" : "-"});
  return fs;
}

inline FeatureStructure tma_goal(const Signature& sig, const TMASpec& t) {
  auto pm = [](bool b) -> std::string_view { return b ? "+" : "-"; };
  FeatureStructure fs;
  fs.set(sig, "cnd", {pm(t.cnd)});
  fs.set(sig, "prx", {pm(t.prx)});
  fs.set(sig, "asp", {t.asp});
  if (!t.cnd) {
    fs.set(sig, "pas", {pm(t.pas)});
    fs.set(sig, "psp", {pm(t.psp)});
  }
  return fs;
}

/// Subset of the lan domain named by `dialects`; the full domain for nullopt.
inline ValueSet lan_subset(const Grammar& g, const std::optional<std::vector<std::string>>& dialects) {
  const auto* dom = g.lan_domain();
  if (!dom) return {};
  if (!dialects) return dom->full();
  return dom->subset(*dialects);
}

/// Goal features for the root of the spec's derivation (lan included when given).
inline FeatureStructure spec_goal(const Grammar& g, const SemSpec& s) {
  FeatureStructure fs = s.pred ? tma_goal(g.domains, s.tma) : np_goal(g.domains, s.args.front());
  if (s.lan && g.lan_domain()) fs.set(std::string(kLanAttr), lan_subset(g, s.lan));
  return fs;
}

struct Fused {
  std::vector<std::string> tokens;
  std::vector<std::pair<std::size_t, std::size_t>> origin;  // source range of each output token
};

/// Rewrites `tokens` with every rule whose guard covers `lan_set`; longest
/// pattern first, one left-to-right pass. Patterns never span a position
/// flagged in `barrier`.
inline Fused fuse_tracked(const std::vector<std::string>& tokens, ValueSet lan_set,
                          const std::vector<FusionRule>& rules, const std::vector<bool>& barrier = {}) {
  std::vector<const FusionRule*> active;
  for (const auto& r : rules)
    if (!r.lan || lan_set.subset_of(*r.lan)) active.push_back(&r);
  std::stable_sort(active.begin(), active.end(),
                   [](auto* a, auto* b) { return a->pattern.size() > b->pattern.size(); });

  Fused out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const FusionRule* hit = nullptr;
    for (const auto* r : active) {
      std::size_t n = r->pattern.size();
      if (n == 0 || i + n > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k)
        ok = tokens[i + k] == r->pattern[k] && !(i + k < barrier.size() && barrier[i + k]);
      if (ok) {
        hit = r;
        break;
      }
    }
    if (hit) {
      for (const auto& rep : hit->replacement) {
        out.tokens.push_back(rep);
        out.origin.emplace_back(i, i + hit->pattern.size());
      }
      i += hit->pattern.size();
    } else {
      out.tokens.push_back(tokens[i]);
      out.origin.emplace_back(i, i + 1);
      ++i;
    }
  }
  return out;
}

inline std::vector<std::string> apply_fusion(const std::vector<std::string>& tokens, ValueSet lan_set,
                                             const std::vector<FusionRule>& rules,
                                             const std::vector<bool>& barrier = {}) {
  return fuse_tracked(tokens, lan_set, rules, barrier).tokens;
}

/// Fusion over a derived frontier; head tokens act as barriers.
inline Fused fuse_frontier_tracked(const std::vector<Token>& frontier, ValueSet lan_set,
                                   const std::vector<FusionRule>& rules) {
  std::vector<std::string> toks;
  std::vector<bool> barrier;
  for (const auto& t : frontier) {
    toks.push_back(t.surface);
    barrier.push_back(t.head);
  }
  return fuse_tracked(toks, lan_set, rules, barrier);
}

inline std::vector<std::string> fuse_frontier(const std::vector<Token>& frontier, ValueSet lan_set,
                                              const std::vector<FusionRule>& rules) {
  return fuse_frontier_tracked(frontier, lan_set, rules).tokens;
}

namespace detail {

/// Unifies `fs` into one feature plane of node `n`.
inline bool constrain(DerivedTree& t, FeatMap& plane, const Signature& sig, const FeatureStructure& fs) {
  for (const auto& [attr, cell] : fs.bindings()) {
    ValueSet v = cell.values & sig.at(attr).full();
    auto it = plane.find(attr);
    if (it == plane.end()) {
      if (v.empty()) return false;
      plane.emplace(attr, t.store.fresh(v));
    } else if (!t.store.restrict(it->second, v)) {
      return false;
    }
  }
  return true;
}

inline bool constrain_root_top(DerivedTree& t, const Signature& sig, const FeatureStructure& fs) {
  return constrain(t, t.node(t.root).top, sig, fs);
}

class Realizer {
 public:
  Realizer(const Grammar& g, const GenerateOptions& opts) : g_(g), opts_(opts) {}

  struct Result {
    DerivedTree tree;
    Finalized out;
  };

  std::vector<Result> clause(const SemSpec& s, const FeatureStructure& goal) {
    const auto* pred = lexeme(*s.pred);
    std::vector<std::vector<DerivedTree>> args;
    for (const auto& a : s.args) args.push_back(noun_phrase(a, lan_only(goal)));

    std::vector<Result> out;
    for (const auto& seed : heads(opts_.clause_category, *pred)) {
      auto sites = seed.pending_sites();
      if (sites.size() != args.size()) continue;
      std::vector<DerivedTree> partial{seed};
      // fill right to left so earlier site addresses stay valid
      for (std::size_t i = sites.size(); i-- > 0;) {
        std::vector<DerivedTree> next;
        for (const auto& host : partial)
          for (const auto& filler : args[i])
            if (auto t = splice_substitution(host, sites[i], filler)) next.push_back(std::move(*t));
        partial = std::move(next);
      }
      for (auto& t : partial) {
        if (!constrain_root_top(t, g_.domains, goal)) continue;
        close(t, frozen_np(t, sites), nullptr, out);
      }
    }
    return out;
  }

  /// Finalizable noun-phrase trees for `np`.
  std::vector<DerivedTree> noun_phrase(const NPSpec& np, const FeatureStructure& extra) {
    const auto* head = lexeme(np.lexeme);
    const Lexeme* comp = np.complement ? lexeme(*np.complement) : nullptr;
    auto goal = unify(g_.domains, np_goal(g_.domains, np), extra);
    std::vector<DerivedTree> seeds;
    for (const auto& e : elementary_initial(opts_.np_category))
      for (auto& t : fill_with_head(e, *head)) seeds.push_back(std::move(t));
    std::vector<Result> found;
    for (auto& t : seeds) {
      if (!goal || !constrain_root_top(t, g_.domains, *goal)) continue;
      close(t, {}, comp, found);
    }
    std::vector<DerivedTree> out;
    for (auto& r : found) out.push_back(std::move(r.tree));
    return out;
  }

  std::vector<Result> noun_phrase_results(const NPSpec& np, const FeatureStructure& extra) {
    std::vector<Result> out;
    for (auto& t : noun_phrase(np, extra))
      if (auto f = try_finalize(t)) out.push_back({std::move(t), std::move(*f)});
    return out;
  }

 private:
  const Lexeme* lexeme(const std::string& id) const {
    const auto* l = g_.find_lexeme(id);
    if (!l) throw InvalidSpec("unknown lexeme " + id);
    return l;
  }

  FeatureStructure lan_only(const FeatureStructure& fs) const {
    FeatureStructure out;
    if (const auto* c = fs.find(kLanAttr)) out.set(std::string(kLanAttr), c->values);
    return out;
  }

  /// Nodes of the substituted argument subtrees; those are complete already.
  static std::set<int> frozen_np(const DerivedTree& t, const std::vector<GornAddress>& sites) {
    std::set<int> frozen;
    for (const auto& site : sites) {
      auto n = t.node_at(site);
      if (!n) continue;
      std::vector<int> stack{*n};
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        frozen.insert(cur);
        for (int c : t.node(cur).children) stack.push_back(c);
      }
    }
    return frozen;
  }

  std::vector<DerivedTree> elementary_initial(const std::string& label) const {
    std::vector<DerivedTree> out;
    for (const auto* t : sorted_trees(TreeClass::initial, label))
      if (!t->anchor_slot())
        if (auto i = try_instantiate(g_.domains, *t)) out.push_back(std::move(*i));
    return out;
  }

  /// Initial trees rooted `label` anchored by a variant of `lex`.
  std::vector<DerivedTree> heads(const std::string& label, const Lexeme& lex) const {
    std::vector<DerivedTree> out;
    for (const auto* t : sorted_trees(TreeClass::initial, label)) {
      if (t->anchor_category() != lex.category) continue;
      for (std::size_t v = 0; v < lex.variants.size(); ++v)
        if (auto i = try_instantiate(g_.domains, *t, anchor_choice(g_.domains, *t, lex, v)))
          out.push_back(std::move(*i));
    }
    return out;
  }

  /// Completes the pending sites of `t` so that `head` anchors exactly one of
  /// the substituted trees.
  std::vector<DerivedTree> fill_with_head(const DerivedTree& t, const Lexeme& head) const {
    auto sites = t.pending_sites();
    if (sites.size() != 1) return {};
    std::vector<DerivedTree> out;
    for (const auto& filler : heads(t.node(*t.node_at(sites[0])).label, head)) {
      if (!filler.pending_sites().empty()) continue;
      if (auto s = splice_substitution(t, sites[0], filler)) out.push_back(std::move(*s));
    }
    return out;
  }

  std::vector<const ElementaryTree*> sorted_trees(TreeClass cls, const std::string& label) const {
    std::vector<const ElementaryTree*> out;
    for (const auto& t : g_.trees)
      if (t.cls == cls && t.root.label == label) out.push_back(&t);
    std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->name < b->name; });
    return out;
  }

  /// Auxiliary instances rooted `label`: unanchored, closed-class anchored,
  /// or anchored by the requested complement.
  const std::vector<DerivedTree>& auxiliaries(const std::string& label, const Lexeme* comp) {
    auto key = label + "|" + (comp ? comp->id : std::string());
    if (auto it = aux_.find(key); it != aux_.end()) return it->second;
    std::vector<DerivedTree> out;
    for (const auto* t : sorted_trees(TreeClass::auxiliary, label)) {
      auto cat = t->anchor_category();
      if (!cat) {
        if (auto i = try_instantiate(g_.domains, *t)) out.push_back(std::move(*i));
        continue;
      }
      for (const auto* lex : g_.lexemes_of(*cat)) {
        bool open = opts_.content_categories.count(lex->category) != 0;
        if (open && lex != comp) continue;
        for (std::size_t v = 0; v < lex->variants.size(); ++v)
          if (auto i = try_instantiate(g_.domains, *t, anchor_choice(g_.domains, *t, *lex, v)))
            out.push_back(std::move(*i));
      }
    }
    return aux_.emplace(key, std::move(out)).first->second;
  }

  static int uses(const DerivedTree& t, const Lexeme* lex) {
    if (!lex) return 0;
    int n = 0;
    for (const auto& tok : t.frontier()) n += tok.lexeme == lex->id;
    return n;
  }

  /// Breadth-first closure under adjunction at non-frozen internal nodes.
  void close(const DerivedTree& start, const std::set<int>& frozen, const Lexeme* comp, std::vector<Result>& out) {
    std::set<std::string> seen;
    std::vector<DerivedTree> layer{start};
    for (int depth = 0; !layer.empty() && depth <= opts_.max_adjunctions; ++depth) {
      std::vector<DerivedTree> next;
      for (auto& t : layer) {
        if (!seen.insert(t.structure_key()).second) continue;
        if (uses(t, comp) == (comp ? 1 : 0))
          if (auto f = try_finalize(t)) out.push_back({t, std::move(*f)});
        if (depth == opts_.max_adjunctions) continue;
        for (const auto& [idx, addr] : t.preorder()) {
          const auto& n = t.node(idx);
          if (n.kind != NodeKind::internal || frozen.count(idx)) continue;
          for (const auto& aux : auxiliaries(n.label, comp)) {
            auto s = splice_adjunction(t, addr, aux);
            if (!s || uses(*s, comp) > 1) continue;
            next.push_back(std::move(*s));
          }
        }
      }
      layer = std::move(next);
    }
  }

  const Grammar& g_;
  const GenerateOptions& opts_;
  std::map<std::string, std::vector<DerivedTree>> aux_;
};

inline bool lan_less(ValueSet a, ValueSet b) {
  // ascending member indices, compared lexicographically
  for (std::size_t i = 0; i < 64; ++i) {
    bool x = a.contains(i), y = b.contains(i);
    if (x != y) return x;
  }
  return false;
}

}  // namespace detail

/// All realizations of `spec`, merged across dialects with identical tokens
/// and alternatives, ordered by lan set then tokens.
inline std::vector<Realization> generate(const Grammar& g, const SemSpec& spec, const GenerateOptions& opts = {}) {
  check_spec(spec);
  const auto* lan = g.lan_domain();
  if (spec.lan && lan)
    for (const auto& d : *spec.lan)
      if (!lan->index_of(d)) throw InvalidSpec("unknown dialect " + d);

  FeatureStructure goal;
  if (spec.pred) goal = tma_goal(g.domains, spec.tma);
  if (spec.lan && lan) goal.set(std::string(kLanAttr), lan_subset(g, spec.lan));

  detail::Realizer r(g, opts);
  std::vector<detail::Realizer::Result> results;
  if (spec.pred) results = r.clause(spec, goal);
  else results = r.noun_phrase_results(spec.args.front(), goal);

  // group by dialect: canonical token strings and alternatives
  struct Group {
    std::map<std::vector<std::string>, DerivationTrace> canon;
    std::set<std::vector<std::string>> alts;
  };
  std::map<int, Group> groups;  // -1: grammar without lan
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
    return a.tree.trace.to_string() < b.tree.trace.to_string();
  });
  for (const auto& res : results) {
    bool is_alt = false;
    if (const auto* c = res.out.features.find(kAltAttr); c && g.domains.declared(kAltAttr)) {
      auto plus = g.domains.at(kAltAttr).index_of("+");
      is_alt = plus && c->values == ValueSet::single(*plus);
    }
    std::vector<int> dialects;
    if (lan) {
      ValueSet l = res.out.features.value(g.domains, kLanAttr);
      for (std::size_t i = 0; i < lan->values.size(); ++i)
        if (l.contains(i)) dialects.push_back(static_cast<int>(i));
    } else {
      dialects.push_back(-1);
    }
    for (int d : dialects) {
      ValueSet key = d < 0 ? ValueSet{} : ValueSet::single(static_cast<std::size_t>(d));
      auto toks = fuse_frontier(res.out.tokens, key, g.fusion_rules);
      auto& grp = groups[d];
      if (is_alt) grp.alts.insert(toks);
      else grp.canon.try_emplace(toks, res.tree.trace);
    }
  }

  std::vector<Realization> merged;
  for (auto& [d, grp] : groups) {
    if (grp.canon.empty()) {
      // only alternatives derived: promote them
      for (const auto& a : grp.alts) grp.canon.try_emplace(a, DerivationTrace{});
      grp.alts.clear();
    }
    std::vector<std::vector<std::string>> alts(grp.alts.begin(), grp.alts.end());
    ValueSet bit = d < 0 ? ValueSet{} : ValueSet::single(static_cast<std::size_t>(d));
    for (const auto& [toks, trace] : grp.canon) {
      std::vector<std::vector<std::string>> own;
      for (const auto& a : alts)
        if (a != toks) own.push_back(a);
      auto it = std::find_if(merged.begin(), merged.end(), [&](const Realization& m) {
        return m.tokens == toks && m.alternatives == own;
      });
      if (it == merged.end()) merged.push_back({toks, bit, own, trace});
      else it->lan_set |= bit;
    }
  }
  if (merged.empty()) throw NoRealization("no realization for the given specification");
  std::sort(merged.begin(), merged.end(), [](const Realization& a, const Realization& b) {
    if (a.lan_set != b.lan_set) return detail::lan_less(a.lan_set, b.lan_set);
    return a.tokens < b.tokens;
  });
  return merged;
}

/// Table-cell text: a dropped token is parenthesized ("(ka) dansé"), a single
/// substituted token is written "k'alé / kay dansé".
inline std::string render_cell(const std::vector<std::string>& canonical,
                               const std::vector<std::vector<std::string>>& alternatives) {
  std::vector<std::string> toks = canonical;
  std::vector<std::string> extra;
  for (const auto& alt : alternatives) {
    bool done = false;
    if (alt.size() + 1 == toks.size()) {
      for (std::size_t k = 0; k < toks.size() && !done; ++k) {
        auto shorter = toks;
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(k));
        if (shorter == alt) {
          toks[k] = "(" + toks[k] + ")";
          done = true;
        }
      }
    } else if (alt.size() == toks.size()) {
      std::size_t diff = 0, at = 0;
      for (std::size_t k = 0; k < toks.size(); ++k)
        if (toks[k] != alt[k]) ++diff, at = k;
      if (diff == 1) {
        toks[at] += " / " + alt[at];
        done = true;
      }
    }
    if (!done) extra.push_back(Realization::join(alt));
  }
  std::string out = Realization::join(toks);
  for (const auto& e : extra) out += " / " + e;
  return out;
}

}  // namespace creoletag
