#pragma once

// Projection of a multidialectal grammar onto one dialect: lan is fixed to
// that dialect everywhere, whatever no longer unifies is dropped, then lan is
// erased and its domain removed.

#include <set>
#include <string>
#include <vector>

#include "creoletag/generator.hpp"
#include "creoletag/grammar_io.hpp"

namespace creoletag {

class EmptyGrammar : public Error {
 public:
  using Error::Error;
};

namespace detail {

/// Unifies {lan: only} into every node; false when some node fails.
inline bool restrict_node(const Signature& sig, TreeNode& n, const FeatureStructure& only) {
  for (auto* fs : {&n.top, &n.bottom}) {
    auto u = unify(sig, *fs, only);
    if (!u) return false;
    *fs = erase_attribute(*u, std::string(kLanAttr));
  }
  for (auto& c : n.children)
    if (!restrict_node(sig, c, only)) return false;
  return true;
}

}  // namespace detail

/// Dialect projection. `dropped`, when given, receives one line per removed
/// tree, variant or fusion rule. Identity when lan is not declared.
inline Grammar specialize(const Grammar& g, const std::string& dialect, std::vector<std::string>* dropped = nullptr) {
  const auto* lan = g.lan_domain();
  if (!lan) return g;
  auto idx = lan->index_of(dialect);
  if (!idx) throw UnknownValue(std::string(kLanAttr), dialect);
  auto note = [&](std::string s) {
    if (dropped) dropped->push_back(std::move(s));
  };

  FeatureStructure only;
  only.set(std::string(kLanAttr), ValueSet::single(*idx));

  Grammar out;
  out.name = g.name + "." + dialect;
  out.version = g.version;
  out.domains = g.domains;
  out.domains.remove(std::string(kLanAttr));

  for (const auto& l : g.lexicon) {
    Lexeme kept{l.id, l.category, {}};
    for (const auto& v : l.variants) {
      if (!unify(g.domains, v.features, only)) {
        note("variant " + l.id + " " + quote(v.surface));
        continue;
      }
      kept.variants.push_back({v.surface, erase_attribute(v.features, std::string(kLanAttr))});
    }
    if (kept.variants.empty()) note("lexeme " + l.id);
    else out.lexicon.push_back(std::move(kept));
  }

  for (const auto& t : g.trees) {
    ElementaryTree copy = t;
    if (detail::restrict_node(g.domains, copy.root, only)) out.trees.push_back(std::move(copy));
    else note("tree " + t.name);
  }

  // drop trees whose anchors or substitution sites can no longer be served
  for (bool changed = true; changed;) {
    changed = false;
    std::set<std::string> categories, roots;
    for (const auto& l : out.lexicon) categories.insert(l.category);
    for (const auto& t : out.trees)
      if (t.cls == TreeClass::initial) roots.insert(t.root.label);
    std::vector<ElementaryTree> kept;
    for (auto& t : out.trees) {
      bool ok = true;
      if (auto cat = t.anchor_category(); cat && !categories.count(*cat)) ok = false;
      for (const auto& s : t.find_kind(NodeKind::subst))
        if (!roots.count(t.node_at(s)->label)) ok = false;
      if (ok) {
        kept.push_back(std::move(t));
      } else {
        note("tree " + t.name);
        changed = true;
      }
    }
    out.trees = std::move(kept);
  }

  for (std::size_t i = 0; i < g.fusion_rules.size(); ++i) {
    const auto& r = g.fusion_rules[i];
    if (r.lan && !r.lan->contains(*idx)) {
      note("fuse #" + std::to_string(i + 1));
      continue;
    }
    out.fusion_rules.push_back({std::nullopt, r.pattern, r.replacement});
  }

  if (out.trees.empty()) throw EmptyGrammar("no tree survives specialization to " + dialect);
  if (auto f = validate(out); !f.empty()) throw ValidationError(f);
  return out;
}

struct Mismatch {
  std::size_t index;  // position in the corpus
  std::string detail;
};

namespace detail {

/// (tokens, alternatives) pairs of every realization, empty on NoRealization.
inline std::set<std::string> realization_keys(const Grammar& g, const SemSpec& s) {
  std::set<std::string> out;
  try {
    for (const auto& r : generate(g, s)) {
      std::string k = r.text();
      for (const auto& a : r.alternatives) k += " | " + Realization::join(a);
      out.insert(k);
    }
  } catch (const NoRealization&) {
  }
  return out;
}

inline std::string describe(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? "; " : "") + x;
  return out + "}";
}

}  // namespace detail

/// Compares generation in the specialized grammar against generation in `g`
/// with lan fixed to `dialect`. Empty result means equivalent.
inline std::vector<Mismatch> equivalence_check(const Grammar& g, const std::string& dialect,
                                               const std::vector<SemSpec>& corpus) {
  std::vector<Mismatch> out;
  if (corpus.empty()) return out;
  Grammar special = specialize(g, dialect);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    SemSpec plain = corpus[i];
    plain.lan.reset();
    auto a = detail::realization_keys(special, plain);
    auto b = detail::realization_keys(g, plain.with_lan({dialect}));
    if (a != b) out.push_back({i, "specialized " + detail::describe(a) + " vs " + detail::describe(b)});
  }
  return out;
}

}  // namespace creoletag
