#pragma once

// Derived trees, substitution and adjunction under the two-plane (top/bottom)
// feature contract, final collapse, trace replay and bounded enumeration.
//
// Every feature cell of a derived tree is a variable in a union-find store;
// unification merges variables and intersects their value sets. Anchor and
// foot nodes can never receive adjunction, so their top and bottom planes are
// collapsed as soon as their content is fixed. All other nodes collapse in
// finalize().

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "creoletag/errors.hpp"
#include "creoletag/featstruct.hpp"
#include "creoletag/grammar.hpp"

namespace creoletag {

class VarStore {
 public:
  int fresh(ValueSet values) {
    parent_.push_back(static_cast<int>(parent_.size()));
    values_.push_back(values);
    return parent_.back();
  }
  int find(int v) const {
    while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
    return v;
  }
  ValueSet value(int v) const { return values_[static_cast<std::size_t>(find(v))]; }

  /// Identifies two variables; false (store unchanged) on empty intersection.
  bool merge(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return true;
    ValueSet meet = values_[static_cast<std::size_t>(ra)] & values_[static_cast<std::size_t>(rb)];
    if (meet.empty()) return false;
    parent_[static_cast<std::size_t>(rb)] = ra;
    values_[static_cast<std::size_t>(ra)] = meet;
    return true;
  }
  bool restrict(int v, ValueSet s) {
    int r = find(v);
    ValueSet meet = values_[static_cast<std::size_t>(r)] & s;
    if (meet.empty()) return false;
    values_[static_cast<std::size_t>(r)] = meet;
    return true;
  }
  /// Appends `other`; returns the id offset applied to its variables.
  int append(const VarStore& other) {
    int offset = static_cast<int>(parent_.size());
    for (int p : other.parent_) parent_.push_back(p + offset);
    values_.insert(values_.end(), other.values_.begin(), other.values_.end());
    return offset;
  }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<int> parent_;
  std::vector<ValueSet> values_;
};

using FeatMap = std::map<std::string, int>;

struct Token {
  std::string surface;
  std::string lexeme;
  int variant = -1;
  bool head = false;      // anchor of an initial tree (fusion never crosses it)
  bool stripped = false;  // lexical features were ignored (mixed-input analysis)
  ValueSet lan;           // lan set of the lexical variant (empty if undeclared)
};

struct DerivationStep {
  enum class Op { init, substitution, adjunction };
  Op op = Op::init;
  std::string tree;
  std::string lexeme;  // empty for unanchored trees
  int variant = -1;
  bool stripped = false;
  GornAddress address;

  std::string to_string() const {
    std::string out = op == Op::init ? "init" : op == Op::substitution ? "subst" : "adjoin";
    out += " " + tree;
    if (!lexeme.empty()) out += "[" + lexeme + "#" + std::to_string(variant) + (stripped ? "~" : "") + "]";
    if (op != Op::init) out += " @" + format_address(address);
    return out;
  }
  bool operator==(const DerivationStep&) const = default;
};

struct DerivationTrace {
  std::vector<DerivationStep> steps;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (i) out += "; ";
      out += steps[i].to_string();
    }
    return out;
  }
  /// Number of substitutions and adjunctions.
  int operations() const { return steps.empty() ? 0 : static_cast<int>(steps.size()) - 1; }
  bool operator==(const DerivationTrace&) const = default;
};

struct DerivedNode {
  std::string label;
  NodeKind kind = NodeKind::internal;
  FeatMap top;
  FeatMap bottom;
  std::vector<int> children;
  std::string origin_tree;
  GornAddress origin_address;
  std::optional<Token> token;
};

/// Choice of lexical material for an anchor slot.
struct AnchorChoice {
  std::string lexeme;
  int variant = -1;
  std::string surface;
  FeatureStructure features;
  bool head = false;
  bool stripped = false;
  ValueSet lan;
};

class DerivedTree {
 public:
  TreeClass cls = TreeClass::initial;
  int root = 0;
  int foot = -1;  // auxiliary instances only, until adjoined
  std::vector<DerivedNode> nodes;
  VarStore store;
  DerivationTrace trace;

  const DerivedNode& node(int i) const { return nodes[static_cast<std::size_t>(i)]; }
  DerivedNode& node(int i) { return nodes[static_cast<std::size_t>(i)]; }

  std::optional<int> node_at(const GornAddress& addr) const {
    int cur = root;
    for (int i : addr) {
      const auto& ch = node(cur).children;
      if (i < 0 || static_cast<std::size_t>(i) >= ch.size()) return std::nullopt;
      cur = ch[static_cast<std::size_t>(i)];
    }
    return cur;
  }

  /// Address of node index `target`, or nullopt if unreachable.
  std::optional<GornAddress> address_of(int target) const {
    GornAddress cur;
    if (find_path(root, target, cur)) return cur;
    return std::nullopt;
  }

  /// Reachable node indices in preorder, with their addresses.
  std::vector<std::pair<int, GornAddress>> preorder() const {
    std::vector<std::pair<int, GornAddress>> out;
    GornAddress cur;
    walk(root, cur, out);
    return out;
  }

  std::vector<GornAddress> pending_sites() const {
    std::vector<GornAddress> out;
    for (const auto& [i, a] : preorder())
      if (node(i).kind == NodeKind::subst) out.push_back(a);
    return out;
  }

  std::vector<Token> frontier() const {
    std::vector<Token> out;
    for (const auto& [i, a] : preorder())
      if (node(i).token) out.push_back(*node(i).token);
    return out;
  }

  FeatureStructure resolve(const FeatMap& m) const {
    FeatureStructure fs;
    for (const auto& [attr, v] : m) fs.set(attr, store.value(v));
    return fs;
  }

  /// Order-independent identity of the derived structure.
  std::string structure_key() const {
    std::string out;
    key(root, out);
    return out;
  }

 private:
  bool find_path(int cur, int target, GornAddress& path) const {
    if (cur == target) return true;
    const auto& ch = node(cur).children;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      path.push_back(static_cast<int>(i));
      if (find_path(ch[i], target, path)) return true;
      path.pop_back();
    }
    return false;
  }
  void walk(int cur, GornAddress& addr, std::vector<std::pair<int, GornAddress>>& out) const {
    out.emplace_back(cur, addr);
    const auto& ch = node(cur).children;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      addr.push_back(static_cast<int>(i));
      walk(ch[i], addr, out);
      addr.pop_back();
    }
  }
  void key(int cur, std::string& out) const {
    const auto& n = node(cur);
    out += "(" + n.origin_tree + "@" + format_address(n.origin_address);
    if (n.token)
      out += "[" + n.token->lexeme + "#" + std::to_string(n.token->variant) + (n.token->stripped ? "~" : "") + "]";
    for (int c : n.children) key(c, out);
    out += ")";
  }
};

namespace detail {

inline bool unify_maps(VarStore& store, FeatMap& out, const FeatMap& a, const FeatMap& b) {
  FeatMap result = a;
  for (const auto& [attr, v] : b) {
    auto it = result.find(attr);
    if (it == result.end()) {
      result.emplace(attr, v);
    } else if (!store.merge(it->second, v)) {
      return false;
    }
  }
  out = std::move(result);
  return true;
}

inline bool collapse(DerivedTree& t, int n) {
  auto& node = t.node(n);
  FeatMap merged;
  if (!unify_maps(t.store, merged, node.top, node.bottom)) return false;
  node.top = merged;
  node.bottom = merged;
  return true;
}

inline void shift(FeatMap& m, int offset) {
  for (auto& [attr, v] : m) v += offset;
}

/// Appends `other`'s nodes and variables into `host`; returns the node offset.
inline int absorb(DerivedTree& host, const DerivedTree& other) {
  int var_offset = host.store.append(other.store);
  int node_offset = static_cast<int>(host.nodes.size());
  for (DerivedNode n : other.nodes) {
    shift(n.top, var_offset);
    shift(n.bottom, var_offset);
    for (int& c : n.children) c += node_offset;
    host.nodes.push_back(std::move(n));
  }
  return node_offset;
}

inline std::optional<int> parent_of(const DerivedTree& t, int target) {
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    for (int c : t.nodes[i].children)
      if (c == target) return static_cast<int>(i);
  return std::nullopt;
}

inline void rebase_steps(const DerivationTrace& from, const GornAddress& prefix, DerivationTrace& into,
                         DerivationStep::Op first_op) {
  for (std::size_t i = 0; i < from.steps.size(); ++i) {
    DerivationStep s = from.steps[i];
    if (i == 0) {
      s.op = first_op;
      s.address = prefix;
    } else {
      GornAddress a = prefix;
      a.insert(a.end(), s.address.begin(), s.address.end());
      s.address = a;
    }
    into.steps.push_back(std::move(s));
  }
}

inline void replace_child(DerivedTree& t, int old_node, int new_node) {
  if (t.root == old_node) {
    t.root = new_node;
    return;
  }
  auto p = parent_of(t, old_node);
  for (int& c : t.node(*p).children)
    if (c == old_node) c = new_node;
}

/// Substitution without the public preconditions on the filler; nullopt on
/// unification failure.
inline std::optional<DerivedTree> splice_substitution(const DerivedTree& host, const GornAddress& site,
                                                      const DerivedTree& filler) {
  auto site_node = host.node_at(site);
  if (!site_node || host.node(*site_node).kind != NodeKind::subst)
    throw NotASubstitutionSite("no pending substitution site at " + format_address(site));
  if (filler.node(filler.root).label != host.node(*site_node).label)
    throw LabelMismatch("substitution of " + filler.node(filler.root).label + " at " +
                        host.node(*site_node).label + " site");
  DerivedTree out = host;
  int offset = absorb(out, filler);
  int froot = filler.root + offset;
  FeatMap top;
  if (!unify_maps(out.store, top, out.node(*site_node).top, out.node(froot).top)) return std::nullopt;
  out.node(froot).top = top;
  replace_child(out, *site_node, froot);
  rebase_steps(filler.trace, site, out.trace, DerivationStep::Op::substitution);
  return out;
}

inline std::optional<DerivedTree> splice_adjunction(const DerivedTree& host, const GornAddress& at,
                                                    const DerivedTree& aux) {
  auto target = host.node_at(at);
  if (!target) throw InvalidAddress("no node at " + format_address(at));
  if (aux.cls != TreeClass::auxiliary || aux.foot < 0)
    throw LabelMismatch("adjunction requires an auxiliary tree");
  const auto& tn = host.node(*target);
  if (tn.kind != NodeKind::internal)
    throw InvalidAddress("node " + format_address(at) + " does not accept adjunction");
  if (aux.node(aux.root).label != tn.label)
    throw LabelMismatch("auxiliary root " + aux.node(aux.root).label + " cannot adjoin at " + tn.label);

  DerivedTree out = host;
  int offset = absorb(out, aux);
  int aroot = aux.root + offset;
  int afoot = aux.foot + offset;
  FeatMap top, bottom;
  if (!unify_maps(out.store, top, out.node(*target).top, out.node(aroot).top)) return std::nullopt;
  out.node(aroot).top = top;
  if (!unify_maps(out.store, bottom, out.node(*target).bottom, out.node(afoot).bottom)) return std::nullopt;
  out.node(afoot).bottom = bottom;
  out.node(afoot).children = out.node(*target).children;
  out.node(*target).children.clear();
  replace_child(out, *target, aroot);
  if (!collapse(out, afoot)) return std::nullopt;
  rebase_steps(aux.trace, at, out.trace, DerivationStep::Op::adjunction);
  return out;
}

}  // namespace detail

/// Fresh copy of `tree` with variables renamed apart; the anchor's bottom is
/// unified with the lexical features. nullopt on anchor unification failure.
inline std::optional<DerivedTree> try_instantiate(const Signature& sig, const ElementaryTree& tree,
                                                  const std::optional<AnchorChoice>& anchor = std::nullopt) {
  auto slot = tree.anchor_slot();
  if (anchor && !slot) throw Error("tree " + tree.name + " has no anchor slot");
  if (!anchor && slot) throw Error("tree " + tree.name + " needs a lexical anchor");

  DerivedTree out;
  out.cls = tree.cls;
  std::map<std::string, int> vars;
  bool ok = true;

  auto make_map = [&](const FeatureStructure& fs) {
    FeatMap m;
    for (const auto& [attr, cell] : fs.bindings()) {
      const auto& dom = sig.at(attr);
      if (cell.var.empty()) {
        m.emplace(attr, out.store.fresh(cell.values & dom.full()));
        continue;
      }
      auto [it, fresh] = vars.try_emplace(cell.var, -1);
      if (fresh) it->second = out.store.fresh(dom.full());
      if (!out.store.restrict(it->second, cell.values)) ok = false;
      m.emplace(attr, it->second);
    }
    return m;
  };

  std::function<int(const TreeNode&, GornAddress&)> build = [&](const TreeNode& n, GornAddress& addr) {
    DerivedNode d;
    d.label = n.label;
    d.kind = n.kind;
    d.top = make_map(n.top);
    d.bottom = make_map(n.bottom);
    d.origin_tree = tree.name;
    d.origin_address = addr;
    int idx = static_cast<int>(out.nodes.size());
    out.nodes.push_back(std::move(d));
    std::vector<int> kids;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      addr.push_back(static_cast<int>(i));
      kids.push_back(build(n.children[i], addr));
      addr.pop_back();
    }
    out.node(idx).children = std::move(kids);
    if (n.kind == NodeKind::foot) out.foot = idx;
    return idx;
  };
  GornAddress addr;
  out.root = build(tree.root, addr);
  if (!ok) return std::nullopt;

  DerivationStep step;
  step.op = DerivationStep::Op::init;
  step.tree = tree.name;
  if (anchor) {
    int a = *out.node_at(*slot);
    FeatMap lex;
    for (const auto& [attr, cell] : anchor->features.bindings())
      lex.emplace(attr, out.store.fresh(cell.values & sig.at(attr).full()));
    FeatMap merged;
    if (!detail::unify_maps(out.store, merged, out.node(a).bottom, lex)) return std::nullopt;
    out.node(a).bottom = merged;
    if (!detail::collapse(out, a)) return std::nullopt;
    out.node(a).token = Token{anchor->surface, anchor->lexeme, anchor->variant,
                              anchor->head, anchor->stripped, anchor->lan};
    step.lexeme = anchor->lexeme;
    step.variant = anchor->variant;
    step.stripped = anchor->stripped;
  }
  out.trace.steps.push_back(std::move(step));
  return out;
}

inline DerivedTree instantiate(const Signature& sig, const ElementaryTree& tree,
                               const std::optional<AnchorChoice>& anchor = std::nullopt) {
  auto t = try_instantiate(sig, tree, anchor);
  if (!t)
    throw AnchorUnificationFailure("lexical item " + (anchor ? anchor->surface : std::string("-")) +
                                   " is incompatible with tree " + tree.name);
  return *t;
}

/// Anchor choice for variant `index` of `lex`, as used by tree `tree`.
inline AnchorChoice anchor_choice(const Signature& sig, const ElementaryTree& tree, const Lexeme& lex,
                                  std::size_t index, bool stripped = false) {
  const auto& v = lex.variants.at(index);
  AnchorChoice c;
  c.lexeme = lex.id;
  c.variant = static_cast<int>(index);
  c.surface = v.surface;
  c.features = stripped ? FeatureStructure{} : v.features;
  c.head = tree.cls == TreeClass::initial;
  c.stripped = stripped;
  if (sig.declared(kLanAttr)) c.lan = v.features.value(sig, kLanAttr);
  return c;
}

inline DerivedTree substitute(const DerivedTree& host, const GornAddress& site, const DerivedTree& filler) {
  if (filler.cls != TreeClass::initial)
    throw NotASubstitutionSite("auxiliary trees cannot be substituted");
  if (!filler.pending_sites().empty())
    throw NotASubstitutionSite("filler still has pending substitution sites");
  auto out = detail::splice_substitution(host, site, filler);
  if (!out) throw UnificationFailure("substitution at " + format_address(site) + " failed to unify");
  return *out;
}

inline DerivedTree adjoin(const DerivedTree& host, const GornAddress& at, const DerivedTree& aux) {
  auto out = detail::splice_adjunction(host, at, aux);
  if (!out) throw UnificationFailure("adjunction at " + format_address(at) + " failed to unify");
  return *out;
}

struct Finalized {
  std::vector<Token> tokens;
  FeatureStructure features;  // collapsed root features

  std::vector<std::string> surface() const {
    std::vector<std::string> out;
    for (const auto& t : tokens) out.push_back(t.surface);
    return out;
  }
};

namespace detail {
/// Collapses every node; on failure returns the failing address.
inline std::variant<Finalized, GornAddress> run_finalize(const DerivedTree& tree) {
  DerivedTree t = tree;
  for (const auto& [i, addr] : t.preorder())
    if (!collapse(t, i)) return addr;
  Finalized f;
  f.tokens = t.frontier();
  f.features = t.resolve(t.node(t.root).top);
  return f;
}
}  // namespace detail

inline Finalized finalize(const DerivedTree& tree) {
  auto pending = tree.pending_sites();
  if (!pending.empty()) throw PendingSite("pending substitution site at " + format_address(pending.front()));
  auto r = detail::run_finalize(tree);
  if (auto* addr = std::get_if<GornAddress>(&r)) throw CollapseFailure(format_address(*addr), "");
  return std::get<Finalized>(r);
}

inline std::optional<Finalized> try_finalize(const DerivedTree& tree) {
  if (!tree.pending_sites().empty()) return std::nullopt;
  auto r = detail::run_finalize(tree);
  if (auto* f = std::get_if<Finalized>(&r)) return *f;
  return std::nullopt;
}

/// Rebuilds a derived tree from its trace.
inline DerivedTree replay(const Grammar& g, const DerivationTrace& trace) {
  if (trace.steps.empty()) throw Error("empty derivation trace");
  auto elementary = [&](const DerivationStep& s) {
    const auto* tree = g.find_tree(s.tree);
    if (!tree) throw Error("unknown tree " + s.tree);
    std::optional<AnchorChoice> anchor;
    if (!s.lexeme.empty()) {
      const auto* lex = g.find_lexeme(s.lexeme);
      if (!lex || s.variant < 0 || static_cast<std::size_t>(s.variant) >= lex->variants.size())
        throw Error("unknown lexical variant " + s.lexeme);
      anchor = anchor_choice(g.domains, *tree, *lex, static_cast<std::size_t>(s.variant), s.stripped);
    }
    return instantiate(g.domains, *tree, anchor);
  };
  DerivedTree t = elementary(trace.steps.front());
  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    DerivedTree e = elementary(s);
    std::optional<DerivedTree> next = s.op == DerivationStep::Op::substitution
                                          ? detail::splice_substitution(t, s.address, e)
                                          : detail::splice_adjunction(t, s.address, e);
    if (!next) throw UnificationFailure("replay failed at step " + s.to_string());
    t = std::move(*next);
  }
  return t;
}

struct Derivation {
  DerivedTree tree;
  Finalized result;
};

struct EnumerateOptions {
  /// Admits lexical variants as anchors (default: all).
  std::function<bool(const Lexeme&, std::size_t)> admit_variant;
  /// Variants whose lexical features are ignored (mixed-input analysis).
  std::function<bool(const Lexeme&, std::size_t)> strip_variant;
  /// Search-space pruning on intermediate derived trees.
  std::function<bool(const DerivedTree&)> keep;
};

namespace detail {

class Enumerator {
 public:
  Enumerator(const Grammar& g, int max_steps, const EnumerateOptions& opts)
      : g_(g), max_steps_(max_steps), opts_(opts) {}

  /// Elementary instances of every tree rooted `label` of class `cls`.
  const std::vector<DerivedTree>& elementary(TreeClass cls, const std::string& label) {
    auto key = std::make_pair(cls, label);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::vector<DerivedTree> out;
    std::vector<const ElementaryTree*> trees;
    for (const auto& t : g_.trees)
      if (t.cls == cls && t.root.label == label) trees.push_back(&t);
    std::sort(trees.begin(), trees.end(), [](auto* a, auto* b) { return a->name < b->name; });
    for (const auto* t : trees) {
      auto cat = t->anchor_category();
      if (!cat) {
        if (auto inst = try_instantiate(g_.domains, *t)) out.push_back(std::move(*inst));
        continue;
      }
      auto lexemes = g_.lexemes_of(*cat);
      std::sort(lexemes.begin(), lexemes.end(), [](auto* a, auto* b) { return a->id < b->id; });
      for (const auto* lex : lexemes) {
        for (std::size_t v = 0; v < lex->variants.size(); ++v) {
          if (opts_.admit_variant && !opts_.admit_variant(*lex, v)) continue;
          bool strip = opts_.strip_variant && opts_.strip_variant(*lex, v);
          if (auto inst = try_instantiate(g_.domains, *t, anchor_choice(g_.domains, *t, *lex, v, strip)))
            out.push_back(std::move(*inst));
        }
      }
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

  /// Fills pending sites (leftmost first) with substitution-complete fillers.
  std::vector<std::pair<DerivedTree, int>> fill(const DerivedTree& t, int budget) {
    auto sites = t.pending_sites();
    if (sites.empty()) return {{t, 0}};
    std::vector<std::pair<DerivedTree, int>> out;
    if (budget <= 0) return out;
    const auto& site = sites.front();
    for (auto& [filler, cost] : complete(t.node(*t.node_at(site)).label, budget - 1)) {
      auto next = splice_substitution(t, site, filler);
      if (!next) continue;
      for (auto& [done, rest] : fill(*next, budget - 1 - cost)) out.emplace_back(std::move(done), 1 + cost + rest);
    }
    return out;
  }

  std::vector<std::pair<DerivedTree, int>> complete(const std::string& label, int budget) {
    std::vector<std::pair<DerivedTree, int>> out;
    for (const auto& e : elementary(TreeClass::initial, label))
      for (auto& r : fill(e, budget)) {
        if (opts_.keep && !opts_.keep(r.first)) continue;
        out.push_back(std::move(r));
      }
    return out;
  }

  std::vector<Derivation> run(const std::string& goal_category, const FeatureStructure& goal) {
    std::map<int, std::vector<DerivedTree>> agenda;
    for (auto& [t, cost] : complete(goal_category, max_steps_)) agenda[cost].push_back(std::move(t));

    std::set<std::string> seen;
    std::vector<Derivation> results;
    while (!agenda.empty()) {
      auto node = agenda.begin();
      int cost = node->first;
      auto batch = std::move(node->second);
      agenda.erase(node);
      for (auto& t : batch) {
        if (!seen.insert(t.structure_key()).second) continue;
        if (auto f = try_finalize(t)) {
          if (unify(g_.domains, f->features, goal)) results.push_back({t, std::move(*f)});
        }
        if (cost >= max_steps_) continue;
        for (const auto& [idx, addr] : t.preorder()) {
          const auto& n = t.node(idx);
          if (n.kind != NodeKind::internal) continue;
          for (const auto& aux : elementary(TreeClass::auxiliary, n.label)) {
            auto next = splice_adjunction(t, addr, aux);
            if (!next) continue;
            for (auto& [done, extra] : fill(*next, max_steps_ - cost - 1)) {
              if (opts_.keep && !opts_.keep(done)) continue;
              agenda[cost + 1 + extra].push_back(std::move(done));
            }
          }
        }
      }
    }
    std::sort(results.begin(), results.end(), [](const Derivation& a, const Derivation& b) {
      return a.tree.trace.to_string() < b.tree.trace.to_string();
    });
    return results;
  }

 private:
  const Grammar& g_;
  int max_steps_;
  const EnumerateOptions& opts_;
  std::map<std::pair<TreeClass, std::string>, std::vector<DerivedTree>> cache_;
};

}  // namespace detail

/// Every finalizable derivation rooted `goal_category` using at most
/// `max_steps` substitutions and adjunctions whose collapsed root features
/// unify with `goal`. Sorted by trace.
inline std::vector<Derivation> enumerate_derivations(const Grammar& g, const std::string& goal_category,
                                                     const FeatureStructure& goal, int max_steps,
                                                     const EnumerateOptions& opts = {}) {
  detail::Enumerator e(g, max_steps, opts);
  return e.run(goal_category, goal);
}

}  // namespace creoletag
