#pragma once

#include <optional>
#include <string>
#include <vector>

#include "creoletag/featstruct.hpp"

namespace creoletag {

/// Attribute holding the dialect of a structure.
inline constexpr std::string_view kLanAttr = "lan";

enum class NodeKind { internal, anchor, subst, foot };
enum class TreeClass { initial, auxiliary };

inline std::string_view to_string(NodeKind k) {
  switch (k) {
    case NodeKind::internal: return "internal";
    case NodeKind::anchor: return "anchor";
    case NodeKind::subst: return "subst";
    case NodeKind::foot: return "foot";
  }
  return "?";
}
inline std::string_view to_string(TreeClass c) { return c == TreeClass::initial ? "initial" : "aux"; }

/// Gorn address: root is empty, child i of node p is p followed by i (0-based).
using GornAddress = std::vector<int>;

inline std::string format_address(const GornAddress& a) {
  if (a.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(a[i]);
  }
  return out;
}

struct TreeNode {
  std::string label;
  NodeKind kind = NodeKind::internal;
  FeatureStructure top;
  FeatureStructure bottom;
  std::vector<TreeNode> children;

  bool operator==(const TreeNode&) const = default;
};

struct ElementaryTree {
  std::string name;
  TreeClass cls = TreeClass::initial;
  TreeNode root;

  const TreeNode* node_at(const GornAddress& addr) const {
    const TreeNode* n = &root;
    for (int i : addr) {
      if (i < 0 || static_cast<std::size_t>(i) >= n->children.size()) return nullptr;
      n = &n->children[static_cast<std::size_t>(i)];
    }
    return n;
  }

  /// Addresses of all nodes of `kind`, in preorder.
  std::vector<GornAddress> find_kind(NodeKind kind) const {
    std::vector<GornAddress> out;
    GornAddress cur;
    collect(root, kind, cur, out);
    return out;
  }
  std::optional<GornAddress> anchor_slot() const {
    auto a = find_kind(NodeKind::anchor);
    if (a.empty()) return std::nullopt;
    return a.front();
  }
  std::optional<GornAddress> foot_address() const {
    auto a = find_kind(NodeKind::foot);
    if (a.empty()) return std::nullopt;
    return a.front();
  }
  /// Category of the anchor slot, if lexicalized.
  std::optional<std::string> anchor_category() const {
    if (auto a = anchor_slot()) return node_at(*a)->label;
    return std::nullopt;
  }

  bool operator==(const ElementaryTree&) const = default;

 private:
  static void collect(const TreeNode& n, NodeKind kind, GornAddress& cur, std::vector<GornAddress>& out) {
    if (n.kind == kind) out.push_back(cur);
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      cur.push_back(static_cast<int>(i));
      collect(n.children[i], kind, cur, out);
      cur.pop_back();
    }
  }
};

struct LexicalVariant {
  std::string surface;
  FeatureStructure features;

  bool operator==(const LexicalVariant&) const = default;
};

struct Lexeme {
  std::string id;
  std::string category;
  std::vector<LexicalVariant> variants;

  /// Union of the variants' lan sets (empty when lan is not declared).
  ValueSet coverage(const Signature& sig) const {
    ValueSet out;
    if (!sig.declared(kLanAttr)) return out;
    for (const auto& v : variants) out |= v.features.value(sig, kLanAttr);
    return out;
  }

  bool operator==(const Lexeme&) const = default;
};

/// Surface contraction of adjacent particles, e.g. te + ap -> tap.
struct FusionRule {
  std::optional<ValueSet> lan;  // nullopt: applies in every dialect
  std::vector<std::string> pattern;
  std::vector<std::string> replacement;

  bool operator==(const FusionRule&) const = default;
};

struct Grammar {
  std::string name = "grammar";
  std::string version = "1";
  Signature domains;
  std::vector<ElementaryTree> trees;
  std::vector<Lexeme> lexicon;
  std::vector<FusionRule> fusion_rules;

  const ElementaryTree* find_tree(std::string_view name_) const {
    for (const auto& t : trees)
      if (t.name == name_) return &t;
    return nullptr;
  }
  const Lexeme* find_lexeme(std::string_view id) const {
    for (const auto& l : lexicon)
      if (l.id == id) return &l;
    return nullptr;
  }
  std::vector<const Lexeme*> lexemes_of(std::string_view category) const {
    std::vector<const Lexeme*> out;
    for (const auto& l : lexicon)
      if (l.category == category) out.push_back(&l);
    return out;
  }
  const AttributeDomain* lan_domain() const { return domains.find(kLanAttr); }

  bool operator==(const Grammar&) const = default;
};

}  // namespace creoletag
