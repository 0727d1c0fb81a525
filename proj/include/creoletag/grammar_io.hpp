#pragma once

// Textual grammar format (.fstag): UTF-8 s-expressions.
//
//   (grammar creole "1.0")
//   (domain lan (HT GP MQ GF))
//   (tree <name> (class initial|aux)
//     (node <label> (kind anchor|subst|foot|internal) (top (attr v...)...) (bottom ...)
//       (children (node ...) ...)))
//   (lex <ID> (cat N) (variant "moun" (lan HT GP MQ GF) (cns +) (nas +)) ...)
//   (fuse (lan HT) ("te" "ap") "tap")
//
// A feature `(attr v1 v2)` is the subset {v1,v2}; `(attr $X)` is variable X
// over the full domain and `(attr $X v1)` a variable restricted to {v1}.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "creoletag/grammar.hpp"
#include "creoletag/sexpr.hpp"

namespace creoletag {

struct Finding {
  std::string where;
  std::string message;

  std::string to_string() const { return where + ": " + message; }
  bool operator==(const Finding&) const = default;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Finding> f) : Error(summary(f)), findings(std::move(f)) {}
  std::vector<Finding> findings;

 private:
  static std::string summary(const std::vector<Finding>& f) {
    std::string out = std::to_string(f.size()) + " validation finding(s)";
    if (!f.empty()) out += "; first: " + f.front().to_string();
    return out;
  }
};

namespace detail {

inline void validate_fs(const Signature& sig, const FeatureStructure& fs, const std::string& where,
                        std::vector<Finding>& out) {
  for (const auto& [attr, cell] : fs.bindings()) {
    const auto* dom = sig.find(attr);
    if (!dom) {
      out.push_back({where, "undeclared attribute '" + attr + "'"});
      continue;
    }
    if ((cell.values & dom->full()).empty() || !cell.values.subset_of(dom->full()))
      out.push_back({where, "empty or out-of-domain value set for '" + attr + "'"});
  }
}

inline void validate_node(const Signature& sig, const TreeNode& n, const std::string& tree, GornAddress& addr,
                          std::map<std::string, std::pair<std::string, ValueSet>>& vars, std::vector<Finding>& out) {
  std::string where = "tree " + tree + " node " + format_address(addr);
  validate_fs(sig, n.top, where, out);
  validate_fs(sig, n.bottom, where, out);
  for (const auto* fs : {&n.top, &n.bottom}) {
    for (const auto& [attr, cell] : fs->bindings()) {
      if (cell.var.empty() || !sig.declared(attr)) continue;
      auto [it, fresh] = vars.try_emplace(cell.var, attr, cell.values);
      if (!fresh) {
        if (it->second.first != attr &&
            sig.at(attr).values != sig.at(it->second.first).values)
          out.push_back({where, "variable $" + cell.var + " shared across attributes with different domains"});
        it->second.second &= cell.values;
      }
    }
  }
  if ((n.kind == NodeKind::subst || n.kind == NodeKind::foot || n.kind == NodeKind::anchor) && !n.children.empty())
    out.push_back({where, std::string(to_string(n.kind)) + " node must be a leaf"});
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    addr.push_back(static_cast<int>(i));
    validate_node(sig, n.children[i], tree, addr, vars, out);
    addr.pop_back();
  }
}

}  // namespace detail

/// All problems found in `g`; empty means valid.
inline std::vector<Finding> validate(const Grammar& g) {
  std::vector<Finding> out;
  for (const auto& d : g.domains.domains()) {
    std::set<std::string> uniq(d.values.begin(), d.values.end());
    if (d.values.empty()) out.push_back({"domain " + d.name, "empty domain"});
    if (uniq.size() != d.values.size()) out.push_back({"domain " + d.name, "duplicate values"});
    if (d.values.size() > 64) out.push_back({"domain " + d.name, "more than 64 values"});
  }

  std::set<std::string> names;
  std::set<std::string> initial_roots;
  for (const auto& t : g.trees) {
    if (!names.insert(t.name).second) out.push_back({"tree " + t.name, "duplicate tree name"});
    if (t.cls == TreeClass::initial) initial_roots.insert(t.root.label);
  }
  std::set<std::string> categories;
  std::set<std::string> ids;
  for (const auto& l : g.lexicon) {
    if (!ids.insert(l.id).second) out.push_back({"lex " + l.id, "duplicate lexeme id"});
    categories.insert(l.category);
  }

  for (const auto& t : g.trees) {
    const std::string where = "tree " + t.name;
    auto feet = t.find_kind(NodeKind::foot);
    auto anchors = t.find_kind(NodeKind::anchor);
    if (t.cls == TreeClass::initial && !feet.empty()) out.push_back({where, "initial tree has a foot node"});
    if (t.cls == TreeClass::auxiliary) {
      if (feet.size() != 1) {
        out.push_back({where, "auxiliary tree needs exactly one foot node"});
      } else if (t.node_at(feet.front())->label != t.root.label) {
        out.push_back({where, "foot/root mismatch"});
      }
    }
    if (anchors.size() > 1) out.push_back({where, "more than one anchor"});
    if (!anchors.empty() && !categories.count(t.node_at(anchors.front())->label))
      out.push_back({where, "no lexeme of category " + t.node_at(anchors.front())->label + " for anchor"});
    for (const auto& s : t.find_kind(NodeKind::subst))
      if (!initial_roots.count(t.node_at(s)->label))
        out.push_back({where, "no initial tree rooted " + t.node_at(s)->label + " for substitution site " +
                                  format_address(s)});

    std::map<std::string, std::pair<std::string, ValueSet>> vars;
    GornAddress addr;
    detail::validate_node(g.domains, t.root, t.name, addr, vars, out);
    for (const auto& [var, info] : vars)
      if (info.second.empty()) out.push_back({where, "variable $" + var + " has contradictory constraints"});
  }

  for (const auto& l : g.lexicon) {
    if (l.variants.empty()) out.push_back({"lex " + l.id, "no variants"});
    for (std::size_t i = 0; i < l.variants.size(); ++i) {
      const auto& v = l.variants[i];
      std::string where = "lex " + l.id + " variant " + quote(v.surface);
      detail::validate_fs(g.domains, v.features, where, out);
      if (g.domains.declared(kLanAttr) && !v.features.has(kLanAttr))
        out.push_back({where, "variant does not bind lan"});
      for (const auto& [attr, cell] : v.features.bindings())
        if (!cell.var.empty()) out.push_back({where, "variables are not allowed in lexical features"});
      if (v.surface.empty()) out.push_back({where, "empty surface"});
    }
  }

  for (std::size_t i = 0; i < g.fusion_rules.size(); ++i) {
    const auto& r = g.fusion_rules[i];
    std::string where = "fuse #" + std::to_string(i + 1);
    if (r.pattern.size() < 2) out.push_back({where, "pattern needs at least two tokens"});
    if (r.replacement.empty()) out.push_back({where, "empty replacement"});
    if (r.lan) {
      const auto* lan = g.lan_domain();
      if (!lan) out.push_back({where, "lan guard without lan domain"});
      else if (r.lan->empty() || !r.lan->subset_of(lan->full())) out.push_back({where, "bad lan guard"});
    }
  }
  return out;
}

namespace detail {

class GrammarParser {
 public:
  explicit GrammarParser(std::string_view text) : text_(text) {}

  Grammar parse() {
    auto forms = SExprReader(text_).read_all();
    for (const auto& f : forms) {
      if (!f.is_list() || f.head().empty()) fail(f, "expected a top-level form");
      if (f.head() == "domain") parse_domain(f);
    }
    for (const auto& f : forms) {
      auto h = f.head();
      if (h == "domain") continue;
      if (h == "grammar") parse_meta(f);
      else if (h == "tree") g_.trees.push_back(parse_tree(f));
      else if (h == "lex") g_.lexicon.push_back(parse_lex(f));
      else if (h == "fuse") g_.fusion_rules.push_back(parse_fuse(f));
      else fail(f, "unknown form '" + std::string(h) + "'");
    }
    auto more = validate(g_);
    findings_.insert(findings_.end(), more.begin(), more.end());
    if (!findings_.empty()) throw ValidationError(findings_);
    return std::move(g_);
  }

 private:
  [[noreturn]] static void fail(const SExpr& e, const std::string& msg) { throw SyntaxError(e.line, e.column, msg); }

  static const std::string& symbol(const SExpr& e, const char* what) {
    if (!e.is_symbol()) fail(e, std::string("expected ") + what);
    return e.text;
  }
  static const SExpr& item(const SExpr& list, std::size_t i, const char* what) {
    if (i >= list.items.size()) fail(list, std::string("missing ") + what);
    return list.items[i];
  }

  void parse_meta(const SExpr& f) {
    g_.name = symbol(item(f, 1, "grammar name"), "grammar name");
    const auto& v = item(f, 2, "grammar version");
    if (!v.is_string() && !v.is_symbol()) fail(v, "expected version");
    g_.version = v.text;
  }

  void parse_domain(const SExpr& f) {
    AttributeDomain d;
    d.name = symbol(item(f, 1, "attribute name"), "attribute name");
    const auto& vals = item(f, 2, "value list");
    if (!vals.is_list()) fail(vals, "expected value list");
    for (const auto& v : vals.items) d.values.push_back(symbol(v, "value symbol"));
    if (f.items.size() > 3) fail(f.items[3], "unexpected item in domain");
    if (!g_.domains.declare(d)) findings_.push_back({"domain " + d.name, "attribute declared twice"});
  }

  FeatureStructure parse_features(const SExpr& list, std::size_t from, const std::string& where) {
    FeatureStructure fs;
    for (std::size_t i = from; i < list.items.size(); ++i) {
      const auto& feat = list.items[i];
      if (!feat.is_list() || feat.items.empty()) fail(feat, "expected (attribute value...)");
      const auto& attr = symbol(feat.items[0], "attribute name");
      if (feat.items.size() < 2) fail(feat, "empty value set for '" + attr + "'");
      if (fs.has(attr)) fail(feat, "attribute '" + attr + "' bound twice");
      std::string var;
      std::vector<std::string> values;
      for (std::size_t j = 1; j < feat.items.size(); ++j) {
        const auto& v = symbol(feat.items[j], "value symbol");
        if (j == 1 && v.size() > 1 && v[0] == '$') var = v.substr(1);
        else values.push_back(v);
      }
      const auto* dom = g_.domains.find(attr);
      if (!dom) {
        findings_.push_back({where, "undeclared attribute '" + attr + "'"});
        continue;
      }
      ValueSet set = values.empty() ? dom->full() : ValueSet{};
      bool ok = true;
      for (const auto& v : values) {
        auto idx = dom->index_of(v);
        if (!idx) {
          findings_.push_back({where, "value '" + v + "' not in domain of '" + attr + "'"});
          ok = false;
        } else {
          set |= ValueSet::single(*idx);
        }
      }
      if (ok) fs.set(attr, set, var);
    }
    return fs;
  }

  TreeNode parse_node(const SExpr& f, const std::string& tree) {
    if (f.head() != "node") fail(f, "expected (node ...)");
    TreeNode n;
    n.label = symbol(item(f, 1, "node label"), "node label");
    bool has_kind = false;
    for (std::size_t i = 2; i < f.items.size(); ++i) {
      const auto& part = f.items[i];
      auto h = part.head();
      std::string where = "tree " + tree + " node " + n.label;
      if (h == "kind") {
        const auto& k = symbol(item(part, 1, "node kind"), "node kind");
        if (k == "internal") n.kind = NodeKind::internal;
        else if (k == "anchor") n.kind = NodeKind::anchor;
        else if (k == "subst") n.kind = NodeKind::subst;
        else if (k == "foot") n.kind = NodeKind::foot;
        else fail(part, "unknown node kind '" + k + "'");
        has_kind = true;
      } else if (h == "top") {
        n.top = parse_features(part, 1, where);
      } else if (h == "bottom") {
        n.bottom = parse_features(part, 1, where);
      } else if (h == "children") {
        for (std::size_t j = 1; j < part.items.size(); ++j) n.children.push_back(parse_node(part.items[j], tree));
      } else {
        fail(part, "unexpected item in node");
      }
    }
    if (!has_kind) fail(f, "node without (kind ...)");
    return n;
  }

  ElementaryTree parse_tree(const SExpr& f) {
    ElementaryTree t;
    t.name = symbol(item(f, 1, "tree name"), "tree name");
    bool has_class = false, has_root = false;
    for (std::size_t i = 2; i < f.items.size(); ++i) {
      const auto& part = f.items[i];
      if (part.head() == "class") {
        const auto& c = symbol(item(part, 1, "tree class"), "tree class");
        if (c == "initial") t.cls = TreeClass::initial;
        else if (c == "aux") t.cls = TreeClass::auxiliary;
        else fail(part, "unknown tree class '" + c + "'");
        has_class = true;
      } else if (part.head() == "node") {
        if (has_root) fail(part, "tree has more than one root");
        t.root = parse_node(part, t.name);
        has_root = true;
      } else {
        fail(part, "unexpected item in tree");
      }
    }
    if (!has_class) fail(f, "tree without (class ...)");
    if (!has_root) fail(f, "tree without root node");
    return t;
  }

  Lexeme parse_lex(const SExpr& f) {
    Lexeme l;
    l.id = symbol(item(f, 1, "lexeme id"), "lexeme id");
    bool has_cat = false;
    for (std::size_t i = 2; i < f.items.size(); ++i) {
      const auto& part = f.items[i];
      if (part.head() == "cat") {
        l.category = symbol(item(part, 1, "category"), "category");
        has_cat = true;
      } else if (part.head() == "variant") {
        const auto& s = item(part, 1, "surface string");
        if (!s.is_string()) fail(s, "expected surface string");
        l.variants.push_back({s.text, parse_features(part, 2, "lex " + l.id + " variant " + quote(s.text))});
      } else {
        fail(part, "unexpected item in lex");
      }
    }
    if (!has_cat) fail(f, "lex without (cat ...)");
    return l;
  }

  static std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string w; in >> w;) out.push_back(w);
    return out;
  }

  FusionRule parse_fuse(const SExpr& f) {
    FusionRule r;
    std::size_t i = 1;
    if (i < f.items.size() && f.items[i].head() == "lan") {
      const auto* lan = g_.lan_domain();
      if (!lan) {
        findings_.push_back({"fuse", "lan guard without lan domain"});
      } else {
        ValueSet set;
        for (std::size_t j = 1; j < f.items[i].items.size(); ++j) {
          const auto& v = symbol(f.items[i].items[j], "dialect");
          auto idx = lan->index_of(v);
          if (!idx) findings_.push_back({"fuse", "unknown dialect '" + v + "'"});
          else set |= ValueSet::single(*idx);
        }
        if (set.empty()) fail(f.items[i], "empty lan guard");
        r.lan = set;
      }
      ++i;
    }
    const auto& pat = item(f, i, "pattern");
    if (!pat.is_list()) fail(pat, "expected pattern list");
    for (const auto& p : pat.items) {
      if (!p.is_string()) fail(p, "expected token string");
      r.pattern.push_back(p.text);
    }
    const auto& rep = item(f, i + 1, "replacement");
    if (!rep.is_string()) fail(rep, "expected replacement string");
    r.replacement = split_tokens(rep.text);
    if (f.items.size() > i + 2) fail(f.items[i + 2], "unexpected item in fuse");
    return r;
  }

  std::string_view text_;
  Grammar g_;
  std::vector<Finding> findings_;
};

inline void write_features(std::ostream& os, const Signature& sig, const FeatureStructure& fs) {
  for (const auto& [attr, cell] : fs.bindings()) {
    os << " (" << attr;
    const auto* dom = sig.find(attr);
    if (!cell.var.empty()) os << " $" << cell.var;
    if (!dom) {
      os << ")";
      continue;
    }
    if (cell.var.empty() || cell.values != dom->full())
      for (const auto& v : dom->names(cell.values)) os << " " << v;
    os << ")";
  }
}

inline void write_node(std::ostream& os, const Signature& sig, const TreeNode& n, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad << "(node " << n.label << " (kind " << to_string(n.kind) << ")\n";
  os << pad << "  (top";
  write_features(os, sig, n.top);
  os << ")\n" << pad << "  (bottom";
  write_features(os, sig, n.bottom);
  os << ")";
  if (!n.children.empty()) {
    os << "\n" << pad << "  (children";
    for (const auto& c : n.children) {
      os << "\n";
      write_node(os, sig, c, indent + 4);
    }
    os << ")";
  }
  os << ")";
}

}  // namespace detail

/// `g` with trees sorted by name and lexicon sorted by id.
inline Grammar canonical(Grammar g) {
  std::sort(g.trees.begin(), g.trees.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  std::sort(g.lexicon.begin(), g.lexicon.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return g;
}

/// Equality up to the order of trees and lexemes.
inline bool structurally_equal(const Grammar& a, const Grammar& b) { return canonical(a) == canonical(b); }

/// Parses and validates grammar source. Throws SyntaxError or ValidationError.
inline Grammar load_grammar(std::string_view text) { return detail::GrammarParser(text).parse(); }

/// Canonical text: metadata, domains in declaration order, trees sorted by
/// name, lexicon sorted by id, then fusion rules in order.
inline std::string serialize(const Grammar& g) {
  std::ostringstream os;
  os << "(grammar " << g.name << " " << quote(g.version) << ")\n\n";
  for (const auto& d : g.domains.domains()) {
    os << "(domain " << d.name << " (";
    for (std::size_t i = 0; i < d.values.size(); ++i) os << (i ? " " : "") << d.values[i];
    os << "))\n";
  }

  std::vector<const ElementaryTree*> trees;
  for (const auto& t : g.trees) trees.push_back(&t);
  std::sort(trees.begin(), trees.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (const auto* t : trees) {
    os << "\n(tree " << t->name << " (class " << to_string(t->cls) << ")\n";
    detail::write_node(os, g.domains, t->root, 2);
    os << ")\n";
  }

  std::vector<const Lexeme*> lex;
  for (const auto& l : g.lexicon) lex.push_back(&l);
  std::sort(lex.begin(), lex.end(), [](auto* a, auto* b) { return a->id < b->id; });
  if (!lex.empty()) os << "\n";
  for (const auto* l : lex) {
    os << "(lex " << l->id << " (cat " << l->category << ")";
    for (const auto& v : l->variants) {
      os << "\n  (variant " << quote(v.surface);
      detail::write_features(os, g.domains, v.features);
      os << ")";
    }
    os << ")\n";
  }

  if (!g.fusion_rules.empty()) os << "\n";
  for (const auto& r : g.fusion_rules) {
    os << "(fuse";
    if (r.lan && g.lan_domain()) {
      os << " (lan";
      for (const auto& v : g.lan_domain()->names(*r.lan)) os << " " << v;
      os << ")";
    }
    os << " (";
    for (std::size_t i = 0; i < r.pattern.size(); ++i) os << (i ? " " : "") << quote(r.pattern[i]);
    std::string rep;
    for (std::size_t i = 0; i < r.replacement.size(); ++i) rep += (i ? " " : "") + r.replacement[i];
    os << ") " << quote(rep) << ")\n";
  }
  return os.str();
}

}  // namespace creoletag
