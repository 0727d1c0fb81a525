#pragma once

// Flat feature structures over finite attribute domains. A value is a
// non-empty subset of the attribute's domain; an absent attribute stands for
// the full domain. Cells may share a named variable, in which case they are
// constrained to one common subset.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "creoletag/errors.hpp"

namespace creoletag {

/// Subset of a finite domain, stored as a bitmask over value indices.
class ValueSet {
 public:
  constexpr ValueSet() = default;
  constexpr explicit ValueSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ValueSet full(std::size_t size) {
    return ValueSet(size >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1));
  }
  static constexpr ValueSet single(std::size_t index) { return ValueSet(std::uint64_t{1} << index); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(ValueSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr ValueSet operator&(ValueSet o) const { return ValueSet(bits_ & o.bits_); }
  constexpr ValueSet operator|(ValueSet o) const { return ValueSet(bits_ | o.bits_); }
  constexpr ValueSet& operator&=(ValueSet o) { bits_ &= o.bits_; return *this; }
  constexpr ValueSet& operator|=(ValueSet o) { bits_ |= o.bits_; return *this; }
  constexpr auto operator<=>(const ValueSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

struct AttributeDomain {
  std::string name;
  std::vector<std::string> values;

  std::optional<std::size_t> index_of(std::string_view value) const {
    auto it = std::find(values.begin(), values.end(), value);
    if (it == values.end()) return std::nullopt;
    return static_cast<std::size_t>(it - values.begin());
  }
  ValueSet full() const { return ValueSet::full(values.size()); }

  /// Subset from value symbols; throws UnknownValue.
  ValueSet subset(std::initializer_list<std::string_view> symbols) const {
    return subset(std::vector<std::string_view>(symbols));
  }
  template <typename Range>
  ValueSet subset(const Range& symbols) const {
    ValueSet out;
    for (const auto& s : symbols) {
      auto idx = index_of(s);
      if (!idx) throw UnknownValue(name, std::string(s));
      out |= ValueSet::single(*idx);
    }
    return out;
  }
  /// Value symbols of `set`, in declaration order.
  std::vector<std::string> names(ValueSet set) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (set.contains(i)) out.push_back(values[i]);
    return out;
  }

  bool operator==(const AttributeDomain&) const = default;
};

/// The ordered list of attribute declarations of a grammar.
class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<AttributeDomain> domains) {
    for (const auto& d : domains) declare(d);
  }

  /// Adds a domain; returns false when the name is already declared.
  bool declare(AttributeDomain domain) {
    if (index_.count(domain.name)) return false;
    index_.emplace(domain.name, domains_.size());
    domains_.push_back(std::move(domain));
    return true;
  }
  bool remove(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) return false;
    domains_.erase(domains_.begin() + static_cast<std::ptrdiff_t>(it->second));
    rebuild_index();
    return true;
  }

  bool declared(std::string_view name) const { return index_.count(std::string(name)) != 0; }
  const AttributeDomain* find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &domains_[it->second];
  }
  const AttributeDomain& at(std::string_view name) const {
    if (const auto* d = find(name)) return *d;
    throw UndeclaredAttribute(std::string(name));
  }
  const std::vector<AttributeDomain>& domains() const { return domains_; }

  bool operator==(const Signature& o) const { return domains_ == o.domains_; }

 private:
  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < domains_.size(); ++i) index_.emplace(domains_[i].name, i);
  }
  std::vector<AttributeDomain> domains_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A subset value, optionally tied to a variable shared with other cells.
struct ValueCell {
  ValueSet values;
  std::string var;  // empty: no variable

  bool operator==(const ValueCell&) const = default;
};

class FeatureStructure {
 public:
  using Bindings = std::map<std::string, ValueCell>;

  FeatureStructure() = default;
  explicit FeatureStructure(Bindings b) : bindings_(std::move(b)) {}

  const Bindings& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  bool has(std::string_view attr) const { return bindings_.count(std::string(attr)) != 0; }
  const ValueCell* find(std::string_view attr) const {
    auto it = bindings_.find(std::string(attr));
    return it == bindings_.end() ? nullptr : &it->second;
  }
  /// Value of `attr`, the full domain when absent.
  ValueSet value(const Signature& sig, std::string_view attr) const {
    if (const auto* c = find(attr)) return c->values;
    return sig.at(attr).full();
  }

  FeatureStructure& set(std::string attr, ValueSet values, std::string var = {}) {
    bindings_[std::move(attr)] = ValueCell{values, std::move(var)};
    return *this;
  }
  /// Binds `attr` to the named symbols of its declared domain.
  FeatureStructure& set(const Signature& sig, const std::string& attr,
                        std::initializer_list<std::string_view> symbols, std::string var = {}) {
    return set(attr, sig.at(attr).subset(symbols), std::move(var));
  }
  bool erase(const std::string& attr) { return bindings_.erase(attr) != 0; }

  /// Renames variables to _1, _2, ... in order of first appearance.
  FeatureStructure canonicalized() const {
    std::map<std::string, std::string> rename;
    Bindings out;
    for (const auto& [attr, cell] : bindings_) {
      ValueCell c = cell;
      if (!c.var.empty()) {
        auto [it, fresh] = rename.try_emplace(c.var, "_" + std::to_string(rename.size() + 1));
        c.var = it->second;
      }
      out.emplace(attr, c);
    }
    return FeatureStructure(std::move(out));
  }

  bool operator==(const FeatureStructure&) const = default;

 private:
  Bindings bindings_;
};

inline void check_declared(const Signature& sig, const FeatureStructure& fs) {
  for (const auto& [attr, cell] : fs.bindings()) (void)sig.at(attr);
}

/// Unification. Returns nullopt when some attribute intersection (possibly via
/// shared variables) is empty. Throws UndeclaredAttribute.
inline std::optional<FeatureStructure> unify(const Signature& sig, const FeatureStructure& a,
                                             const FeatureStructure& b) {
  check_declared(sig, a);
  check_declared(sig, b);

  std::map<std::string, std::string> parent;
  auto find = [&](std::string v) {
    while (parent.at(v) != v) v = parent.at(v);
    return v;
  };
  auto add = [&](const std::string& v) {
    if (!v.empty()) parent.try_emplace(v, v);
  };
  auto join = [&](const std::string& x, const std::string& y) {
    auto rx = find(x), ry = find(y);
    if (rx == ry) return;
    // smallest name becomes the representative so the result is symmetric
    if (ry < rx) std::swap(rx, ry);
    parent[ry] = rx;
  };

  FeatureStructure::Bindings merged;
  std::set<std::string> attrs;
  for (const auto& [k, _] : a.bindings()) attrs.insert(k);
  for (const auto& [k, _] : b.bindings()) attrs.insert(k);

  for (const auto& attr : attrs) {
    const ValueCell* ca = a.find(attr);
    const ValueCell* cb = b.find(attr);
    ValueCell cell;
    cell.values = a.value(sig, attr) & b.value(sig, attr);
    if (ca) add(ca->var);
    if (cb) add(cb->var);
    if (ca && cb && !ca->var.empty() && !cb->var.empty()) join(ca->var, cb->var);
    cell.var = (ca && !ca->var.empty()) ? ca->var : (cb ? cb->var : std::string{});
    merged.emplace(attr, cell);
  }
  std::map<std::string, ValueSet> class_value;
  for (auto& [attr, cell] : merged) {
    if (cell.var.empty()) continue;
    cell.var = find(cell.var);
    auto [it, fresh] = class_value.try_emplace(cell.var, cell.values);
    if (!fresh) it->second &= cell.values;
  }
  for (auto& [attr, cell] : merged) {
    if (!cell.var.empty()) cell.values = class_value.at(cell.var);
    if (cell.values.empty()) return std::nullopt;
  }
  return FeatureStructure(std::move(merged));
}

/// True iff every attribute bound in `general` has, in `specific`, a value
/// that is a subset of general's value.
inline bool subsumes(const Signature& sig, const FeatureStructure& general,
                     const FeatureStructure& specific) {
  check_declared(sig, general);
  check_declared(sig, specific);
  for (const auto& [attr, cell] : general.bindings())
    if (!specific.value(sig, attr).subset_of(cell.values)) return false;
  return true;
}

inline FeatureStructure erase_attribute(FeatureStructure fs, const std::string& attr) {
  fs.erase(attr);
  return fs;
}

inline std::string format_values(const Signature& sig, const std::string& attr, ValueSet values) {
  std::string out = "{";
  const auto* dom = sig.find(attr);
  if (dom) {
    bool first = true;
    for (const auto& n : dom->names(values)) {
      if (!first) out += ",";
      out += n;
      first = false;
    }
  } else {
    out += "#" + std::to_string(values.bits());
  }
  return out + "}";
}

/// Human-readable form, e.g. "{lan:{GP,MQ}, spe:{+}}".
inline std::string to_string(const Signature& sig, const FeatureStructure& fs) {
  std::string out = "{";
  bool first = true;
  for (const auto& [attr, cell] : fs.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += attr + ":";
    if (!cell.var.empty()) out += "$" + cell.var + "=";
    out += format_values(sig, attr, cell.values);
  }
  return out + "}";
}

}  // namespace creoletag
