#pragma once

// JSON forms of SemSpec (input) and of realizations and analyses (output).
// Field names mirror the C++ structures; see docs/semspec.schema.json.

#include <string>
#include <vector>

#include "json.hpp"

#include "creoletag/generator.hpp"
#include "creoletag/recognizer.hpp"

namespace creoletag {

namespace detail {

inline void only_keys(const nlohmann::json& j, std::initializer_list<const char*> keys, const char* what) {
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* allowed : keys) ok = ok || k == allowed;
    if (!ok) throw InvalidSpec(std::string("unknown field '") + k + "' in " + what);
  }
}

template <typename T>
T field(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidSpec(std::string("bad value for '") + key + "'");
  }
}

}  // namespace detail

/// Parses a SemSpec document; throws InvalidSpec on malformed input.
inline SemSpec semspec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidSpec("semantic spec must be a JSON object");
  detail::only_keys(j, {"pred", "args", "tma", "lan"}, "spec");
  SemSpec s;
  if (j.contains("pred") && !j.at("pred").is_null()) s.pred = detail::field<std::string>(j, "pred", "");
  if (j.contains("args")) {
    if (!j.at("args").is_array()) throw InvalidSpec("args must be an array");
    for (const auto& a : j.at("args")) {
      if (!a.is_object()) throw InvalidSpec("each arg must be an object");
      detail::only_keys(a, {"lexeme", "nbr", "spe", "dem", "complement"}, "arg");
      NPSpec np;
      np.lexeme = detail::field<std::string>(a, "lexeme", "");
      np.nbr = detail::field<std::string>(a, "nbr", "sg");
      np.spe = detail::field<bool>(a, "spe", false);
      np.dem = detail::field<bool>(a, "dem", false);
      if (a.contains("complement") && !a.at("complement").is_null())
        np.complement = detail::field<std::string>(a, "complement", "");
      s.args.push_back(np.normalize());
    }
  }
  if (j.contains("tma")) {
    const auto& t = j.at("tma");
    if (!t.is_object()) throw InvalidSpec("tma must be an object");
    detail::only_keys(t, {"pas", "psp", "prx", "asp", "cnd"}, "tma");
    s.tma.pas = detail::field<bool>(t, "pas", false);
    s.tma.psp = detail::field<bool>(t, "psp", false);
    s.tma.prx = detail::field<bool>(t, "prx", false);
    s.tma.asp = detail::field<std::string>(t, "asp", "none");
    s.tma.cnd = detail::field<bool>(t, "cnd", false);
  }
  if (j.contains("lan") && !j.at("lan").is_null()) {
    const auto& l = j.at("lan");
    if (l.is_string()) s.lan = std::vector<std::string>{l.get<std::string>()};
    else s.lan = detail::field<std::vector<std::string>>(j, "lan", {});
  }
  check_spec(s);
  return s;
}

inline SemSpec semspec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidSpec(std::string("malformed JSON: ") + e.what());
  }
  return semspec_from_json(j);
}

inline nlohmann::json semspec_to_json(const SemSpec& s) {
  nlohmann::json j;
  j["pred"] = s.pred ? nlohmann::json(*s.pred) : nlohmann::json(nullptr);
  j["args"] = nlohmann::json::array();
  for (const auto& a : s.args) {
    nlohmann::json aj{{"lexeme", a.lexeme}, {"nbr", a.nbr}, {"spe", a.spe}, {"dem", a.dem}};
    if (a.complement) aj["complement"] = *a.complement;
    j["args"].push_back(aj);
  }
  j["tma"] = {{"pas", s.tma.pas}, {"psp", s.tma.psp}, {"prx", s.tma.prx}, {"asp", s.tma.asp}, {"cnd", s.tma.cnd}};
  if (s.lan) j["lan"] = *s.lan;
  return j;
}

inline std::vector<std::string> lan_names(const Grammar& g, ValueSet v) {
  if (const auto* d = g.lan_domain()) return d->names(v);
  return {};
}

inline nlohmann::json analysis_to_json(const Grammar& g, const Analysis& a) {
  nlohmann::json feats = nlohmann::json::object();
  for (const auto& [attr, cell] : a.features.bindings())
    if (const auto* dom = g.domains.find(attr)) feats[attr] = dom->names(cell.values);
  nlohmann::json per = nlohmann::json::array();
  for (auto v : a.per_token_lan) per.push_back(lan_names(g, v));
  return {{"tokens", a.tokens},          {"lan_set", lan_names(g, a.lan_set)}, {"per_token_lan", per},
          {"mixed", a.mixed},            {"features", feats},                  {"trace", a.trace.to_string()}};
}

}  // namespace creoletag
