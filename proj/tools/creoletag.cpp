// creoletag: generation, paradigm tables, dialect specialization, grammar
// checking and recognition over the embedded Creole grammar.
//
// Exit codes: 0 success, 1 no result / table mismatch, 2 validation
// findings, 3 bad input (usage, unreadable file, syntax error, bad spec).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "creoletag/grammar_io.hpp"
#include "creoletag/recognizer.hpp"
#include "creoletag/semspec_json.hpp"
#include "creoletag/shipped.hpp"
#include "creoletag/specializer.hpp"
#include "creoletag/tables.hpp"

using namespace creoletag;

namespace {

constexpr int kOk = 0;
constexpr int kNoResult = 1;
constexpr int kFindings = 2;
constexpr int kBadInput = 3;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Grammar grammar_from(const std::string& flag) {
  std::string path = flag;
  if (path.empty())
    if (const char* env = std::getenv("CREOLETAG_GRAMMAR")) path = env;
  if (path.empty()) return shipped_grammar();
  return load_grammar(read_file(path));
}

std::vector<std::string> split_words(const std::vector<std::string>& parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) {
    std::istringstream in(p);
    for (std::string w; in >> w;) out.push_back(w);
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

int cmd_generate(const std::string& grammar, const std::string& sem, const std::string& lan) {
  Grammar g = grammar_from(grammar);
  SemSpec spec = semspec_from_json(read_file(sem));
  if (!lan.empty()) spec.lan = std::vector<std::string>{lan};
  for (const auto& r : generate(g, spec)) {
    std::cout << r.text() << '\t' << join(lan_names(g, r.lan_set), ",");
    if (!r.alternatives.empty()) {
      std::vector<std::string> alts;
      for (const auto& a : r.alternatives) alts.push_back(Realization::join(a));
      std::cout << '\t' << join(alts, "|");
    }
    std::cout << '\n';
  }
  return kOk;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

int cmd_tables(const std::string& grammar, const std::string& which, const std::string& golden) {
  Grammar g = grammar_from(grammar);
  std::string expected;
  if (!golden.empty()) expected = read_file(golden);
  std::string tsv;
  try {
    tsv = (which == "np" ? table_np(g) : table_tma(g)).to_tsv();
  } catch (const MissingCell& e) {
    std::cerr << "missing cell: row '" << e.row << "', dialect " << e.dialect << '\n';
    return kNoResult;
  }
  std::cout << tsv;
  if (golden.empty() || tsv == expected) return kOk;

  auto got = lines_of(tsv), want = lines_of(expected);
  for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
    std::vector<std::string> a, b;
    if (i < got.size()) CLI::detail::split(got[i], '\t').swap(a);
    if (i < want.size()) CLI::detail::split(want[i], '\t').swap(b);
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
      std::string x = k < a.size() ? a[k] : "", y = k < b.size() ? b[k] : "";
      if (x != y)
        std::cerr << "mismatch at line " << i + 1 << ", column " << k + 1 << ": got '" << x << "', expected '" << y
                  << "'\n";
    }
  }
  if (got == want) std::cerr << "mismatch in line endings or trailing bytes\n";
  return kNoResult;
}

int cmd_specialize(const std::string& grammar, const std::string& lan, std::string out, bool verbose) {
  Grammar g = grammar_from(grammar);
  if (g.lan_domain() && !g.lan_domain()->index_of(lan)) throw BadInput("unknown dialect " + lan);
  std::vector<std::string> dropped;
  Grammar s = specialize(g, lan, &dropped);
  if (verbose)
    for (const auto& d : dropped) std::cerr << "dropped " << d << '\n';
  if (out.empty()) out = s.name + ".fstag";
  std::ofstream f(out, std::ios::binary);
  if (!f) throw BadInput("cannot write " + out);
  f << serialize(s);
  return kOk;
}

int cmd_check(const std::string& path) {
  std::string text = read_file(path);
  try {
    load_grammar(text);
  } catch (const ValidationError& e) {
    for (const auto& f : e.findings) std::cout << f.to_string() << '\n';
    return kFindings;
  }
  std::cout << "ok\n";
  return kOk;
}

int cmd_recognize(const std::string& grammar, const std::string& goal, const std::vector<std::string>& words) {
  Grammar g = grammar_from(grammar);
  auto tokens = split_words(words);
  if (tokens.empty()) throw BadInput("no input tokens");
  for (const auto& a : recognize(g, tokens, goal)) std::cout << analysis_to_json(g, a).dump() << '\n';
  return kOk;
}

int cmd_identify(const std::string& grammar, const std::vector<std::string>& words) {
  Grammar g = grammar_from(grammar);
  auto tokens = split_words(words);
  if (tokens.empty()) throw BadInput("no input tokens");
  auto rep = identify_dialect(g, tokens);
  nlohmann::json j{{"tokens", rep.tokens}, {"mixed", rep.mixed}};
  if (rep.mixed) {
    nlohmann::json per = nlohmann::json::array();
    for (auto v : rep.per_token_lan) per.push_back(lan_names(g, v));
    j["per_token_lan"] = per;
  } else {
    j["lan_set"] = lan_names(g, rep.lan_set);
  }
  std::cout << j.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multidialectal FS-LTAG toolkit for French-based Creoles"};
  app.require_subcommand(1);
  std::string grammar;
  app.add_option("--grammar", grammar, "grammar file (default: $CREOLETAG_GRAMMAR, else embedded)");

  std::string sem, lan, which, golden, out, goal = "NP", check_path;
  bool verbose = false;
  std::vector<std::string> words;

  auto* gen = app.add_subcommand("generate", "realize a JSON semantic spec");
  gen->add_option("--sem", sem, "spec file")->required();
  gen->add_option("--lan", lan, "restrict to one dialect");

  auto* tab = app.add_subcommand("tables", "regenerate a paradigm grid as TSV");
  tab->add_option("which", which, "np or tma")->required()->check(CLI::IsMember({"np", "tma"}));
  tab->add_option("--golden", golden, "compare with this file");

  auto* spc = app.add_subcommand("specialize", "project the grammar onto one dialect");
  spc->add_option("--lan", lan, "dialect")->required();
  spc->add_option("-o,--output", out, "output file (default <name>.<dialect>.fstag)");
  spc->add_flag("-v,--verbose", verbose, "list dropped items");

  auto* chk = app.add_subcommand("check", "validate a grammar file");
  chk->add_option("file", check_path, "grammar file")->required();

  auto* rec = app.add_subcommand("recognize", "analyses of a token string, as JSON lines");
  rec->add_option("--goal", goal, "NP or S")->check(CLI::IsMember({"NP", "S"}));
  rec->add_option("tokens", words, "input")->required();

  auto* idf = app.add_subcommand("identify", "dialects consistent with a token string");
  idf->add_option("tokens", words, "input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen) return cmd_generate(grammar, sem, lan);
    if (*tab) return cmd_tables(grammar, which, golden);
    if (*spc) return cmd_specialize(grammar, lan, out, verbose);
    if (*chk) return cmd_check(check_path);
    if (*rec) return cmd_recognize(grammar, goal, words);
    if (*idf) return cmd_identify(grammar, words);
  } catch (const NoRealization& e) {
    std::cerr << "no realization: " << e.what() << '\n';
    return kNoResult;
  } catch (const NoAnalysis& e) {
    std::cerr << "no analysis: " << e.what() << '\n';
    return kNoResult;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ValidationError& e) {
    std::cerr << "invalid grammar: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidSpec& e) {
    std::cerr << "invalid spec: " << e.what() << '\n';
    return kBadInput;
  } catch (const BadInput& e) {
    std::cerr << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
