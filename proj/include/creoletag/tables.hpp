#pragma once

// Noun-phrase and tense/aspect paradigm grids regenerated cell by cell.

#include <string>
#include <vector>

#include "creoletag/generator.hpp"

namespace creoletag {

struct TableRow {
  std::vector<std::string> labels;  // leading key columns
  SemSpec spec;                     // without lan; one cell per dialect
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_tsv() const {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "\t" : "") + cells[i];
      out += "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
};

inline std::vector<TableRow> np_rows() {
  auto np = [](std::string lex, std::string nbr, bool spe, bool dem) {
    SemSpec s;
    s.args.push_back(NPSpec{std::move(lex), std::move(nbr), spe, dem, std::nullopt});
    return s;
  };
  std::vector<TableRow> rows;
  rows.push_back({{"generic", "-", "PERSON"}, np("PERSON", "pl", false, false)});
  rows.push_back({{"sg", "indefinite", "PERSON"}, np("PERSON", "sg", false, false)});
  for (const char* n : {"PERSON", "TABLE", "DOG", "BIRD"}) rows.push_back({{"sg", "specific", n}, np(n, "sg", true, false)});
  for (const char* n : {"PERSON", "TABLE"}) rows.push_back({{"sg", "demonstrative", n}, np(n, "sg", true, true)});
  rows.push_back({{"pl", "indefinite", "PERSON"}, np("PERSON", "pl", false, false)});
  for (const char* n : {"PERSON", "TABLE", "DOG", "BIRD"}) rows.push_back({{"pl", "specific", n}, np(n, "pl", true, false)});
  for (const char* n : {"PERSON", "TABLE"}) rows.push_back({{"pl", "demonstrative", n}, np(n, "pl", true, true)});
  return rows;
}

inline std::vector<TableRow> tma_rows() {
  auto v = [](bool pas, bool psp, bool prx, std::string asp, bool cnd) {
    SemSpec s;
    s.pred = "DANCE";
    s.tma = TMASpec{pas, psp, prx, std::move(asp), cnd};
    return s;
  };
  return {
      {{"Accomplished/Aoristic"}, v(false, false, false, "none", false)},
      {{"Unaccomplished/Present"}, v(false, false, false, "imp", false)},
      {{"Frequentative"}, v(false, false, false, "frq", false)},
      {{"Progressive"}, v(false, false, false, "prg", false)},
      {{"Near Future"}, v(false, false, true, "none", false)},
      {{"Future"}, v(false, true, false, "none", false)},
      {{"Unaccomplished Future (seldom)"}, v(false, true, false, "imp", false)},
      {{"Accomplished past (pluperfect)"}, v(true, false, false, "none", false)},
      {{"Unaccomplished past"}, v(true, false, false, "imp", false)},
      {{"Irrealis"}, v(true, true, false, "none", false)},
      {{"Irrealis unaccomplished"}, v(true, true, false, "imp", false)},
      {{"Conditional/Optative"}, v(false, false, false, "none", true)},
  };
}

/// Every row spec of both grids.
inline std::vector<SemSpec> golden_corpus() {
  std::vector<SemSpec> out;
  for (const auto& r : np_rows()) out.push_back(r.spec);
  for (const auto& r : tma_rows()) out.push_back(r.spec);
  return out;
}

/// Cell text for one dialect: each canonical realization rendered with its
/// alternatives, several joined by " | ".
inline std::string table_cell(const Grammar& g, const SemSpec& spec, const std::string& dialect) {
  auto rs = generate(g, spec.with_lan({dialect}));
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) out += (i ? " | " : "") + render_cell(rs[i].tokens, rs[i].alternatives);
  return out;
}

inline Table build_table(const Grammar& g, const std::vector<TableRow>& rows, std::vector<std::string> keys) {
  const auto* lan = g.lan_domain();
  if (!lan) throw Error("paradigm tables need a lan domain");
  Table t;
  t.header = std::move(keys);
  t.header.insert(t.header.end(), lan->values.begin(), lan->values.end());
  for (const auto& row : rows) {
    std::vector<std::string> cells = row.labels;
    for (const auto& d : lan->values) {
      try {
        cells.push_back(table_cell(g, row.spec, d));
      } catch (const NoRealization&) {
        std::string name;
        for (const auto& l : row.labels) name += (name.empty() ? "" : " ") + l;
        throw MissingCell(name, d);
      }
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

inline Table table_np(const Grammar& g) { return build_table(g, np_rows(), {"number", "degree", "noun"}); }
inline Table table_tma(const Grammar& g) { return build_table(g, tma_rows(), {"row"}); }

}  // namespace creoletag
