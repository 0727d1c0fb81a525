// Prints the definite-article grid: singular specific NPs for each noun and dialect,
// with the cns/nas features of the noun that select the article.

#include <iomanip>
#include <iostream>

#include "creoletag/generator.hpp"
#include "creoletag/shipped.hpp"

using namespace creoletag;

// setw counts bytes; pad by code points instead
static std::string pad(const std::string& s, std::size_t width) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return s + std::string(width > n ? width - n : 1, ' ');
}

int main() {
  const Grammar& g = shipped_grammar();
  const auto& dialects = g.lan_domain()->values;

  std::cout << std::left << std::setw(8) << "noun" << std::setw(10) << "cns/nas";
  for (const auto& d : dialects) std::cout << std::setw(12) << d;
  std::cout << '\n';

  for (const char* noun : {"PERSON", "TABLE", "DOG", "BIRD"}) {
    const auto& v = g.find_lexeme(noun)->variants.front().features;
    auto sign = [&](const char* attr) { return g.domains.at(attr).names(v.value(g.domains, attr)).front(); };
    std::cout << std::setw(8) << noun << std::setw(10) << (sign("cns") + "/" + sign("nas"));

    SemSpec spec;
    spec.args.push_back(NPSpec{noun, "sg", true, false, std::nullopt});
    for (const auto& d : dialects) {
      auto rs = generate(g, spec.with_lan({d}));
      std::cout << pad(rs.front().text(), 12);
    }
    std::cout << '\n';
  }
}
