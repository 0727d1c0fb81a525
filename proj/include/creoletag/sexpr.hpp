#pragma once

// Minimal s-expression reader: lists, bare symbols, double-quoted strings and
// `;` line comments. Positions are 1-based line/column in bytes.

#include <string>
#include <string_view>
#include <vector>

#include "creoletag/errors.hpp"

namespace creoletag {

class SyntaxError : public Error {
 public:
  SyntaxError(int line_, int column_, const std::string& msg)
      : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg), line(line_), column(column_) {}
  int line;
  int column;
};

struct SExpr {
  enum class Kind { list, symbol, string };
  Kind kind = Kind::list;
  std::string text;
  std::vector<SExpr> items;
  int line = 0;
  int column = 0;

  bool is_list() const { return kind == Kind::list; }
  bool is_symbol() const { return kind == Kind::symbol; }
  bool is_string() const { return kind == Kind::string; }
  bool is_symbol(std::string_view s) const { return is_symbol() && text == s; }
  /// Head symbol of a list form, or empty.
  std::string_view head() const {
    if (is_list() && !items.empty() && items.front().is_symbol()) return items.front().text;
    return {};
  }
};

class SExprReader {
 public:
  explicit SExprReader(std::string_view src) : src_(src) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip_space();
    while (pos_ < src_.size()) {
      out.push_back(read());
      skip_space();
    }
    return out;
  }

 private:
  char peek() const { return src_[pos_]; }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ';') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read() {
    SExpr e;
    e.line = line_;
    e.column = col_;
    char c = peek();
    if (c == '(') {
      advance();
      e.kind = SExpr::Kind::list;
      skip_space();
      while (true) {
        if (pos_ >= src_.size()) throw SyntaxError(e.line, e.column, "unterminated list");
        if (peek() == ')') {
          advance();
          break;
        }
        e.items.push_back(read());
        skip_space();
      }
      return e;
    }
    if (c == ')') throw SyntaxError(line_, col_, "unexpected ')'");
    if (c == '"') {
      advance();
      e.kind = SExpr::Kind::string;
      while (true) {
        if (pos_ >= src_.size() || peek() == '\n') throw SyntaxError(e.line, e.column, "unterminated string");
        char ch = peek();
        if (ch == '"') {
          advance();
          break;
        }
        if (ch == '\\') {
          advance();
          if (pos_ >= src_.size()) throw SyntaxError(e.line, e.column, "unterminated string");
          ch = peek();
        }
        e.text += ch;
        advance();
      }
      return e;
    }
    e.kind = SExpr::Kind::symbol;
    while (pos_ < src_.size()) {
      char ch = peek();
      if (ch == '(' || ch == ')' || ch == '"' || ch == ';' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
        break;
      e.text += ch;
      advance();
    }
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

inline std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace creoletag
