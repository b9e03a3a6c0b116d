#pragma once

/// Lexer and LL(1) recursive-descent parser for .cca scripts.
///
///   script     := statement*
///   statement  := ('ring' | 'ideal' | 'poly' | 'let') NAME '=' expr ';'
///               | 'assert' expr [('==' | '!=') expr] ';'
///               | 'report' expr ';'
///   expr       := term (('+' | '-') term)*
///   term       := unary (('*' | '/') unary)*
///   unary      := '-' unary | power
///   power      := primary ['^' power]
///   primary    := INT | STRING | '(' expr ')' | '[' [expr (',' expr)*] ']'
///               | NAME ['(' [arg (',' arg)*] ')']
///   arg        := NAME '=' expr | expr          (named arguments last)
///
/// Comments run from '#' or '//' to the end of the line.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "closure_lab/errors.hpp"
#include "closure_lab/script/ast.hpp"

namespace closure_lab::script {

/// Syntax or static error at a source location.
class ScriptError : public Error {
 public:
  ScriptError(const std::string& what, Location loc) : Error(loc.to_string() + ": " + what), loc_(loc) {}
  const Location& location() const noexcept { return loc_; }

 private:
  Location loc_;
};

enum class Tok { end, name, integer, string, punct };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  Location loc;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Location loc{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::name, std::string(src.substr(i, j - i)), loc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::integer, std::string(src.substr(i, j - i)), loc});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::string text;
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') {
        if (src[j] == '\\' && j + 1 < src.size()) ++j;
        text += src[j++];
      }
      if (j >= src.size() || src[j] != '"') throw ScriptError("unterminated string literal", loc);
      out.push_back({Tok::string, text, loc});
      advance(j + 1 - i);
      continue;
    }
    if ((c == '=' || c == '!') && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::punct, std::string(src.substr(i, 2)), loc});
      advance(2);
      continue;
    }
    if (std::string_view("()[],;=+-*/^").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), loc});
      advance(1);
      continue;
    }
    throw ScriptError(std::string("unexpected character '") + c + "'", loc);
  }
  out.push_back({Tok::end, "", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Script parse_script() {
    Script s;
    while (peek().kind != Tok::end) s.statements.push_back(statement());
    return s;
  }

  ExprPtr parse_expression() {
    auto e = expr();
    if (peek().kind != Tok::end) fail("expected end of input");
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at(const char* punct) const { return peek().kind == Tok::punct && peek().text == punct; }

  [[noreturn]] void fail(const std::string& what) const {
    const auto& t = peek();
    std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ScriptError(what + ", found " + found, t.loc);
  }

  void expect(const char* punct) {
    if (!at(punct)) fail(std::string("expected '") + punct + "'");
    take();
  }

  std::string expect_name(const char* what) {
    if (peek().kind != Tok::name) fail(std::string("expected ") + what);
    return take().text;
  }

  Statement statement() {
    const Token& t = peek();
    Location loc = t.loc;
    if (t.kind != Tok::name) fail("expected a statement (ring, ideal, poly, let, assert or report)");
    if (t.text == "ring" || t.text == "ideal" || t.text == "poly" || t.text == "let") {
      BindKind kind = t.text == "ring"    ? BindKind::ring
                      : t.text == "ideal" ? BindKind::ideal
                      : t.text == "poly"  ? BindKind::poly
                                          : BindKind::let;
      take();
      std::string name = expect_name("a name to bind");
      expect("=");
      auto value = expr();
      expect(";");
      return {Binding{kind, std::move(name), std::move(value)}, loc};
    }
    if (t.text == "assert") {
      take();
      Assertion a;
      a.lhs = expr();
      if (at("==") || at("!=")) {
        a.op = take().text;
        a.rhs = expr();
      }
      expect(";");
      return {std::move(a), loc};
    }
    if (t.text == "report") {
      take();
      auto value = expr();
      expect(";");
      return {ReportStmt{std::move(value)}, loc};
    }
    fail("expected a statement (ring, ideal, poly, let, assert or report)");
  }

  static ExprPtr make(Location loc, auto node) {
    return std::make_shared<const Expr>(Expr{std::move(node), loc});
  }

  ExprPtr expr() {
    auto lhs = term();
    while (at("+") || at("-")) {
      Location loc = peek().loc;
      char op = take().text[0];
      lhs = make(loc, Binary{op, lhs, term()});
    }
    return lhs;
  }

  ExprPtr term() {
    auto lhs = unary();
    while (at("*") || at("/")) {
      Location loc = peek().loc;
      char op = take().text[0];
      lhs = make(loc, Binary{op, lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at("-")) {
      Location loc = take().loc;
      return make(loc, Unary{'-', unary()});
    }
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    if (at("^")) {
      Location loc = take().loc;
      return make(loc, Binary{'^', base, power()});
    }
    return base;
  }

  ExprPtr primary() {
    const Token& t = peek();
    Location loc = t.loc;
    if (t.kind == Tok::integer) {
      long long v = 0;
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc()) throw ScriptError("integer literal too large: " + t.text, loc);
      take();
      return make(loc, IntegerLit{v});
    }
    if (t.kind == Tok::string) return make(loc, StringLit{take().text});
    if (at("(")) {
      take();
      auto e = expr();
      expect(")");
      return e;
    }
    if (at("[")) {
      take();
      ListExpr list;
      if (!at("]")) {
        list.items.push_back(expr());
        while (at(",")) {
          take();
          list.items.push_back(expr());
        }
      }
      expect("]");
      return make(loc, std::move(list));
    }
    if (t.kind == Tok::name) {
      std::string id = take().text;
      if (!at("(")) return make(loc, Name{std::move(id)});
      take();
      Call call{std::move(id), {}, {}};
      if (!at(")")) {
        argument(call);
        while (at(",")) {
          take();
          argument(call);
        }
      }
      if (!at(")")) fail("expected ',' or ')' in argument list");
      take();
      return make(loc, std::move(call));
    }
    fail("expected an expression");
  }

  void argument(Call& call) {
    if (peek().kind == Tok::name && peek(1).kind == Tok::punct && peek(1).text == "=") {
      Location loc = peek().loc;
      std::string name = take().text;
      take();
      for (const auto& n : call.named) {
        if (n.name == name) throw ScriptError("duplicate named argument '" + name + "'", loc);
      }
      call.named.push_back({std::move(name), expr(), loc});
      return;
    }
    if (!call.named.empty()) fail("positional argument after a named argument");
    call.args.push_back(expr());
  }
};

inline Script parse_script(std::string_view src) { return Parser(src).parse_script(); }

}  // namespace closure_lab::script
