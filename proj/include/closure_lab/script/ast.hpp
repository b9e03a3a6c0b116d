#pragma once

/// Syntax tree of .cca scripts and its canonical printer.

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace closure_lab::script {

struct Location {
  int line = 1;
  int column = 1;

  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntegerLit {
  long long value;
};
struct StringLit {
  std::string value;
};
struct Name {
  std::string id;
};
struct ListExpr {
  std::vector<ExprPtr> items;
};
struct NamedArg {
  std::string name;
  ExprPtr value;
  Location loc;
};
struct Call {
  std::string callee;
  std::vector<ExprPtr> args;
  std::vector<NamedArg> named;
};
struct Unary {
  char op;  // '-'
  ExprPtr operand;
};
struct Binary {
  char op;  // + - * / ^
  ExprPtr lhs, rhs;
};

struct Expr {
  std::variant<IntegerLit, StringLit, Name, ListExpr, Call, Unary, Binary> node;
  Location loc;
};

enum class BindKind { ring, ideal, poly, let };

inline std::string to_string(BindKind k) {
  switch (k) {
    case BindKind::ring: return "ring";
    case BindKind::ideal: return "ideal";
    case BindKind::poly: return "poly";
    case BindKind::let: return "let";
  }
  return "?";
}

struct Binding {
  BindKind kind;
  std::string name;
  ExprPtr value;
};
struct Assertion {
  ExprPtr lhs;
  std::string op;  // "", "==" or "!="
  ExprPtr rhs;     // null when op is empty
};
struct ReportStmt {
  ExprPtr value;
};

struct Statement {
  std::variant<Binding, Assertion, ReportStmt> node;
  Location loc;
};

struct Script {
  std::vector<Statement> statements;
};

// Structural equality, ignoring locations.

bool equal(const Expr& a, const Expr& b);

inline bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return equal(*a, *b);
}

inline bool equal(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

inline bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IntegerLit>) return x.value == y.value;
        if constexpr (std::is_same_v<T, StringLit>) return x.value == y.value;
        if constexpr (std::is_same_v<T, Name>) return x.id == y.id;
        if constexpr (std::is_same_v<T, ListExpr>) return equal(x.items, y.items);
        if constexpr (std::is_same_v<T, Call>) {
          if (x.callee != y.callee || !equal(x.args, y.args) || x.named.size() != y.named.size()) return false;
          for (std::size_t i = 0; i < x.named.size(); ++i) {
            if (x.named[i].name != y.named[i].name || !equal(x.named[i].value, y.named[i].value)) return false;
          }
          return true;
        }
        if constexpr (std::is_same_v<T, Unary>) return x.op == y.op && equal(x.operand, y.operand);
        if constexpr (std::is_same_v<T, Binary>) return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
      },
      a.node);
}

inline bool equal(const Statement& a, const Statement& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* x = std::get_if<Binding>(&a.node)) {
    const auto& y = std::get<Binding>(b.node);
    return x->kind == y.kind && x->name == y.name && equal(x->value, y.value);
  }
  if (const auto* x = std::get_if<Assertion>(&a.node)) {
    const auto& y = std::get<Assertion>(b.node);
    return x->op == y.op && equal(x->lhs, y.lhs) && equal(x->rhs, y.rhs);
  }
  return equal(std::get<ReportStmt>(a.node).value, std::get<ReportStmt>(b.node).value);
}

inline bool equal(const Script& a, const Script& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    if (!equal(a.statements[i], b.statements[i])) return false;
  }
  return true;
}

// Printer. Parentheses only where precedence demands them.

namespace detail {

inline int precedence(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    switch (b->op) {
      case '+':
      case '-': return 1;
      case '*':
      case '/': return 2;
      default: return 4;
    }
  }
  if (std::holds_alternative<Unary>(e.node)) return 3;
  return 5;
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

std::string print(const Expr& e);

inline std::string print(const ExprPtr& e) { return print(*e); }

inline std::string print(const Expr& e) {
  using detail::precedence;
  auto wrap = [](const Expr& x, bool parens) { return parens ? "(" + print(x) + ")" : print(x); };
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntegerLit>) return std::to_string(x.value);
        if constexpr (std::is_same_v<T, StringLit>) return detail::quote(x.value);
        if constexpr (std::is_same_v<T, Name>) return x.id;
        if constexpr (std::is_same_v<T, ListExpr>) {
          std::string out = "[";
          for (std::size_t i = 0; i < x.items.size(); ++i) out += (i ? ", " : "") + print(x.items[i]);
          return out + "]";
        }
        if constexpr (std::is_same_v<T, Call>) {
          std::string out = x.callee + "(";
          bool first = true;
          for (const auto& a : x.args) {
            out += (first ? "" : ", ") + print(a);
            first = false;
          }
          for (const auto& n : x.named) {
            out += (first ? "" : ", ") + n.name + "=" + print(n.value);
            first = false;
          }
          return out + ")";
        }
        if constexpr (std::is_same_v<T, Unary>) {
          return std::string(1, x.op) + wrap(*x.operand, precedence(*x.operand) < 3);
        }
        if constexpr (std::is_same_v<T, Binary>) {
          const int p = precedence(e);
          if (x.op == '^') {
            // right associative; the base must be atomic
            return wrap(*x.lhs, precedence(*x.lhs) <= 4) + "^" + wrap(*x.rhs, precedence(*x.rhs) < 4);
          }
          std::string sep = (p == 1) ? std::string(" ") + x.op + " " : std::string(1, x.op);
          return wrap(*x.lhs, precedence(*x.lhs) < p) + sep + wrap(*x.rhs, precedence(*x.rhs) <= p);
        }
      },
      e.node);
}

inline std::string print(const Statement& s) {
  if (const auto* b = std::get_if<Binding>(&s.node)) {
    return to_string(b->kind) + " " + b->name + " = " + print(b->value) + ";";
  }
  if (const auto* a = std::get_if<Assertion>(&s.node)) {
    std::string out = "assert " + print(a->lhs);
    if (!a->op.empty()) out += " " + a->op + " " + print(a->rhs);
    return out + ";";
  }
  return "report " + print(std::get<ReportStmt>(s.node).value) + ";";
}

inline std::string print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += print(st) + "\n";
  return out;
}

}  // namespace closure_lab::script
