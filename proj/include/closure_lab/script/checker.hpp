#pragma once

/// Builtin signatures and the static pass over a parsed script: names are
/// defined before use, calls have valid arity and named arguments, and
/// polynomial variables belong to the ring in scope.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "closure_lab/script/parser.hpp"

namespace closure_lab::script {

/// `context` means argument 0 supplies the ring for the other arguments.
/// `symbols` lists argument positions that hold bare variable names.
/// `ring_valued` results carry the variables of argument 0 (or of `symbols`).
struct BuiltinSignature {
  std::string name;
  int min_args;
  int max_args;  // -1: unbounded
  std::vector<std::string> named;
  bool context = true;
  std::vector<int> symbols;
  bool ring_valued = false;
};

inline const std::vector<BuiltinSignature>& builtins() {
  static const std::vector<BuiltinSignature> table = {
      {"GF", 1, 1, {}, false, {}, false},
      {"poly", 2, 2, {"weights"}, false, {1}, true},
      {"toric", 3, 3, {}, false, {2}, true},
      {"quotient", 2, 2, {}, true, {}, true},
      {"ideal", 0, -1, {}, true, {}, true},
      {"sequence", 2, -1, {}, true, {}, true},
      {"maximal", 1, 1, {}, true, {}, true},
      {"element", 2, 2, {}, true, {}, true},
      {"generators", 1, 1, {}, true, {}, true},
      {"sum", 2, 2, {}, true, {}, true},
      {"product", 2, 2, {}, true, {}, true},
      {"power", 2, 2, {}, true, {}, true},
      {"colon", 2, 2, {}, true, {}, true},
      {"colon_ideal", 2, 2, {}, true, {}, true},
      {"saturate", 2, 2, {}, true, {}, true},
      {"intersect", 2, 2, {}, true, {}, true},
      {"infty", 2, 2, {}, true, {}, true},
      {"lim", 2, 2, {}, true, {}, true},
      {"closure", 1, 1, {"assume_equidim"}, true, {}, true},
      {"random_reduction", 1, 1, {}, true, {}, true},
      {"minimal_primes", 1, 1, {}, true, {}, true},
      {"colength", 1, 1, {}, true, {}, false},
      {"dim", 1, 1, {}, true, {}, false},
      {"mult", 1, 1, {}, true, {}, false},
      {"mult_hs", 1, 1, {}, true, {}, false},
      {"mult_param", 2, 2, {}, true, {}, false},
      {"contains", 2, 2, {}, true, {}, false},
      {"subset", 2, 2, {}, true, {}, false},
      {"is_integrally_closed", 1, 1, {"assume_equidim"}, true, {}, false},
      {"rees_member", 2, 2, {"assume_equidim"}, true, {}, false},
      {"check_inequality", 1, 1, {"assume_equidim"}, true, {}, false},
      {"check_cm_via_lim", 2, 2, {"assume_unmixed"}, true, {}, false},
      {"check_chain", 2, 2, {"assume_equidim"}, true, {}, false},
      {"check_regular", 1, 2, {"assume_unmixed"}, true, {}, false},
      {"additivity_check", 1, 1, {}, true, {}, false},
      {"verdict", 1, 1, {}, false, {}, false},
      {"get", 2, 2, {}, false, {}, false},
      {"len", 1, 1, {}, false, {}, false},
      // tight closure has no implementation; calls fail loudly at run time
      {"tight_closure", 0, -1, {}, false, {}, false},
      {"check_f_rational", 0, -1, {}, false, {}, false},
  };
  return table;
}

inline const BuiltinSignature* find_builtin(const std::string& name) {
  for (const auto& b : builtins()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

/// Names that denote fields: Q, QQ and the configured field K.
inline bool is_field_name(const std::string& id) { return id == "Q" || id == "QQ" || id == "K"; }

inline bool is_bool_name(const std::string& id) { return id == "true" || id == "false"; }

inline bool is_ring_constructor(const Expr& e) {
  const auto* c = std::get_if<Call>(&e.node);
  return c && (c->callee == "poly" || c->callee == "toric" || c->callee == "quotient");
}

inline const char* kStatementKeywords[] = {"ring", "ideal", "poly", "let", "assert", "report"};

class Checker {
 public:
  void check(const Script& s) {
    for (const auto& st : s.statements) statement(st);
  }

 private:
  struct Entry {
    BindKind kind;
    std::optional<std::vector<std::string>> vars;  // ring variables, when ring-valued
    bool is_ring = false;
  };
  std::map<std::string, Entry> scope_;
  using Vars = std::optional<std::vector<std::string>>;

  void statement(const Statement& st) {
    if (const auto* b = std::get_if<Binding>(&st.node)) {
      for (const char* kw : kStatementKeywords) {
        if (b->name == kw) throw ScriptError("'" + b->name + "' is a keyword and cannot be bound", st.loc);
      }
      if (is_bool_name(b->name)) throw ScriptError("'" + b->name + "' is a boolean literal", st.loc);
      if (is_field_name(b->name)) throw ScriptError("'" + b->name + "' names a field and cannot be rebound", st.loc);
      if (find_builtin(b->name)) throw ScriptError("'" + b->name + "' names a builtin and cannot be rebound", st.loc);
      if (scope_.count(b->name)) throw ScriptError("name '" + b->name + "' is already defined", st.loc);
      Vars vars = expr(*b->value, std::nullopt);
      bool ring = is_ring_expr(*b->value);
      if (b->kind == BindKind::ring && !ring) {
        throw ScriptError("ring binding '" + b->name + "' needs poly(...), toric(...), quotient(...) or a ring name",
                          st.loc);
      }
      scope_[b->name] = {b->kind, vars, ring};
      return;
    }
    if (const auto* a = std::get_if<Assertion>(&st.node)) {
      expr(*a->lhs, std::nullopt);
      if (a->rhs) expr(*a->rhs, std::nullopt);
      return;
    }
    expr(*std::get<ReportStmt>(st.node).value, std::nullopt);
  }

  bool is_ring_expr(const Expr& e) const {
    if (is_ring_constructor(e)) return true;
    if (const auto* n = std::get_if<Name>(&e.node)) {
      auto it = scope_.find(n->id);
      return it != scope_.end() && it->second.is_ring;
    }
    return false;
  }

  /// Checks e with ring variables ctx in scope; returns the variables of e's ring.
  Vars expr(const Expr& e, const Vars& ctx) {
    if (const auto* n = std::get_if<Name>(&e.node)) {
      if (ctx && std::find(ctx->begin(), ctx->end(), n->id) != ctx->end()) return ctx;
      if (is_field_name(n->id) || is_bool_name(n->id)) return std::nullopt;
      auto it = scope_.find(n->id);
      if (it == scope_.end()) {
        if (ctx) throw ScriptError("'" + n->id + "' is neither a defined name nor a variable of the ring in scope", e.loc);
        throw ScriptError("undefined name '" + n->id + "'", e.loc);
      }
      return it->second.vars;
    }
    if (const auto* l = std::get_if<ListExpr>(&e.node)) {
      Vars out;
      for (const auto& item : l->items) {
        auto v = expr(*item, ctx);
        if (!out) out = v;
      }
      return out;
    }
    if (const auto* u = std::get_if<Unary>(&e.node)) return expr(*u->operand, ctx);
    if (const auto* b = std::get_if<Binary>(&e.node)) {
      auto l = expr(*b->lhs, ctx);
      auto r = expr(*b->rhs, ctx);
      return l ? l : r;
    }
    if (const auto* c = std::get_if<Call>(&e.node)) return call(*c, e.loc, ctx);
    return std::nullopt;
  }

  static std::vector<std::string> symbol_list(const Expr& e, const std::string& callee) {
    const auto* l = std::get_if<ListExpr>(&e.node);
    if (!l) throw ScriptError(callee + " expects a list of variable names", e.loc);
    std::vector<std::string> names;
    for (const auto& item : l->items) {
      const auto* n = std::get_if<Name>(&item->node);
      if (!n) throw ScriptError(callee + " expects bare variable names", item->loc);
      if (std::find(names.begin(), names.end(), n->id) != names.end()) {
        throw ScriptError("duplicate variable name '" + n->id + "'", item->loc);
      }
      names.push_back(n->id);
    }
    return names;
  }

  Vars call(const Call& c, const Location& loc, const Vars& ctx) {
    const BuiltinSignature* sig = find_builtin(c.callee);
    if (!sig) throw ScriptError("unknown function '" + c.callee + "'", loc);
    const int n = static_cast<int>(c.args.size());
    if (n < sig->min_args || (sig->max_args >= 0 && n > sig->max_args)) {
      std::string want = sig->min_args == sig->max_args ? std::to_string(sig->min_args)
                         : sig->max_args < 0 ? "at least " + std::to_string(sig->min_args)
                                              : std::to_string(sig->min_args) + " to " + std::to_string(sig->max_args);
      throw ScriptError(c.callee + " takes " + want + " argument(s), got " + std::to_string(n), loc);
    }
    for (const auto& na : c.named) {
      if (std::find(sig->named.begin(), sig->named.end(), na.name) == sig->named.end()) {
        throw ScriptError(c.callee + " has no named argument '" + na.name + "'", na.loc);
      }
    }

    Vars own;
    int first = 0;
    if (!sig->symbols.empty()) {
      own = symbol_list(*c.args[sig->symbols.front()], c.callee);
    }
    Vars inner = ctx;
    if (sig->context && n > 0) {
      // ideal(gens...) without a ring inherits the ring in scope
      bool leads_with_ring = c.callee != "ideal" || is_ring_expr(*c.args[0]);
      if (leads_with_ring) {
        auto v = expr(*c.args[0], ctx);
        if (v) inner = v;
        first = 1;
      }
    }
    for (int i = first; i < n; ++i) {
      if (std::find(sig->symbols.begin(), sig->symbols.end(), i) != sig->symbols.end()) continue;
      expr(*c.args[i], sig->context ? inner : ctx);
    }
    for (const auto& na : c.named) expr(*na.value, ctx);
    if (!sig->ring_valued) return std::nullopt;
    if (own) return own;
    return inner;
  }
};

inline void check_script(const Script& s) { Checker().check(s); }

}  // namespace closure_lab::script
