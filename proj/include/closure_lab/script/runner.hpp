#pragma once

/// Executes checked scripts statement by statement over a chosen field.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "closure_lab/closure_lab.hpp"
#include "closure_lab/script/checker.hpp"
#include "closure_lab/script/value.hpp"

namespace closure_lab::script {

enum class FieldChoice { automatic, rational, prime };
enum class FailurePolicy { halt, collect };

struct RunConfig {
  FieldChoice field = FieldChoice::automatic;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::optional<int> window;
  std::optional<int> max_n;
  FailurePolicy policy = FailurePolicy::collect;

  MultiplicityOptions multiplicity() const { return {window.value_or(3), max_n.value_or(12)}; }
  LimitOptions limit() const { return {window.value_or(3), max_n.value_or(20)}; }
};

inline std::string to_string(FailurePolicy p) { return p == FailurePolicy::halt ? "halt" : "collect"; }

struct StatementReport {
  std::string statement;
  Location loc;
  Report report;
};

enum class Outcome { ok, assertion_failed, engine_error, parse_error };

struct RunResult {
  std::string field;
  std::vector<StatementReport> reports;
  int assertions = 0;
  int assertions_failed = 0;
  std::optional<std::string> error;
  std::string error_kind;
  Location error_loc;
  bool parse_failed = false;

  Outcome outcome() const {
    if (parse_failed) return Outcome::parse_error;
    if (error) return Outcome::engine_error;
    if (assertions_failed) return Outcome::assertion_failed;
    return Outcome::ok;
  }
  int exit_code() const { return static_cast<int>(outcome()); }
};

inline std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const UnsupportedError*>(&e)) return "unsupported";
  if (dynamic_cast<const UnstabilizedError*>(&e)) return "unstabilized";
  if (dynamic_cast<const NotPrimaryError*>(&e)) return "not-primary";
  if (dynamic_cast<const UsageError*>(&e)) return "usage";
  if (dynamic_cast<const ArithmeticError*>(&e)) return "arithmetic";
  if (dynamic_cast<const ScriptError*>(&e)) return "type";
  return "engine";
}

/// The first field literal of a script: Q/QQ, GF(p) or K.
inline std::optional<FieldLit> first_field_literal(const Script& s) {
  std::optional<FieldLit> found;
  auto visit = [&](auto&& self, const Expr& e) -> void {
    if (found) return;
    if (const auto* n = std::get_if<Name>(&e.node)) {
      if (n->id == "Q" || n->id == "QQ") found = FieldLit{"Q", 0};
      if (n->id == "K") found = FieldLit{"K", 0};
    } else if (const auto* c = std::get_if<Call>(&e.node)) {
      if (c->callee == "GF" && c->args.size() == 1) {
        if (const auto* i = std::get_if<IntegerLit>(&c->args[0]->node)) {
          found = FieldLit{"GF(" + std::to_string(i->value) + ")", static_cast<std::uint32_t>(i->value)};
          return;
        }
      }
      for (const auto& a : c->args) self(self, *a);
      for (const auto& n : c->named) self(self, *n.value);
    } else if (const auto* l = std::get_if<ListExpr>(&e.node)) {
      for (const auto& a : l->items) self(self, *a);
    } else if (const auto* u = std::get_if<Unary>(&e.node)) {
      self(self, *u->operand);
    } else if (const auto* b = std::get_if<Binary>(&e.node)) {
      self(self, *b->lhs);
      self(self, *b->rhs);
    }
  };
  for (const auto& st : s.statements) {
    if (const auto* b = std::get_if<Binding>(&st.node)) visit(visit, *b->value);
    if (const auto* a = std::get_if<Assertion>(&st.node)) {
      visit(visit, *a->lhs);
      if (a->rhs) visit(visit, *a->rhs);
    }
    if (const auto* r = std::get_if<ReportStmt>(&st.node)) visit(visit, *r->value);
  }
  return found;
}

template <CoefficientField F>
class Interpreter {
 public:
  using V = Value<F>;
  using Ctx = RingPtr<F>;

  /// field_fixed: the field came from the command line and overrides literals.
  Interpreter(F field, RunConfig cfg, bool field_fixed)
      : field_(std::move(field)), cfg_(std::move(cfg)), field_fixed_(field_fixed), rng_(cfg_.seed) {}

  RunResult run(const Script& s) {
    RunResult out;
    out.field = field_.name();
    for (const auto& st : s.statements) {
      try {
        if (!execute(st, out)) break;
      } catch (const ScriptError& e) {
        out.error = e.what();
        out.error_kind = "type";
        out.error_loc = e.location();
        break;
      } catch (const std::exception& e) {
        out.error = st.loc.to_string() + ": " + e.what();
        out.error_kind = error_kind(e);
        out.error_loc = st.loc;
        break;
      }
    }
    return out;
  }

  /// Evaluates a standalone expression against the current bindings.
  V evaluate(const Expr& e) { return eval(e, nullptr); }

 private:
  F field_;
  RunConfig cfg_;
  bool field_fixed_;
  std::mt19937_64 rng_;
  std::map<std::string, V> scope_;

  // returns false when execution should stop
  bool execute(const Statement& st, RunResult& out) {
    if (const auto* b = std::get_if<Binding>(&st.node)) {
      V v = eval(*b->value, nullptr);
      bool ok = b->kind == BindKind::let || (b->kind == BindKind::ring && v.template is<Ctx>()) ||
                (b->kind == BindKind::ideal && v.template is<Ideal<F>>()) ||
                (b->kind == BindKind::poly && v.template is<PolyValue<F>>());
      if (!ok) {
        throw ScriptError(to_string(b->kind) + " binding '" + b->name + "' got a value of type " + type_name(v), st.loc);
      }
      scope_[b->name] = std::move(v);
      return true;
    }
    if (const auto* a = std::get_if<Assertion>(&st.node)) {
      Report rep;
      rep.check = "assert";
      rep.input = print(st);
      V lhs = eval(*a->lhs, nullptr);
      bool ok;
      if (a->op.empty()) {
        const auto* b = lhs.template get<bool>();
        if (!b) throw ScriptError("assert without a comparison needs a boolean, got " + type_name(lhs), a->lhs->loc);
        ok = *b;
        rep.set("value", *b);
      } else {
        V rhs = eval(*a->rhs, nullptr);
        bool same = values_equal(lhs, rhs, a->lhs->loc);
        ok = (a->op == "==") == same;
        rep.set("lhs", to_quantity(lhs)).set("rhs", to_quantity(rhs));
      }
      rep.verdict = ok ? Verdict::holds : Verdict::fails;
      ++out.assertions;
      if (!ok) ++out.assertions_failed;
      out.reports.push_back({print(st), st.loc, std::move(rep)});
      return ok || cfg_.policy == FailurePolicy::collect;
    }
    const auto& r = std::get<ReportStmt>(st.node);
    V v = eval(*r.value, nullptr);
    Report rep;
    if (const auto* given = v.template get<Report>()) {
      rep = *given;
    } else {
      rep.check = "value";
      rep.input = print(*r.value);
      if (Ctx ring = ring_of(v)) rep.ring = ring->describe();
      rep.set("value", to_quantity(v));
      rep.verdict = Verdict::holds;
      rep.reason = "computed";
    }
    for (auto& [k, q] : v.diagnostics) rep.set(k, q);
    out.reports.push_back({print(st), st.loc, std::move(rep)});
    return true;
  }

  // ----- value helpers

  static Ctx ring_of(const V& v) {
    if (const auto* r = v.template get<Ctx>()) return *r;
    if (const auto* i = v.template get<Ideal<F>>()) return i->ring_ptr();
    if (const auto* p = v.template get<PolyValue<F>>()) return p->ring;
    if (const auto* s = v.template get<SeqValue<F>>()) return s->ring;
    return nullptr;
  }

  [[noreturn]] static void type_error(const std::string& what, const V& got, const Location& loc) {
    throw ScriptError(what + ", got " + type_name(got), loc);
  }

  static long long as_int(const V& v, const Location& loc) {
    if (const auto* i = v.template get<long long>()) return *i;
    type_error("expected an integer", v, loc);
  }

  static Ctx as_ring(const V& v, const Location& loc) {
    if (const auto* r = v.template get<Ctx>()) return *r;
    type_error("expected a ring", v, loc);
  }

  static const Ideal<F>& as_ideal(const V& v, const Location& loc) {
    if (const auto* i = v.template get<Ideal<F>>()) return *i;
    type_error("expected an ideal", v, loc);
  }

  static const Report& as_report(const V& v, const Location& loc) {
    if (const auto* r = v.template get<Report>()) return *r;
    type_error("expected a report", v, loc);
  }

  static void same_ring(const Ctx& a, const Ctx& b, const Location& loc) {
    if (a != b) throw ScriptError("values belong to different rings", loc);
  }

  Polynomial<F> as_poly(const V& v, const Ctx& ring, const Location& loc) const {
    if (const auto* p = v.template get<PolyValue<F>>()) {
      if (ring) same_ring(p->ring, ring, loc);
      return p->value;
    }
    if (const auto* i = v.template get<long long>()) {
      if (!ring) throw ScriptError("integer used as a ring element outside any ring", loc);
      return ring->ambient().constant(field_.from_integer(*i));
    }
    type_error("expected a ring element", v, loc);
  }

  std::vector<Polynomial<F>> as_seq(const V& v, const Ctx& ring, const Location& loc) const {
    if (const auto* s = v.template get<SeqValue<F>>()) {
      same_ring(s->ring, ring, loc);
      return s->items;
    }
    if (const auto* l = v.template get<ListValue<F>>()) {
      std::vector<Polynomial<F>> out;
      for (const auto& item : l->items) out.push_back(as_poly(item, ring, loc));
      return out;
    }
    type_error("expected a sequence of ring elements", v, loc);
  }

  std::vector<int> as_int_list(const V& v, const Location& loc) const {
    const auto* l = v.template get<ListValue<F>>();
    if (!l) type_error("expected a list of integers", v, loc);
    std::vector<int> out;
    for (const auto& item : l->items) out.push_back(static_cast<int>(as_int(item, loc)));
    return out;
  }

  bool flag(const Call& c, const std::string& name) {
    for (const auto& n : c.named) {
      if (n.name != name) continue;
      V v = eval(*n.value, nullptr);
      const auto* b = v.template get<bool>();
      if (!b) type_error("named argument '" + name + "' expects true or false", v, n.loc);
      return *b;
    }
    return false;
  }

  bool values_equal(const V& a, const V& b, const Location& loc) const {
    if (const auto* x = a.template get<Ideal<F>>()) {
      const auto& y = as_ideal(b, loc);
      same_ring(x->ring_ptr(), y.ring_ptr(), loc);
      return *x == y;
    }
    if (a.template is<PolyValue<F>>() || b.template is<PolyValue<F>>()) {
      Ctx ring = ring_of(a) ? ring_of(a) : ring_of(b);
      auto diff = as_poly(a, ring, loc) - as_poly(b, ring, loc);
      return normal_form(diff, ring->basis()).is_zero();
    }
    if (const auto* x = a.template get<SeqValue<F>>()) {
      auto ys = as_seq(b, x->ring, loc);
      if (ys.size() != x->items.size()) return false;
      for (std::size_t i = 0; i < ys.size(); ++i) {
        if (!normal_form(x->items[i] - ys[i], x->ring->basis()).is_zero()) return false;
      }
      return true;
    }
    if (a.data.index() != b.data.index()) {
      throw ScriptError("cannot compare " + type_name(a) + " with " + type_name(b), loc);
    }
    if (a.template is<Report>()) throw ScriptError("reports cannot be compared; use verdict(...) or get(...)", loc);
    return show(a) == show(b);
  }

  void field_literal(const FieldLit& lit, const Location& loc) const {
    if (field_fixed_ || lit.text == "K") return;
    bool ok = lit.prime == 0 ? field_.characteristic() == 0 : field_.characteristic() == lit.prime;
    if (!ok) {
      throw ScriptError("field " + lit.text + " conflicts with " + field_.name() +
                            ", chosen by the first field literal of the script",
                        loc);
    }
  }

  // ----- evaluation

  V eval(const Expr& e, const Ctx& ctx) {
    if (const auto* i = std::get_if<IntegerLit>(&e.node)) return {i->value};
    if (const auto* s = std::get_if<StringLit>(&e.node)) return {s->value};
    if (const auto* n = std::get_if<Name>(&e.node)) {
      if (ctx) {
        if (auto idx = ctx->ambient().index_of(n->id)) return {PolyValue<F>{ctx, ctx->variable(*idx)}};
      }
      if (n->id == "Q" || n->id == "QQ") {
        FieldLit lit{"Q", 0};
        field_literal(lit, e.loc);
        return {lit};
      }
      if (n->id == "K") return {FieldLit{"K", 0}};
      if (n->id == "true" || n->id == "false") return {n->id == "true"};
      auto it = scope_.find(n->id);
      if (it == scope_.end()) throw ScriptError("undefined name '" + n->id + "'", e.loc);
      return it->second;
    }
    if (const auto* l = std::get_if<ListExpr>(&e.node)) {
      ListValue<F> out;
      for (const auto& item : l->items) out.items.push_back(eval(*item, ctx));
      return {std::move(out)};
    }
    if (const auto* u = std::get_if<Unary>(&e.node)) {
      V v = eval(*u->operand, ctx);
      if (const auto* i = v.template get<long long>()) return {checked(-static_cast<__int128>(*i), e.loc)};
      Ctx ring = ring_of(v) ? ring_of(v) : ctx;
      return {PolyValue<F>{ring, -as_poly(v, ring, e.loc)}};
    }
    if (const auto* b = std::get_if<Binary>(&e.node)) return arith(*b, e.loc, ctx);
    return call(std::get<Call>(e.node), e.loc, ctx);
  }

  static long long checked(__int128 v, const Location& loc) {
    if (v > INT64_MAX || v < INT64_MIN) throw ScriptError("integer overflow", loc);
    return static_cast<long long>(v);
  }

  V arith(const Binary& b, const Location& loc, const Ctx& ctx) {
    V x = eval(*b.lhs, ctx);
    V y = eval(*b.rhs, ctx);
    const auto* xi = x.template get<long long>();
    const auto* yi = y.template get<long long>();
    if (xi && yi) {
      __int128 a = *xi, c = *yi;
      switch (b.op) {
        case '+': return {checked(a + c, loc)};
        case '-': return {checked(a - c, loc)};
        case '*': return {checked(a * c, loc)};
        case '^': {
          if (c < 0) throw ScriptError("negative exponent", loc);
          __int128 r = 1;
          for (__int128 k = 0; k < c; ++k) r = checked(r * a, loc);
          return {static_cast<long long>(r)};
        }
        case '/':
          if (c == 0) throw ScriptError("division by zero", loc);
          if (a % c == 0) return {static_cast<long long>(a / c)};
          if (!ctx) throw ScriptError("non-integer quotient outside a ring", loc);
          return {PolyValue<F>{ctx, ctx->ambient().constant(field_.from_rational(mpz_class(std::to_string(*xi)), mpz_class(std::to_string(*yi))))}};
      }
    }
    Ctx ring = ring_of(x) ? ring_of(x) : (ring_of(y) ? ring_of(y) : ctx);
    if (!ring) throw ScriptError("operator " + std::string(1, b.op) + " needs integers or ring elements", loc);
    auto p = as_poly(x, ring, loc);
    if (b.op == '^') {
      long long n = as_int(y, b.rhs->loc);
      if (n < 0) throw ScriptError("negative exponent", loc);
      return {PolyValue<F>{ring, p.pow(static_cast<int>(n))}};
    }
    auto q = as_poly(y, ring, loc);
    switch (b.op) {
      case '+': return {PolyValue<F>{ring, p + q}};
      case '-': return {PolyValue<F>{ring, p - q}};
      case '*': return {PolyValue<F>{ring, p * q}};
      default: {
        if (!q.is_constant() || q.is_zero()) throw ScriptError("division only by nonzero constants", loc);
        return {PolyValue<F>{ring, p.scaled(q.leading_coefficient().inverse())}};
      }
    }
  }

  bool is_ring_expr(const Expr& e) const {
    if (is_ring_constructor(e)) return true;
    if (const auto* n = std::get_if<Name>(&e.node)) {
      auto it = scope_.find(n->id);
      return it != scope_.end() && it->second.template is<Ctx>();
    }
    return false;
  }

  V call(const Call& c, const Location& loc, const Ctx& ctx) {
    const BuiltinSignature* sig = find_builtin(c.callee);
    if (!sig) throw ScriptError("unknown function '" + c.callee + "'", loc);
    const std::string& f = c.callee;
    if (f == "tight_closure" || f == "check_f_rational") {
      throw UnsupportedError("unsupported: tight closure is not implemented (there is no general algorithm)");
    }

    std::vector<V> args;
    std::vector<Location> locs;
    Ctx inner = ctx;
    std::size_t first = 0;
    if (sig->context && !c.args.empty() && (f != "ideal" || is_ring_expr(*c.args[0]))) {
      args.push_back(eval(*c.args[0], ctx));
      locs.push_back(c.args[0]->loc);
      if (Ctx r = ring_of(args[0])) inner = r;
      first = 1;
    }
    for (std::size_t i = first; i < c.args.size(); ++i) {
      bool symbolic = std::find(sig->symbols.begin(), sig->symbols.end(), static_cast<int>(i)) != sig->symbols.end();
      args.push_back(symbolic ? V{0LL} : eval(*c.args[i], sig->context ? inner : ctx));
      locs.push_back(c.args[i]->loc);
    }
    auto arg_loc = [&](std::size_t i) { return i < locs.size() ? locs[i] : loc; };
    const MultiplicityOptions mopts = cfg_.multiplicity();
    DetectorOptions dopts{mopts, cfg_.limit()};

    if (f == "GF") {
      long long p = as_int(args[0], arg_loc(0));
      if (p < 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
        throw ScriptError("GF(p) needs a prime below 2^31", loc);
      }
      FieldLit lit{"GF(" + std::to_string(p) + ")", static_cast<std::uint32_t>(p)};
      field_literal(lit, loc);
      return {lit};
    }
    if (f == "poly" || f == "toric") {
      if (!args[0].template is<FieldLit>()) type_error("expected a field (Q, GF(p) or K)", args[0], arg_loc(0));
      const auto& list = std::get<ListExpr>(c.args[f == "poly" ? 1 : 2]->node);
      std::vector<std::string> names;
      for (const auto& item : list.items) names.push_back(std::get<Name>(item->node).id);
      if (f == "toric") {
        const auto* vl = args[1].template get<ListValue<F>>();
        if (!vl) type_error("toric expects a list of exponent vectors", args[1], arg_loc(1));
        std::vector<std::vector<int>> vectors;
        for (const auto& v : vl->items) vectors.push_back(as_int_list(v, arg_loc(1)));
        return {toric_ring<F>(field_, vectors, std::move(names))};
      }
      std::vector<int> weights;
      for (const auto& n : c.named) weights = as_int_list(eval(*n.value, nullptr), n.loc);
      return {Ring<F>::polynomial(field_, std::move(names), std::move(weights))};
    }
    if (f == "quotient") {
      Ctx base = as_ring(args[0], arg_loc(0));
      const auto& extra = as_ideal(args[1], arg_loc(1));
      same_ring(base, extra.ring_ptr(), arg_loc(1));
      auto gens = base->presenting();
      gens.insert(gens.end(), extra.generators().begin(), extra.generators().end());
      return {Ring<F>::make(base->ambient_ptr(), std::move(gens))};
    }
    if (f == "ideal") {
      Ctx ring = first == 1 ? as_ring(args[0], arg_loc(0)) : ctx;
      if (!ring) throw ScriptError("ideal(...) needs a ring as its first argument", loc);
      std::vector<Polynomial<F>> gens;
      for (std::size_t i = first; i < args.size(); ++i) {
        if (args[i].template is<SeqValue<F>>() || args[i].template is<ListValue<F>>()) {
          for (auto& g : as_seq(args[i], ring, arg_loc(i))) gens.push_back(std::move(g));
        } else {
          gens.push_back(as_poly(args[i], ring, arg_loc(i)));
        }
      }
      return {homogeneous_ideal(ring, std::move(gens))};
    }
    if (f == "sequence") {
      Ctx ring = as_ring(args[0], arg_loc(0));
      std::vector<Polynomial<F>> items;
      for (std::size_t i = 1; i < args.size(); ++i) items.push_back(as_poly(args[i], ring, arg_loc(i)));
      return {SeqValue<F>{ring, std::move(items)}};
    }
    if (f == "maximal") return {Ideal<F>::maximal(as_ring(args[0], arg_loc(0)))};
    if (f == "element") return {PolyValue<F>{inner, as_poly(args[1], inner, arg_loc(1))}};
    if (f == "generators") {
      const auto& a = as_ideal(args[0], arg_loc(0));
      return {SeqValue<F>{a.ring_ptr(), a.minimal_generators()}};
    }
    if (f == "sum" || f == "product" || f == "intersect" || f == "colon_ideal") {
      const auto& a = as_ideal(args[0], arg_loc(0));
      const auto& b = as_ideal(args[1], arg_loc(1));
      same_ring(a.ring_ptr(), b.ring_ptr(), arg_loc(1));
      if (f == "sum") return {ideal_sum(a, b)};
      if (f == "product") return {ideal_product(a, b)};
      if (f == "intersect") return {ideal_intersection(a, b)};
      return {ideal_colon(a, b)};
    }
    if (f == "power") {
      long long n = as_int(args[1], arg_loc(1));
      if (n < 0) throw ScriptError("negative ideal power", arg_loc(1));
      return {ideal_power(as_ideal(args[0], arg_loc(0)), static_cast<int>(n))};
    }
    if (f == "colon" || f == "saturate") {
      const auto& a = as_ideal(args[0], arg_loc(0));
      auto g = as_poly(args[1], a.ring_ptr(), arg_loc(1));
      if (f == "colon") return {ideal_quotient(a, g)};
      auto sat = saturation(a, g);
      V v{std::move(sat.ideal)};
      v.diagnostics.emplace_back("exponent", static_cast<long long>(sat.exponent));
      return v;
    }
    if (f == "infty" || f == "lim" || f == "mult_param" || f == "check_cm_via_lim" || f == "check_chain") {
      Ctx ring = as_ring(args[0], arg_loc(0));
      auto seq = as_seq(args[1], ring, arg_loc(1));
      if (f == "infty") {
        auto r = infty_ideal(ring, seq);
        V v{std::move(r.closure)};
        v.diagnostics.emplace_back("saturation_exponents", join(r.diagnostics.saturation_exponents));
        if (r.diagnostics.primary_or_unit) v.diagnostics.emplace_back("primary_or_unit", *r.diagnostics.primary_or_unit);
        return v;
      }
      if (f == "lim") {
        auto r = limit_closure(ring, seq, cfg_.limit());
        V v{std::move(r.closure)};
        v.diagnostics.emplace_back("stabilized_at", static_cast<long long>(*r.diagnostics.stabilized_at));
        v.diagnostics.emplace_back("window", static_cast<long long>(r.diagnostics.window));
        v.diagnostics.emplace_back("chain_colengths", join(r.diagnostics.chain_colengths));
        return v;
      }
      if (f == "mult_param") {
        auto r = mult_param(ring, seq);
        V v{r.value};
        v.diagnostics.emplace_back("method", to_string(r.method));
        v.diagnostics.emplace_back("infty_ideal", r.infty_ideal);
        return v;
      }
      if (f == "check_cm_via_lim") return {check_cm_via_lim(ring, seq, flag(c, "assume_unmixed"), dopts)};
      return {check_chain(ring, seq, flag(c, "assume_equidim"), dopts)};
    }
    if (f == "closure") {
      auto r = integral_closure(as_ideal(args[0], arg_loc(0)), flag(c, "assume_equidim"), mopts);
      V v{std::move(r.closure)};
      v.diagnostics.emplace_back("method", to_string(r.method));
      for (std::size_t i = 0; i < r.diagnostics.components.size(); ++i) {
        v.diagnostics.emplace_back("component_" + std::to_string(i + 1), r.diagnostics.components[i]);
      }
      return v;
    }
    if (f == "random_reduction") {
      const auto& a = as_ideal(args[0], arg_loc(0));
      std::uint64_t seed = rng_();
      auto r = random_reduction(a, seed, mopts);
      V v{SeqValue<F>{a.ring_ptr(), std::move(r.sequence)}};
      v.diagnostics.emplace_back("seed", std::to_string(seed));
      v.diagnostics.emplace_back("attempts", static_cast<long long>(r.attempts));
      v.diagnostics.emplace_back("multiplicity", r.multiplicity);
      return v;
    }
    if (f == "minimal_primes") {
      ListValue<F> out;
      for (auto& p : minimal_primes_monomial(as_ideal(args[0], arg_loc(0)))) out.items.push_back({std::move(p)});
      return {std::move(out)};
    }
    if (f == "colength") return {colength(as_ideal(args[0], arg_loc(0)))};
    if (f == "dim") {
      if (const auto* r = args[0].template get<Ctx>()) return {static_cast<long long>((*r)->dimension())};
      return {static_cast<long long>(dimension(as_ideal(args[0], arg_loc(0))))};
    }
    if (f == "mult" || f == "mult_hs") {
      auto r = mult_hs(as_ideal(args[0], arg_loc(0)), mopts);
      V v{r.value};
      v.diagnostics.emplace_back("method", to_string(r.method));
      v.diagnostics.emplace_back("lengths", join(r.lengths));
      return v;
    }
    if (f == "contains" || f == "subset") {
      const auto& a = as_ideal(args[0], arg_loc(0));
      if (const auto* b = args[1].template get<Ideal<F>>()) {
        same_ring(a.ring_ptr(), b->ring_ptr(), arg_loc(1));
        return {f == "contains" ? a.contains(*b) : b->contains(a)};
      }
      if (f == "subset") type_error("subset expects two ideals", args[1], arg_loc(1));
      return {a.contains(as_poly(args[1], a.ring_ptr(), arg_loc(1)))};
    }
    if (f == "is_integrally_closed") {
      auto r = is_integrally_closed(as_ideal(args[0], arg_loc(0)), flag(c, "assume_equidim"), mopts);
      V v{r.closed};
      v.diagnostics.emplace_back("method", r.method);
      if (r.witness) v.diagnostics.emplace_back("witness", r.witness->to_string());
      return v;
    }
    if (f == "rees_member") {
      const auto& a = as_ideal(args[0], arg_loc(0));
      auto r = rees_membership(as_poly(args[1], a.ring_ptr(), arg_loc(1)), a, flag(c, "assume_equidim"), mopts);
      V v{r.member};
      if (r.short_circuit) {
        v.diagnostics.emplace_back("reason", std::string("element lies in the ideal"));
      } else {
        v.diagnostics.emplace_back("e_ideal", r.e_ideal);
        v.diagnostics.emplace_back("e_extended", r.e_extended);
        v.diagnostics.emplace_back("equidimensional", to_string(r.equidimensional));
      }
      return v;
    }
    if (f == "check_inequality") return {check_inequality(as_ideal(args[0], arg_loc(0)), flag(c, "assume_equidim"), dopts)};
    if (f == "check_regular") {
      bool assume = flag(c, "assume_unmixed");
      if (args.size() == 2) {
        const auto& a = as_ideal(args[1], arg_loc(1));
        same_ring(as_ring(args[0], arg_loc(0)), a.ring_ptr(), arg_loc(1));
        return {check_regular(a, assume, dopts)};
      }
      if (const auto* r = args[0].template get<Ctx>()) return {check_regular(Ideal<F>::maximal(*r), assume, dopts)};
      return {check_regular(as_ideal(args[0], arg_loc(0)), assume, dopts)};
    }
    if (f == "additivity_check") return {additivity_check(as_ideal(args[0], arg_loc(0)), mopts)};
    if (f == "verdict") return {to_string(as_report(args[0], arg_loc(0)).verdict)};
    if (f == "get") {
      const auto& rep = as_report(args[0], arg_loc(0));
      const auto* key = args[1].template get<std::string>();
      if (!key) type_error("get expects a quantity name string", args[1], arg_loc(1));
      const Quantity* q = rep.get(*key);
      if (!q) throw ScriptError("report has no quantity '" + *key + "'", arg_loc(1));
      return std::visit([](const auto& x) { return V{x}; }, *q);
    }
    if (f == "len") {
      if (const auto* l = args[0].template get<ListValue<F>>()) return {static_cast<long long>(l->items.size())};
      if (const auto* s = args[0].template get<SeqValue<F>>()) return {static_cast<long long>(s->items.size())};
      type_error("len expects a list or sequence", args[0], arg_loc(0));
    }
    throw ScriptError("function '" + f + "' is not implemented", loc);
  }

  template <class T>
  static std::string join(const std::vector<T>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
    return out + "]";
  }
};

/// Parses, checks and runs a script. The field comes from the config when
/// given, else from the first field literal, else QQ.
inline RunResult run_source(std::string_view source, const RunConfig& cfg) {
  Script s;
  try {
    s = parse_script(source);
    check_script(s);
  } catch (const ScriptError& e) {
    RunResult r;
    r.parse_failed = true;
    r.error = e.what();
    r.error_kind = "parse";
    r.error_loc = e.location();
    return r;
  }
  FieldChoice choice = cfg.field;
  std::uint32_t prime = cfg.prime;
  const bool fixed = choice != FieldChoice::automatic;
  if (!fixed) {
    auto lit = first_field_literal(s);
    choice = FieldChoice::rational;
    if (lit && lit->prime != 0) {
      choice = FieldChoice::prime;
      prime = lit->prime;
    }
  }
  try {
    if (choice == FieldChoice::prime) return Interpreter<PrimeField>(PrimeField(prime), cfg, fixed).run(s);
    return Interpreter<RationalField>(RationalField{}, cfg, fixed).run(s);
  } catch (const std::exception& e) {
    RunResult r;
    r.error = e.what();
    r.error_kind = error_kind(e);
    return r;
  }
}

}  // namespace closure_lab::script
