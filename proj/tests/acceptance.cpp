// Acceptance checks: one pass/fail line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "closure_lab/corpus.hpp"
#include "oracles.hpp"

using namespace closure_lab;
using Q = RationalField;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Polynomial<Q> var(const RingPtr<Q>& r, const char* n) { return r->variable(n); }

Outcome toric_order_dependence() {
  auto r4 = ring_r4(Q{});
  auto a = var(r4, "a"), b = var(r4, "b"), c = var(r4, "c"), d = var(r4, "d");
  auto ad = infty_ideal(r4, {a, d}).closure;
  auto da = infty_ideal(r4, {d, a}).closure;
  if (!(ad == Ideal<Q>(r4, {a, b.pow(2), d}))) return fail("infty(a,d) = " + ad.to_string());
  if (!(da == Ideal<Q>(r4, {a, c.pow(2), d}))) return fail("infty(d,a) = " + da.to_string());
  if (ad == da) return fail("the two closures coincide");
  return {true, "infty(a,d) = " + ad.to_string() + " != infty(d,a) = " + da.to_string()};
}

Outcome toric_colength() {
  // semigroup count first, independent of the engine
  std::vector<oracle::Exps> s{{4, 0}, {3, 1}, {1, 3}, {0, 4}};
  const long long l_ad = oracle::semigroup_colength(s, {{4, 0}, {6, 2}, {0, 4}}, 8);
  const long long l_da = oracle::semigroup_colength(s, {{4, 0}, {2, 6}, {0, 4}}, 8);
  const long long e = oracle::semigroup_multiplicity(s, {{4, 0}, {0, 4}}, 2, 6, 2);
  if (l_ad != 4 || l_da != 4 || e != 4) return fail("oracle disagrees with the expected value 4");
  auto r4 = ring_r4(Q{});
  auto a = var(r4, "a"), d = var(r4, "d");
  const long long c1 = colength(infty_ideal(r4, {a, d}).closure);
  const long long c2 = colength(infty_ideal(r4, {d, a}).closure);
  const long long hs = mult_hs(Ideal<Q>(r4, {a, d})).value;
  const long long param = mult_param(r4, {a, d}).value;
  const std::string got = std::to_string(c1) + ", " + std::to_string(c2) + ", mult_hs " + std::to_string(hs) +
                          ", mult_param " + std::to_string(param);
  if (c1 != e || c2 != e || hs != e || param != e) return fail("oracle 4, engine " + got);
  return {true, "colengths " + got};
}

Outcome nonequidimensional() {
  auto r2 = ring_r2(Q{});
  auto x = var(r2, "x"), y = var(r2, "y"), z = var(r2, "z");
  for (int n = 1; n <= 6; ++n) {
    Ideal<Q> a(r2, {x.pow(n), y, z});
    const std::string tag = "n = " + std::to_string(n) + ": ";
    if (!(stanley_reisner_closure(a).closure == a)) return fail(tag + "not a Stanley-Reisner closure fixed point");
    if (!is_integrally_closed(a).closed) return fail(tag + "not integrally closed");
    if (mult_hs(a).value != 1) return fail(tag + "mult_hs != 1");
    if (colength(a) != n) return fail(tag + "colength != n");
    auto rep = check_inequality(a);
    Verdict want = n >= 2 ? Verdict::fails : Verdict::holds;
    if (rep.verdict != want) return fail(tag + "check_inequality gave " + to_string(rep.verdict));
    if (n >= 2 && rep.status("formally equidimensional") != HypothesisStatus::refuted) {
      return fail(tag + "equidimensionality not flagged as refuted");
    }
  }
  return {true, "(x^n, y, z) closed with e = 1, colength n; violation flagged for n >= 2"};
}

Outcome mixed_components() {
  auto r3 = ring_r3(Q{});
  auto a = var(r3, "a"), b = var(r3, "b"), c = var(r3, "c"), d = var(r3, "d");
  std::vector<Polynomial<Q>> seq{a + c, b + d};
  auto m = Ideal<Q>::maximal(r3);
  auto lim = limit_closure(r3, seq).closure;
  if (!(lim == m)) return fail("lim = " + lim.to_string());
  if (colength(lim) != 1) return fail("colength(lim) != 1");
  if (mult_param(r3, seq).value != 2 || mult_hs(m).value != 2) return fail("multiplicity != 2");
  if (check_cm_via_lim(r3, seq).verdict != Verdict::not_cohen_macaulay) return fail("CM verdict");
  auto chain = check_chain(r3, seq);
  if (chain.verdict != Verdict::holds) return fail("chain verdict " + to_string(chain.verdict));
  if (!(integral_closure(Ideal<Q>(r3, seq)).closure == m)) return fail("closure of J is not m");
  return {true, "lim = m, colength 1, e = 2, not CM, chain holds with closure m"};
}

Outcome colength_bound(const std::vector<CorpusEntry<Q>>& entries) {
  long long rings = 0, independent = 0;
  for (const auto& e : entries) {
    if (!e.equidimensional) continue;
    ++rings;
    if (!e.polynomial) continue;
    // closedness of monomial ideals in polynomial rings rechecked by the power test
    for (const auto& a : e.candidates) {
      std::vector<oracle::Exps> gens;
      for (const auto& g : a.minimal_generators()) {
        auto v = g.leading_monomial().exponents();
        gens.emplace_back(v.begin(), v.end());
      }
      const std::size_t n = e.ring->nvars();
      oracle::Exps v(n, 0);
      std::function<bool(std::size_t)> all = [&](std::size_t i) -> bool {
        if (i == n) return !oracle::power_test(gens, v, 6) || oracle::in_monomial_ideal(gens, v);
        for (int k = 0; k <= 4; ++k) {
          v[i] = k;
          if (!all(i + 1)) return false;
        }
        return true;
      };
      if (!all(0)) return fail(e.name + " " + a.to_string() + " is not integrally closed by the power test");
      ++independent;
    }
  }
  auto rep = property_colength_bound(entries);
  const long long ideals = rep.integer("ideals");
  const std::string detail = std::to_string(rings) + " rings, " + std::to_string(ideals) + " closed ideals (" +
                             std::to_string(independent) + " rechecked by power test), " +
                             std::to_string(rep.integer("violations")) + " violations";
  if (rings < 10 || ideals < 30) return fail("corpus too small: " + detail);
  if (rep.verdict != Verdict::holds) return fail(detail + "; " + (rep.witnesses.empty() ? "" : rep.witnesses.front()));
  return {true, detail};
}

Outcome parameter_chain(const std::vector<CorpusEntry<Q>>& entries) {
  auto rep = property_parameter_chain(entries);
  if (rep.verdict != Verdict::holds) return fail(rep.witnesses.empty() ? "failed" : rep.witnesses.front());
  struct Truth {
    const char* ring;
    Verdict want;
  };
  for (auto t : {Truth{"k[x,y]", Verdict::cohen_macaulay}, Truth{"R5", Verdict::cohen_macaulay},
                 Truth{"R3", Verdict::not_cohen_macaulay}, Truth{"R4", Verdict::not_cohen_macaulay}}) {
    for (const auto& e : entries) {
      if (e.name != t.ring) continue;
      auto got = check_cm_via_lim(e.ring, e.parameters.front()).verdict;
      if (got != t.want) return fail(e.name + ": " + to_string(got));
    }
  }
  return {true, std::to_string(rep.integer("sequences")) + " sequences, " +
                    std::to_string(rep.integer("closure_checked")) + " with closure containment checked; CM ground truth matches"};
}

Outcome regularity(const std::vector<CorpusEntry<Q>>& entries) {
  auto rep = property_regularity(entries);
  if (rep.verdict != Verdict::holds) return fail(rep.witnesses.empty() ? "failed" : rep.witnesses.front());
  auto r2 = ring_r2(Q{});
  auto flagged = check_regular(Ideal<Q>::maximal(r2), true);
  if (flagged.verdict != Verdict::not_regular) return fail("R2 with assume_unmixed: " + to_string(flagged.verdict));
  auto r = Ring<Q>::polynomial(Q{}, {"x", "y"});
  auto x = var(r, "x"), y = var(r, "y");
  auto q = check_regular(Ideal<Q>(r, {x.pow(2), y}));
  if (q.verdict != Verdict::regular || q.integer("e") != 2 || q.integer("colength") != 2) {
    return fail("(x^2, y): " + to_string(q.verdict));
  }
  return {true, std::to_string(rep.integer("rings")) + " rings; (x^2, y) regular with e = colength = 2"};
}

Outcome closure_oracle() {
  long long ideals = 0, points = 0;
  auto check = [&](std::size_t n, const std::vector<oracle::Exps>& gens) -> std::string {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto r = Ring<Q>::polynomial(Q{}, names);
    std::vector<Polynomial<Q>> ps;
    for (const auto& g : gens) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, g[i]);
      ps.push_back(r->ambient().monomial(m));
    }
    auto closure = monomial_integral_closure(Ideal<Q>(r, ps)).closure;
    ++ideals;
    oracle::Exps v(n, 0);
    std::function<std::string(std::size_t)> walk = [&](std::size_t i) -> std::string {
      if (i == n) {
        Monomial m(n);
        for (std::size_t j = 0; j < n; ++j) m.set(j, v[j]);
        ++points;
        if (closure.contains(r->ambient().monomial(m)) != oracle::power_test(gens, v, 6)) {
          return "disagreement at " + m.to_string(names) + " for " + Ideal<Q>(r, ps).to_string();
        }
        return "";
      }
      for (int k = 0; k <= 4; ++k) {
        v[i] = k;
        auto s = walk(i + 1);
        if (!s.empty()) return s;
      }
      return "";
    };
    return walk(0);
  };
  auto nonzero = [](const oracle::Exps& v) {
    for (int e : v)
      if (e) return true;
    return false;
  };
  auto incomparable = [](const oracle::Exps& a, const oracle::Exps& b) {
    return !oracle::divides(a, b) && !oracle::divides(b, a);
  };
  // one variable: every ideal
  for (int i = 1; i <= 4; ++i) {
    if (auto s = check(1, {{i}}); !s.empty()) return fail(s);
  }
  // two variables: every monomial ideal with exponents <= 4 (antichains of the 5x5 grid)
  std::vector<oracle::Exps> grid;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      if (i || j) grid.push_back({i, j});
  std::vector<oracle::Exps> chosen;
  std::function<std::string(std::size_t)> antichains = [&](std::size_t from) -> std::string {
    if (!chosen.empty()) {
      if (auto s = check(2, chosen); !s.empty()) return s;
    }
    for (std::size_t i = from; i < grid.size(); ++i) {
      bool ok = true;
      for (const auto& c : chosen) ok = ok && incomparable(c, grid[i]);
      if (!ok) continue;
      chosen.push_back(grid[i]);
      auto s = antichains(i + 1);
      chosen.pop_back();
      if (!s.empty()) return s;
    }
    return "";
  };
  if (auto s = antichains(0); !s.empty()) return fail(s);
  // three variables: every ideal with at most two minimal generators
  std::vector<oracle::Exps> cube;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k)
        if (nonzero({i, j, k})) cube.push_back({i, j, k});
  for (std::size_t i = 0; i < cube.size(); ++i) {
    if (auto s = check(3, {cube[i]}); !s.empty()) return fail(s);
    for (std::size_t j = i + 1; j < cube.size(); ++j) {
      if (!incomparable(cube[i], cube[j])) continue;
      if (auto s = check(3, {cube[i], cube[j]}); !s.empty()) return fail(s);
    }
  }
  return {true, std::to_string(ideals) + " ideals, " + std::to_string(points) + " monomials compared"};
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

Outcome determinism() {
  const std::string cmd = std::string("\"") + CLOSURE_LAB_CLI + "\" paper-examples --json --seed 42";
  int s1 = 0, s2 = 0;
  auto first = capture(cmd, s1);
  auto second = capture(cmd, s2);
  if (s1 != 0 || s2 != 0) return fail("non-zero exit status");
  if (first.empty()) return fail("empty output");
  if (first != second) return fail("outputs differ");
  return {true, std::to_string(first.size()) + " bytes, identical"};
}

}  // namespace

int main() {
  const auto entries = corpus(Q{});
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"toric order dependence", toric_order_dependence},
      {"toric colength and multiplicity", toric_colength},
      {"non-equidimensional colength", nonequidimensional},
      {"mixed components limit closure", mixed_components},
      {"colength bound property suite", [&] { return colength_bound(entries); }},
      {"parameter chain property suite", [&] { return parameter_chain(entries); }},
      {"regularity detector", [&] { return regularity(entries); }},
      {"monomial closure oracle", closure_oracle},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !out.pass;
    std::printf("criterion %zu %-34s %s  (%.2fs) %s\n", i + 1, criteria[i].first.c_str(), out.pass ? "PASS" : "FAIL",
                secs, out.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
