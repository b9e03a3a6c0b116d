#include <gtest/gtest.h>

#include <random>

#include "closure_lab/corpus.hpp"
#include "oracles.hpp"

using namespace closure_lab;
using Q = RationalField;

namespace {

template <class Field>
void field_axioms(const Field& field, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  for (int i = 0; i < 200; ++i) {
    auto a = field.random_nonzero(gen), b = field.random_nonzero(gen), c = field.random_nonzero(gen);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + field.zero(), a);
    EXPECT_EQ(a * field.one(), a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(a / b * b, a);
  }
}

Polynomial<Q> var(const RingPtr<Q>& r, const char* n) { return r->variable(n); }

}  // namespace

TEST(Coefficients, RationalFieldAxioms) { field_axioms(Q{}, 1); }
TEST(Coefficients, PrimeFieldAxioms) { field_axioms(PrimeField(), 2); }
TEST(Coefficients, SmallPrimeFieldAxioms) { field_axioms(PrimeField(7), 3); }

TEST(Coefficients, DivisionByZeroThrows) {
  EXPECT_THROW(Q{}.zero().inverse(), ArithmeticError);
  EXPECT_THROW(PrimeField().zero().inverse(), ArithmeticError);
}

TEST(Coefficients, PrimeFieldReducesRationals) {
  PrimeField f(7);
  EXPECT_EQ(f.from_rational(1, 2) * f.from_integer(2), f.one());
  EXPECT_EQ(f.from_integer(-1), f.from_integer(6));
}

TEST(MonomialOrder, TotalMultiplicativeAndWellFounded) {
  MonomialOrder order({1, 2, 1});
  std::vector<Monomial> ms;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        Monomial m(3);
        m.set(0, a);
        m.set(1, b);
        m.set(2, c);
        ms.push_back(m);
      }
  const Monomial one(3);
  for (const auto& a : ms) {
    EXPECT_FALSE(order.less(a, one));
    for (const auto& b : ms) {
      const bool lt = order.less(a, b), gt = order.less(b, a);
      EXPECT_EQ(lt || gt, !(a == b));
      for (const auto& c : ms) {
        if (lt) EXPECT_TRUE(order.less(a * c, b * c));
        if (lt && order.less(b, c)) EXPECT_TRUE(order.less(a, c));
      }
    }
  }
}

TEST(MonomialOrder, GradedByWeights) {
  MonomialOrder order({1, 3});
  Monomial x3(2), y(2);
  x3.set(0, 3);
  y.set(1, 1);
  EXPECT_EQ(order.degree(x3), order.degree(y));
  EXPECT_TRUE(order.less(y, x3));  // reverse lexicographic tie break: smaller last exponent wins
}

TEST(Ideals, SaturationMatchesUnionOfQuotients) {
  auto r = Ring<Q>::polynomial(Q{}, {"x", "y", "z"});
  auto x = var(r, "x"), y = var(r, "y"), z = var(r, "z");
  Ideal<Q> a(r, {x.pow(3) * y, x * y.pow(2) * z, z.pow(4)});
  auto sat = saturation(a, x);
  // the chain A : x^k is ascending and its union is reached by the reported exponent
  Ideal<Q> brute = a;
  for (int k = 1; k <= 8; ++k) {
    auto q = ideal_quotient(a, x.pow(k));
    EXPECT_TRUE(q.contains(brute));
    brute = q;
  }
  EXPECT_TRUE(sat.ideal == brute);
  EXPECT_TRUE(ideal_quotient(a, x.pow(sat.exponent)) == brute);
}

TEST(Ideals, ColengthIsAntitone) {
  auto r = Ring<Q>::polynomial(Q{}, {"x", "y"});
  auto x = var(r, "x"), y = var(r, "y");
  std::vector<Ideal<Q>> chain = {
      Ideal<Q>(r, {x.pow(3), y.pow(3)}), Ideal<Q>(r, {x.pow(3), x * y, y.pow(3)}),
      Ideal<Q>(r, {x.pow(2), x * y, y.pow(2)}), Ideal<Q>(r, {x, y.pow(2)}), Ideal<Q>::maximal(r)};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    ASSERT_TRUE(chain[i + 1].contains(chain[i]));
    EXPECT_GE(colength(chain[i]), colength(chain[i + 1]));
  }
  EXPECT_EQ(colength(chain[0]), 9);
  EXPECT_EQ(colength(chain[4]), 1);
}

TEST(Ideals, ColengthOfMonomialIdealCountsStandardMonomials) {
  auto r = Ring<Q>::polynomial(Q{}, {"x", "y", "z"});
  auto x = var(r, "x"), y = var(r, "y"), z = var(r, "z");
  std::vector<oracle::Exps> gens{{2, 0, 0}, {0, 3, 0}, {0, 0, 2}, {1, 1, 1}};
  Ideal<Q> a(r, {x.pow(2), y.pow(3), z.pow(2), x * y * z});
  long long count = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) count += !oracle::in_monomial_ideal(gens, {i, j, k});
  EXPECT_EQ(colength(a), count);
}

TEST(Ideals, IntersectionAndProduct) {
  auto r = Ring<Q>::polynomial(Q{}, {"x", "y"});
  auto x = var(r, "x"), y = var(r, "y");
  Ideal<Q> a(r, {x}), b(r, {y});
  EXPECT_TRUE(ideal_intersection(a, b) == Ideal<Q>(r, {x * y}));
  EXPECT_TRUE(ideal_product(a, b) == Ideal<Q>(r, {x * y}));
  EXPECT_TRUE(ideal_sum(a, b) == Ideal<Q>::maximal(r));
}

TEST(Toric, R4ColengthsMatchSemigroupCount) {
  std::vector<oracle::Exps> s{{4, 0}, {3, 1}, {1, 3}, {0, 4}};
  const long long expected = oracle::semigroup_colength(s, {{4, 0}, {6, 2}, {0, 4}}, 8);
  ASSERT_EQ(expected, 4);
  ASSERT_EQ(oracle::semigroup_colength(s, {{4, 0}, {2, 6}, {0, 4}}, 8), 4);
  auto r4 = ring_r4(Q{});
  auto a = var(r4, "a"), d = var(r4, "d");
  EXPECT_EQ(colength(infty_ideal(r4, {a, d}).closure), expected);
  EXPECT_EQ(colength(infty_ideal(r4, {d, a}).closure), expected);
}

TEST(Toric, R4MultiplicityMatchesSemigroupHilbertSamuel) {
  std::vector<oracle::Exps> s{{4, 0}, {3, 1}, {1, 3}, {0, 4}};
  const long long e = oracle::semigroup_multiplicity(s, {{4, 0}, {0, 4}}, 2, 6, 2);
  auto r4 = ring_r4(Q{});
  auto a = var(r4, "a"), d = var(r4, "d");
  EXPECT_EQ(mult_hs(Ideal<Q>(r4, {a, d})).value, e);
  EXPECT_EQ(mult_param(r4, {a, d}).value, e);
}

TEST(Newton, AgreesWithPowerTestOnThreeGeneratorSamples) {
  // three generators in three variables can need k > 6, so this sample uses k <= 12
  std::mt19937 gen(7);
  for (int t = 0; t < 60; ++t) {
    std::vector<oracle::Exps> gens;
    for (int i = 0; i < 3; ++i) gens.push_back({int(gen() % 5), int(gen() % 5), int(gen() % 5)});
    gens = oracle::minimalize(gens);
    std::vector<ExponentVector> pts(gens.begin(), gens.end());
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (int c = 0; c <= 4; ++c) {
          oracle::Exps v{a, b, c};
          EXPECT_EQ(in_newton_polyhedron(v, pts), oracle::power_test(gens, v, 12));
        }
  }
}

TEST(Newton, ClosureIsIdempotentAndContainsIdeal) {
  auto r = Ring<Q>::polynomial(Q{}, {"x", "y"});
  auto x = var(r, "x"), y = var(r, "y");
  Ideal<Q> a(r, {x.pow(4), y.pow(4)});
  auto c = integral_closure(a).closure;
  EXPECT_TRUE(c.contains(a));
  EXPECT_TRUE(integral_closure(c).closure == c);
  EXPECT_TRUE(c == ideal_power(Ideal<Q>::maximal(r), 4));
}

TEST(Closures, R2IdealsAreStanleyReisnerFixedPoints) {
  auto r2 = ring_r2(Q{});
  auto x = var(r2, "x"), y = var(r2, "y"), z = var(r2, "z");
  for (int n = 2; n <= 6; ++n) {
    Ideal<Q> a(r2, {x.pow(n), y, z});
    auto c = stanley_reisner_closure(a);
    EXPECT_TRUE(c.closure == a) << n;
    EXPECT_EQ(mult_hs(a).value, 1);
    EXPECT_EQ(colength(a), n);
  }
}

TEST(Closures, ReesMembershipShortCircuitAndWitness) {
  auto r4 = ring_r4(Q{});
  auto a = var(r4, "a"), b = var(r4, "b"), c = var(r4, "c"), d = var(r4, "d");
  Ideal<Q> j(r4, {a, d});
  EXPECT_TRUE(rees_membership(a, j, false).short_circuit);
  EXPECT_TRUE(rees_membership(b, j, false).member);
  EXPECT_TRUE(rees_membership(c, j, false).member);
  EXPECT_TRUE(integral_closure(j).closure == Ideal<Q>::maximal(r4));
}

TEST(Closures, ReesRefusesNonEquidimensionalRing) {
  auto r2 = ring_r2(Q{});
  auto x = var(r2, "x"), y = var(r2, "y"), z = var(r2, "z");
  Ideal<Q> a(r2, {x.pow(2), y, z});
  EXPECT_THROW(rees_membership(x, a, false), UnsupportedError);
}

TEST(Closures, LimitChainAscendsToMaximalIdealInR3) {
  auto r3 = ring_r3(Q{});
  auto a = var(r3, "a"), b = var(r3, "b"), c = var(r3, "c"), d = var(r3, "d");
  auto lim = limit_closure(r3, {a + c, b + d});
  EXPECT_TRUE(lim.closure == Ideal<Q>::maximal(r3));
  for (std::size_t i = 0; i + 1 < lim.diagnostics.chain_colengths.size(); ++i) {
    EXPECT_GE(lim.diagnostics.chain_colengths[i], lim.diagnostics.chain_colengths[i + 1]);
  }
}

TEST(Closures, LimitClosureRejectsNonParameters) {
  auto r = Ring<Q>::polynomial(Q{}, {"x", "y"});
  auto x = var(r, "x");
  EXPECT_FALSE(is_system_of_parameters(r, {x, x}));
  EXPECT_THROW(limit_closure(r, {x, x}), UsageError);
  // the saturation closure accepts any sequence: (x) : x^inf is the unit ideal
  auto inf = infty_ideal(r, {x, x});
  EXPECT_TRUE(inf.closure.is_unit());
  EXPECT_TRUE(inf.diagnostics.primary_or_unit.value_or(false));
  auto y = var(r, "y");
  auto single = infty_ideal(r, {y});
  EXPECT_FALSE(single.diagnostics.primary_or_unit.has_value());
}

TEST(Multiplicity, UnstabilizedRaises) {
  auto r = Ring<Q>::polynomial(Q{}, {"x", "y"});
  auto x = var(r, "x"), y = var(r, "y");
  auto lim = [&] { return limit_closure(r, {x, y}, LimitOptions{3, 1}); };
  EXPECT_THROW(lim(), UnstabilizedError);
}

TEST(Multiplicity, PolynomialRingIdealsMatchKnownValues) {
  auto r = Ring<Q>::polynomial(Q{}, {"x", "y"});
  auto x = var(r, "x"), y = var(r, "y");
  EXPECT_EQ(mult_hs(Ideal<Q>(r, {x.pow(2), y.pow(3)})).value, 6);
  EXPECT_EQ(mult_hs(Ideal<Q>::maximal(r)).value, 1);
  EXPECT_EQ(mult_hs(ideal_power(Ideal<Q>::maximal(r), 2)).value, 4);
}

TEST(Multiplicity, RandomReductionIsDeterministicPerSeed) {
  auto r3 = ring_r3(Q{});
  auto m = Ideal<Q>::maximal(r3);
  auto first = random_reduction(m, 42), second = random_reduction(m, 42);
  ASSERT_EQ(first.sequence.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(first.sequence[i].to_string(), second.sequence[i].to_string());
  EXPECT_EQ(first.multiplicity, 2);
}

TEST(Detectors, CohenMacaulayVerdicts) {
  auto r5 = ring_r5(Q{});
  auto y = var(r5, "y"), z = var(r5, "z");
  EXPECT_EQ(check_cm_via_lim(r5, {y, z}).verdict, Verdict::cohen_macaulay);
  auto r4 = ring_r4(Q{});
  EXPECT_EQ(check_cm_via_lim(r4, {var(r4, "a"), var(r4, "d")}).verdict, Verdict::not_cohen_macaulay);
}

TEST(Detectors, RegularityOfPolynomialRingIdeal) {
  auto r = Ring<Q>::polynomial(Q{}, {"x", "y"});
  auto x = var(r, "x"), y = var(r, "y");
  auto rep = check_regular(Ideal<Q>(r, {x.pow(2), y}));
  EXPECT_EQ(rep.verdict, Verdict::regular);
  EXPECT_EQ(rep.integer("e"), 2);
  EXPECT_EQ(rep.integer("colength"), 2);
}

TEST(Detectors, InequalityHoldsInEquidimensionalRing) {
  auto r4 = ring_r4(Q{});
  auto rep = check_inequality(Ideal<Q>::maximal(r4));
  EXPECT_EQ(rep.verdict, Verdict::holds);
  EXPECT_GE(rep.integer("e"), rep.integer("colength"));
}

TEST(Corpus, PropertiesHoldOverPrimeField) {
  auto entries = corpus(PrimeField());
  EXPECT_EQ(property_colength_bound(entries).verdict, Verdict::holds);
  EXPECT_EQ(property_parameter_chain(entries).verdict, Verdict::holds);
  EXPECT_EQ(property_regularity(entries).verdict, Verdict::holds);
}
