#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "closure_lab/script/output.hpp"

using namespace closure_lab;
using namespace closure_lab::script;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Location error_at(const std::string& src) {
  try {
    check_script(parse_script(src));
  } catch (const ScriptError& e) {
    return e.location();
  }
  ADD_FAILURE() << "no error for: " << src;
  return {};
}

std::string error_message(const std::string& src) {
  try {
    check_script(parse_script(src));
  } catch (const ScriptError& e) {
    return e.what();
  }
  return "";
}

const char* kR2 =
    "ring R = quotient(poly(Q, [x,y,z]), ideal(x*y, x*z));\n"
    "ideal I = ideal(R, x^3, y, z);\n"
    "assert colength(I) == 3;\n"
    "report check_regular(R, I, assume_unmixed=true);\n";

}  // namespace

TEST(Parser, FourStatementScript) {
  auto s = parse_script(kR2);
  ASSERT_EQ(s.statements.size(), 4u);
  EXPECT_EQ(s.statements[2].loc.line, 3);
  EXPECT_EQ(s.statements[2].loc.column, 1);
  EXPECT_NO_THROW(check_script(s));
}

TEST(Parser, RoundTripIsIdentity) {
  const std::vector<std::string> sources = {
      kR2,
      "let e = -(x + y)^2 * 3 - 2^3^2 / 4;",
      "ring R = toric(K, [[4,0],[3,1],[1,3],[0,4]], [a,b,c,d]);  # comment\nideal A = infty(R, [a, d]);",
      "assert verdict(check_chain(R, J, assume_equidim=true)) != \"fails\";",
      "report (a - (b - c)) - d + a*(b*c) + (a*b)*c;",
      "let z = x^(y^2) + (x^y)^2 + -x^2;",
  };
  for (const auto& src : sources) {
    auto first = parse_script(src);
    auto printed = print(first);
    auto second = parse_script(printed);
    EXPECT_TRUE(equal(first, second)) << src << "\n=> " << printed;
    EXPECT_EQ(print(second), printed);
  }
}

TEST(Parser, MissingOperatorIsReportedAtTheGap) {
  auto loc = error_at("ring R = poly(Q, [x, y]);\nideal I = ideal(R, x^3 y);\n");
  EXPECT_EQ(loc.line, 2);
  EXPECT_EQ(loc.column, 24);
}

TEST(Parser, UnterminatedStringAndStrayCharacter) {
  EXPECT_EQ(error_at("let s = \"abc;\n").line, 1);
  auto loc = error_at("let s = 1;\nlet t = 2 $ 3;\n");
  EXPECT_EQ(loc.line, 2);
  EXPECT_EQ(loc.column, 11);
}

TEST(Checker, UseBeforeDefinition) {
  auto loc = error_at("report mult(I);\nideal I = ideal(R, x);\n");
  EXPECT_EQ(loc.line, 1);
  EXPECT_NE(error_message("report mult(I);").find("undefined name 'I'"), std::string::npos);
}

TEST(Checker, ArityAndNamedArguments) {
  EXPECT_NE(error_message("ring R = poly(Q, [x]);\nreport colength(R, R);").find("takes 1 argument"), std::string::npos);
  EXPECT_NE(error_message("ring R = poly(Q, [x]);\nreport colength(maximal(R), bogus=true);").find("no named argument"),
            std::string::npos);
}

TEST(Checker, VariablesMustBelongToTheRing) {
  auto msg = error_message("ring R = poly(Q, [x, y]);\nideal I = ideal(R, x, w);");
  EXPECT_NE(msg.find("'w'"), std::string::npos);
}

TEST(Checker, RebindingIsRejected) {
  EXPECT_FALSE(error_message("ring R = poly(Q, [x]);\nring R = poly(Q, [y]);").empty());
  EXPECT_FALSE(error_message("let mult = 3;").empty());
  EXPECT_FALSE(error_message("let Q = 3;").empty());
}

TEST(Runner, R2ScriptExitCodeAndReports) {
  RunConfig cfg;
  auto r = run_source(kR2, cfg);
  EXPECT_EQ(r.exit_code(), 0);
  ASSERT_EQ(r.reports.size(), 2u);
  EXPECT_EQ(r.reports[1].report.verdict, Verdict::not_regular);
  EXPECT_EQ(r.reports[1].loc.line, 4);
}

TEST(Runner, ExitCodes) {
  RunConfig cfg;
  EXPECT_EQ(run_source("ring R = poly(Q, [x]);\nassert colength(ideal(R, x^2)) == 3;", cfg).exit_code(), 1);
  EXPECT_EQ(run_source("ring R = poly(Q, [x]);\nreport tight_closure(ideal(R, x));", cfg).exit_code(), 2);
  EXPECT_EQ(run_source("ring R = poly(Q, [x]);\nreport mult(ideal(R, 0));", cfg).exit_code(), 2);
  EXPECT_EQ(run_source("ring R = poly(Q, [x]) ideal", cfg).exit_code(), 3);
}

TEST(Runner, HaltPolicyStopsAtFirstFailure) {
  const char* src = "ring R = poly(Q, [x]);\nassert 1 == 2;\nassert 2 == 3;\n";
  RunConfig cfg;
  EXPECT_EQ(run_source(src, cfg).assertions, 2);
  cfg.policy = FailurePolicy::halt;
  EXPECT_EQ(run_source(src, cfg).assertions, 1);
}

TEST(Runner, EngineErrorCarriesStatementLocation) {
  RunConfig cfg;
  auto r = run_source("ring R = poly(Q, [x, y]);\n\nlet L = lim(R, [x, x]);", cfg);
  EXPECT_EQ(r.exit_code(), 2);
  EXPECT_EQ(r.error_loc.line, 3);
}

TEST(Runner, FieldSelection) {
  RunConfig cfg;
  EXPECT_EQ(run_source("ring R = poly(GF(7), [x]);", cfg).field, PrimeField(7).name());
  EXPECT_EQ(run_source("ring R = poly(K, [x]);", cfg).field, RationalField{}.name());
  cfg.field = FieldChoice::prime;
  EXPECT_EQ(run_source("ring R = poly(Q, [x]);", cfg).field, PrimeField().name());
  cfg.field = FieldChoice::automatic;
  EXPECT_EQ(run_source("ring R = poly(Q, [x]);\nring S = poly(GF(7), [y]);", cfg).exit_code(), 2);
}

TEST(Runner, ArithmeticInPrimeField) {
  RunConfig cfg;
  auto r = run_source("ring R = poly(GF(7), [x]);\nassert element(R, 8*x) == element(R, x);", cfg);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Runner, GoldenScriptsPassOverBothFields) {
  for (const char* name : {"toric_order_dependence", "nonequidimensional_colength", "mixed_components_limit"}) {
    auto src = read_file(std::string(CLOSURE_LAB_SCRIPTS_DIR) + "/" + name + ".cca");
    ASSERT_FALSE(src.empty()) << name;
    RunConfig cfg;
    auto r = run_source(src, cfg);
    EXPECT_EQ(r.exit_code(), 0) << name << "\n" << to_text(r);
    EXPECT_GT(r.assertions, 0);
    cfg.field = FieldChoice::prime;
    EXPECT_EQ(run_source(src, cfg).exit_code(), 0) << name;
  }
}

TEST(Output, JsonIsDeterministicAndCarriesSeed) {
  const char* src =
      "ring R = quotient(poly(K, [a,b,c,d]), ideal(a*c, a*d, b*c, b*d));\n"
      "report random_reduction(maximal(R));\n";
  RunConfig cfg;
  cfg.seed = 42;
  auto one = to_json(run_source(src, cfg), cfg).dump(2);
  auto two = to_json(run_source(src, cfg), cfg).dump(2);
  EXPECT_EQ(one, two);
  auto doc = Json::parse(one);
  EXPECT_EQ(doc["seed"], 42);
  EXPECT_EQ(doc["reports"].size(), 1u);
  for (const char* key : {"statement", "location", "quantities", "verdict", "hypotheses", "witnesses"}) {
    EXPECT_TRUE(doc["reports"][0].contains(key)) << key;
  }
  cfg.seed = 43;
  EXPECT_NE(to_json(run_source(src, cfg), cfg).dump(2), one);
}
