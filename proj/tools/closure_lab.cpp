// closure-lab: run .cca scripts and the bundled reproduction suite.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "paper_examples.hpp"

namespace {

using namespace closure_lab;

struct Flags {
  std::string field = "auto";
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  int window = 0;
  int max_n = 0;
  std::string policy = "collect";
  bool json = false;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--field", f.field, "coefficient field: q (rationals) or fp (prime field)")
      ->check(CLI::IsMember({"auto", "q", "fp"}));
  cmd->add_option("--prime", f.prime, "characteristic for --field fp")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "seed for random reductions");
  cmd->add_option("--window", f.window, "stabilization window for multiplicity and limit closure")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-n", f.max_n, "cap on n for Hilbert-Samuel and limit-closure sequences")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--policy", f.policy, "on a failed assertion: halt or collect")
      ->check(CLI::IsMember({"halt", "collect"}));
  cmd->add_flag("--json", f.json, "emit JSON");
}

script::RunConfig to_config(const Flags& f) {
  script::RunConfig cfg;
  if (f.field == "q") cfg.field = script::FieldChoice::rational;
  if (f.field == "fp") cfg.field = script::FieldChoice::prime;
  cfg.prime = f.prime;
  cfg.seed = f.seed;
  if (f.window > 0) cfg.window = f.window;
  if (f.max_n > 0) cfg.max_n = f.max_n;
  cfg.policy = f.policy == "halt" ? script::FailurePolicy::halt : script::FailurePolicy::collect;
  return cfg;
}

int run_file(const std::string& path, const Flags& flags) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "closure-lab: cannot read " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto cfg = to_config(flags);
  auto result = script::run_source(buf.str(), cfg);
  if (flags.json) {
    std::cout << script::to_json(result, cfg).dump(2) << "\n";
  } else {
    std::cout << script::to_text(result);
  }
  return result.exit_code();
}

int run_examples(const Flags& flags) {
  auto cfg = to_config(flags);
  auto res = tools::paper_examples(cfg);
  if (flags.json) {
    std::cout << res.document.dump(2) << "\n";
  } else {
    std::cout << tools::summary_table(res);
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closure-lab: integral, limit and saturation closures of ideals in graded rings"};
  app.require_subcommand(1);

  Flags run_flags, example_flags;
  std::string file;
  auto* run = app.add_subcommand("run", "run a .cca script");
  run->add_option("file", file, "script file")->required();
  add_flags(run, run_flags);
  auto* examples = app.add_subcommand("paper-examples", "run the golden scripts and the corpus property suite");
  add_flags(examples, example_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }
  try {
    if (*run) return run_file(file, run_flags);
    return run_examples(example_flags);
  } catch (const std::exception& e) {
    std::cerr << "closure-lab: " << e.what() << "\n";
    return 2;
  }
}
