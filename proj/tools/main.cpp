// groupoidkit: command-line front end.
//
//   groupoidkit validate FILE
//   groupoidkit generate KIND [--n N] [--group G ...] [--seed S] [--budget B] [--count C]
//   groupoidkit quotient FILE --subgroupoid LABEL ...
//   groupoidkit abelianize FILE
//   groupoidkit dual FILE
//   groupoidkit characters FILE
//   groupoidkit check FILE | --corpus [--seed S] [--count C] [--budget B] [--jobs J]
//
// Every command accepts --output PATH; JSON goes to stdout otherwise.
// Exit codes: 0 success, 1 semantic failure, 2 input/parse failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "groupoidkit/commands.hpp"

namespace cli = gk::cli;

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoids, quotients, abelianization and convolution algebras"};
  app.require_subcommand(1);

  std::string path, output;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  int budget = 20, jobs = 1;
  std::size_t max_exact = gk::CheckOptions{}.max_exact_arrows;
  std::vector<std::string> labels;
  cli::GenerateRequest gen;
  bool corpus = false;

  auto with_output = [&output](CLI::App* sub) {
    sub->add_option("--output", output, "Write JSON here instead of stdout");
    return sub;
  };

  auto* validate = with_output(app.add_subcommand("validate", "Check the groupoid axioms"));
  validate->add_option("file", path, "GroupoidDocument JSON")->required();

  auto* generate = with_output(app.add_subcommand("generate", "Emit a generated groupoid document"));
  generate->add_option("kind", gen.kind, "Generator")->required()->check(CLI::IsMember(cli::generator_kinds()));
  generate->add_option("--n", gen.n, "Number of points (trivial, pair)");
  generate->add_option("--group", gen.groups, "Library group, or point=GROUP for bundles");
  generate->add_option("--seed", gen.seed, "Seed (random, abelian-bundle)");
  generate->add_option("--budget", gen.budget, "Arrow budget (random)");
  generate->add_option("--count", gen.count, "Number of seeds, starting at --seed");

  auto* quotient = with_output(app.add_subcommand("quotient", "Quotient by a normal subgroupoid"));
  quotient->add_option("file", path)->required();
  quotient->add_option("--subgroupoid", labels, "Arrow labels of H (repeatable; labels may contain commas)")->required();

  auto* abelianize = with_output(app.add_subcommand("abelianize", "G_fix, G^ab, its dual bundle and dim"));
  abelianize->add_option("file", path)->required();

  auto* dual = with_output(app.add_subcommand("dual", "Dual bundle of an abelian group bundle"));
  dual->add_option("file", path)->required();

  auto* chars = with_output(app.add_subcommand("characters", "All character functionals"));
  chars->add_option("file", path)->required();

  auto* check = with_output(app.add_subcommand("check", "Run the invariant suite"));
  check->add_option("file", path);
  check->add_flag("--corpus", corpus, "Check random_groupoid(seed..seed+count-1, budget)");
  check->add_option("--seed", seed);
  check->add_option("--count", count);
  check->add_option("--budget", budget);
  check->add_option("--jobs", jobs, "Threads for corpus runs");
  check->add_option("--max-exact-arrows", max_exact, "Size cap for normal-subgroupoid enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputFailure;
  }

  std::ostringstream out;
  int code = cli::kOk;
  if (validate->parsed()) {
    code = cli::cmd_validate(path, out);
  } else if (generate->parsed()) {
    code = cli::cmd_generate(gen, out);
  } else if (quotient->parsed()) {
    code = cli::cmd_quotient(path, labels, out);
  } else if (abelianize->parsed()) {
    code = cli::cmd_abelianize(path, out);
  } else if (dual->parsed()) {
    code = cli::cmd_dual(path, out);
  } else if (chars->parsed()) {
    code = cli::cmd_characters(path, out);
  } else if (check->parsed()) {
    gk::CheckOptions options;
    options.max_exact_arrows = max_exact;
    if (corpus) {
      code = cli::cmd_check_corpus(seed, count, budget, jobs, options, out);
    } else if (path.empty()) {
      std::cerr << "check: pass FILE or --corpus\n";
      return cli::kInputFailure;
    } else {
      code = cli::cmd_check(path, options, out);
    }
  }

  if (output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(output);
    if (!file) {
      std::cerr << "cannot write '" << output << "'\n";
      return cli::kInputFailure;
    }
    file << out.str();
  }
  return code;
}
