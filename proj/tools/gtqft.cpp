#include "gtqft/cli.hpp"
#include "gtqft/errors.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>

namespace {

void add_common(CLI::App* cmd, gtqft::cli::JobConfig& cfg) {
  cmd->add_option("--group", cfg.group, "Group: Z<n>/S<n>/D<n>, inline JSON, or a file");
  cmd->add_option("--budget", cfg.budget, "Enumeration candidate budget");
  cmd->add_option("--format", cfg.format, "Output format: json or csv");
  cmd->add_option("--seed", cfg.seed, "Seed for randomized verification suites");
  cmd->add_option("--parallel", cfg.parallel, "Worker threads for enumeration");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"F_G evaluator for cospans of finitely presented groupoids"};
  app.require_subcommand(1);

  gtqft::cli::JobConfig cfg;
  std::string presentation_arg, cospan_arg, example_arg;
  std::vector<std::string> compose_args, verify_suites;
  bool group_given = false;
  std::function<gtqft::cli::CommandResult()> run;

  CLI::App* homs = app.add_subcommand("homs", "Enumerate homs of a presentation into G");
  homs->add_option("presentation", presentation_arg, "Presentation JSON (file or inline)")
      ->required();
  homs->add_flag("--count", cfg.count_only, "Report only the count");
  add_common(homs, cfg);
  homs->callback([&] { run = [&] { return gtqft::cli::cmd_homs(presentation_arg, cfg); }; });

  CLI::App* classes =
      app.add_subcommand("classes", "Homs up to natural transformation, with class sizes");
  classes->add_option("presentation", presentation_arg, "Presentation JSON (file or inline)")
      ->required();
  add_common(classes, cfg);
  classes->callback(
      [&] { run = [&] { return gtqft::cli::cmd_classes(presentation_arg, cfg); }; });

  CLI::App* tqft = app.add_subcommand("tqft", "Matrix of F_G on a cospan");
  tqft->add_option("cospan", cospan_arg, "Cospan JSON (file or inline)")->required();
  tqft->add_flag("--raw", cfg.raw, "Also emit the raw counting matrix");
  tqft->add_flag("--normalized", cfg.normalized, "Also emit the normalized counting matrix");
  add_common(tqft, cfg);
  tqft->callback([&] { run = [&] { return gtqft::cli::cmd_tqft(cospan_arg, cfg); }; });

  CLI::App* comp = app.add_subcommand("compose", "Compose cospans left to right");
  comp->add_option("cospans", compose_args, "Cospan JSON files, boundary-compatible in order")
      ->required()
      ->expected(2, -1);
  comp->add_flag("--raw", cfg.raw, "Also emit the raw counting matrix");
  comp->add_flag("--normalized", cfg.normalized, "Also emit the normalized counting matrix");
  add_common(comp, cfg);
  comp->callback([&] {
    group_given = comp->count("--group") > 0;
    run = [&] { return gtqft::cli::cmd_compose(compose_args, cfg, group_given); };
  });

  CLI::App* ver = app.add_subcommand("verify", "Run invariant suites");
  ver->add_option("suites", verify_suites, "Suite names (default: all)");
  add_common(ver, cfg);
  ver->callback([&] { run = [&] { return gtqft::cli::cmd_verify(verify_suites, cfg); }; });

  CLI::App* ex = app.add_subcommand("example", "Emit a built-in cospan (and its matrix with --group)");
  ex->add_option("name", example_arg, "Example name")->required();
  ex->add_flag("--raw", cfg.raw, "Also emit the raw counting matrix");
  ex->add_flag("--normalized", cfg.normalized, "Also emit the normalized counting matrix");
  add_common(ex, cfg);
  ex->callback([&] {
    group_given = ex->count("--group") > 0;
    run = [&] { return gtqft::cli::cmd_example(example_arg, cfg, group_given); };
  });

  CLI11_PARSE(app, argc, argv);

  try {
    const gtqft::cli::CommandResult result = run();
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
  } catch (const gtqft::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
