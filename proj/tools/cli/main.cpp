#include <iostream>

#include "CLI11.hpp"
#include "api.hpp"
#include "commands.hpp"
#include "config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate, measure and size hierarchical spatial networks"};
  app.set_version_flag("--version", std::string(soenet_version()));
  app.require_subcommand(0, 1);

  std::string config_path;
  std::vector<uint64_t> seeds;
  std::string out_dir;
  std::vector<std::string> generators;
  cli::Options opts;

  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", seeds, "seed to run (repeatable); overrides the config list");
  app.add_option("--out", out_dir, "output directory; overrides the config");
  app.add_option("--generator", generators, "generator(s) to run: growth, partial, random")
      ->check(CLI::IsMember({"growth", "partial", "random"}));
  app.add_option("--format", opts.format, "graph/diagram format")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_flag("-q,--quiet", opts.quiet, "suppress progress messages");
  bool print_config = false;
  app.add_flag("--print-config", print_config, "print the effective configuration and exit");

  auto* gen = app.add_subcommand("generate", "build graphs for each generator and seed");
  auto* ana = app.add_subcommand("analyze", "metrics, degree grids and the network comparison table");
  ana->add_option("graphs", opts.inputs, "graph files (default: everything under OUT/graphs)");
  auto* area = app.add_subcommand("area", "physical area, capacities and feed-forward sizing");
  area->add_option("--mode", opts.area_mode, "exact | scaling | delta")
      ->check(CLI::IsMember({"exact", "scaling", "delta"}));
  area->add_option("--graph", opts.inputs, "graph file(s) for exact mode");
  area->add_option("--k0", opts.k0, "uniform degrees for the delta capacity");
  area->add_option("--highlight", opts.highlight, "node to emphasise in the routing diagram");
  auto* pow = app.add_subcommand("power", "firing energy and network power");
  pow->add_option("--graph", opts.inputs, "graph whose in-degree range is also evaluated");
  auto* pool = app.add_subcommand("pool", "neuronal pool size and platform ratio");
  auto* sweep = app.add_subcommand("sweep", "plot-ready sweep data");
  sweep->add_option("names", opts.sweeps, "fig5a fig5b fig5c fig7 fig14 power all (default all)")
      ->check(CLI::IsMember({"fig5a", "fig5b", "fig5c", "fig7", "fig14", "power", "all"}));
  auto* repro = app.add_subcommand("reproduce-paper", "full pipeline: generate, analyze, area, sweeps, power, pool");

  CLI11_PARSE(app, argc, argv);

  try {
    opts.config = config_path.empty() ? cli::RunConfig{} : cli::load_config(config_path);
    if (!seeds.empty()) opts.config.seeds = seeds;
    if (!out_dir.empty()) opts.config.output = out_dir;
    if (!generators.empty()) opts.config.generators = generators;
    opts.config.validate();
    if (print_config) {
      std::cout << opts.config.to_json().dump(2) << '\n';
      return 0;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return static_cast<int>(SOENET_INVALID_ARGUMENT);
    }

    if (gen->parsed()) return cli::cmd_generate(opts);
    if (ana->parsed()) return cli::cmd_analyze(opts);
    if (area->parsed()) return cli::cmd_area(opts);
    if (pow->parsed()) return cli::cmd_power(opts);
    if (pool->parsed()) return cli::cmd_pool(opts);
    if (sweep->parsed()) return cli::cmd_sweep(opts);
    if (repro->parsed()) return cli::cmd_reproduce(opts);
  } catch (const cli::Failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.status());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(SOENET_INTERNAL_ERROR);
  }
  return 0;
}
