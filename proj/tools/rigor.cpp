// rigor: sparsity certificates, rigidity characterizations and exact
// realizations of linearly-constrained frameworks.

#include "rigor/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Rigidity of linearly-constrained frameworks"};
  app.require_subcommand(1);
  rigor::CommandOptions opt;
  std::int64_t d = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "Input JSON")->required();
    sub->add_option("--seed", opt.seed, "Random seed")->envname("RIGOR_SEED");
    sub->add_flag("!--no-timing", opt.timing, "Omit the timing field");
  };

  auto* sparsity = app.add_subcommand("sparsity", "Certify (k,l)-sparsity");
  common(sparsity);
  sparsity->add_option("--k", opt.k, "k")->capture_default_str();
  sparsity->add_option("--l", opt.l, "l")->capture_default_str();
  sparsity->add_option("--backend", opt.backend, "pebble|brute")->capture_default_str();

  auto* characterize = app.add_subcommand("characterize", "Decide rigidity combinatorially");
  common(characterize);
  characterize->add_option("--mode", opt.mode, "main|plane3d|st2d|line")->required();
  characterize->add_option("--t", opt.t, "t for main mode")->capture_default_str();
  characterize->add_option("--d", d, "Dimension (mode default when omitted)");
  characterize->add_option("--trials", opt.trials, "Randomized trials")->capture_default_str();

  auto* realize = app.add_subcommand("realize", "Construct an exact rigid realization");
  common(realize);
  realize->add_option("--mode", opt.mode, "main|plane3d|line")->required();
  realize->add_option("--t", opt.t, "t for main mode")->capture_default_str();
  realize->add_option("--d", d, "Dimension (mode default when omitted)");
  realize->add_option("--out", opt.out, "Write the framework here");

  auto* bodybar = app.add_subcommand("bodybar", "Body-bar partition counts and rank");
  common(bodybar);
  bodybar->add_option("--check", opt.check, "count|rank|both")->capture_default_str();
  bodybar->add_option("--trials", opt.trials, "Attachment-point seeds for the rank")
      ->capture_default_str();

  auto* fuzz = app.add_subcommand("fuzz", "Characterization versus generic rank on random graphs");
  fuzz->add_option("--mode", opt.mode, "main|plane3d|st2d")->required();
  fuzz->add_option("--t", opt.t, "t for main mode")->capture_default_str();
  fuzz->add_option("--d", d, "Dimension (mode default when omitted)");
  fuzz->add_option("--count", opt.count, "Number of graphs")->capture_default_str();
  fuzz->add_option("--max-n", opt.max_n, "Largest vertex count")->capture_default_str();
  fuzz->add_option("--edge-prob", opt.edge_prob, "Edge probability")->capture_default_str();
  fuzz->add_option("--loop-rate", opt.loop_rate, "Mean loops per vertex")->capture_default_str();
  fuzz->add_option("--trials", opt.trials, "Generic rank trials")->capture_default_str();
  fuzz->add_option("--seed", opt.seed, "Random seed")->envname("RIGOR_SEED");
  fuzz->add_option("--out", opt.out, "Directory for reproducer files");
  fuzz->add_flag("!--no-timing", opt.timing, "Omit the timing field");

  CLI11_PARSE(app, argc, argv);
  opt.d = static_cast<rigor::Index>(d);
  const std::string name = app.get_subcommands().front()->get_name();
  const rigor::CommandResult r = rigor::run_command(name, opt);
  std::cout << r.report.dump(2) << '\n';
  return r.exit_code;
}
