#pragma once

// Subcommands behind the rigor tool. Each returns an exit code and a JSON
// report; the report is byte-identical for the same input and seed once the
// timing field is dropped.

#include "rigor/io.hpp"
#include "rigor/random.hpp"

#include <cstdint>
#include <string>

namespace rigor {

inline constexpr const char* kVersion = "0.1.0";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int false_verdict = 1;
inline constexpr int parse = 2;
inline constexpr int scale = 3;
inline constexpr int hypothesis = 4;
inline constexpr int characterization_failed = 5;
inline constexpr int discrepancy = 6;
}  // namespace exit_code

struct CommandOptions {
  std::string file;
  unsigned k = 2;
  unsigned l = 0;
  unsigned t = 2;
  Index d = 0;  // 0 picks the mode default
  std::string mode;
  std::string backend = "pebble";
  std::string check = "both";
  std::uint64_t seed = 0;
  unsigned trials = kDefaultTrials;
  std::string out;
  bool timing = true;
  // fuzz
  std::size_t count = 200;
  std::size_t max_n = 5;
  double edge_prob = 0.5;
  double loop_rate = 0.5;
};

struct CommandResult {
  int exit_code = exit_code::ok;
  Json report;
};

CommandResult cmd_sparsity(const CommandOptions& opt);
CommandResult cmd_characterize(const CommandOptions& opt);
CommandResult cmd_realize(const CommandOptions& opt);
CommandResult cmd_bodybar(const CommandOptions& opt);
CommandResult cmd_fuzz(const CommandOptions& opt);

// Dispatches by name and turns library exceptions into exit codes with an
// "error" report.
CommandResult run_command(const std::string& name, const CommandOptions& opt);

// Knuth's multiplication method.
unsigned poisson(Rng& rng, double mean);

// n vertices, each pair joined with probability edge_prob, Poisson(loop_rate)
// loops per vertex.
LoopedGraph random_looped_graph(Rng& rng, std::size_t n, double edge_prob, double loop_rate);

}  // namespace rigor
