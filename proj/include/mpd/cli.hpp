#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mpd/cotree.hpp"
#include "mpd/oracle.hpp"

namespace mpd::cli {

enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kNoSolution = 2,
  kNotCograph = 3,
  kVerifyFailed = 4,
};

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::string cotree_path;
  std::string restricted;     // file path, or an inline comma list
  std::string solution_path;
  std::string output;         // gen: base name for <output>.cotree / <output>.restricted
  std::uint64_t seed = 1;
  Vertex n = 1;
  double join_bias = 0.5;
  double density = 0.5;
  std::vector<Vertex> sizes;
  int repeats = 1;
  bool gamma_p = false;
  bool reference_oracle = false;
  std::int64_t edge_cap = kDefaultEdgeCap;
  Vertex oracle_cap = kDefaultOracleCap;
};

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_recognize(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct BenchSample {
  Vertex n = 0;
  std::uint64_t seed = 0;
  std::int64_t solve_ns = 0;
  std::int64_t pairs = 0;
  std::int64_t beta = 0;
};

struct BenchReport {
  std::vector<BenchSample> samples;                 // repeats consecutive per size
  std::vector<std::pair<Vertex, std::int64_t>> medians;
  std::vector<double> ratios;                       // medians[i] / medians[i-1]
};

/// Times solve on one seeded cotree per size, with the root forced to a join
/// so every instance has a solution. Instances are generated up front; the
/// timed sections run one at a time.
BenchReport run_bench(const std::vector<Vertex>& sizes, int repeats, std::uint64_t seed,
                      double join_bias, double density);
std::string format_bench_csv(const BenchReport& report);

/// Parses argv (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpd::cli
