#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

#include "mpd/graph.hpp"
#include "mpd/solver.hpp"

namespace mpd {

inline constexpr Vertex kDefaultOracleCap = 16;

class CapExceeded : public InputError {
 public:
  CapExceeded(Vertex n, Vertex cap);
};

struct OracleOptions {
  Vertex cap = kDefaultOracleCap;
  bool reference = false;  // no pruning
};

struct DominatingMatching {
  std::span<const Edge> pairs;
  Vertex k = 0, s = 0, f = 0;
  Vertex matched_number = 0;
};

/// Calls `visit` for every matching of `g` whose vertex set dominates `g`,
/// each exactly once. Returns the number of matchings visited, dominating or
/// not.
std::uint64_t enumerate_dominating_matchings(
    const Graph& g, const RestrictedSet& restricted,
    const std::function<void(const DominatingMatching&)>& visit,
    Vertex cap = kDefaultOracleCap);

struct OracleResult {
  Vertex beta = 0;
  Vertex f_min = 0;
  MPDSolution witness;
  std::uint64_t count_explored = 0;
};

/// Maximum matched number, then fewest free pairs. Throws NoSolutionError
/// when no dominating matching exists.
OracleResult oracle_canonical(const Graph& g, const RestrictedSet& restricted,
                              const OracleOptions& options = {});

/// Twice the fewest pairs of any dominating matching.
Vertex oracle_paired_domination_number(const Graph& g, const OracleOptions& options = {});

}  // namespace mpd
