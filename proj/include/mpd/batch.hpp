#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpd/cotree.hpp"
#include "mpd/graph.hpp"

namespace mpd {

struct InstanceSpec {
  Vertex n = 0;
  double join_bias = 0.5;
  double density = 0.5;
  std::uint64_t seed = 0;
  bool connected = false;  // force a join at the root
};

struct Instance {
  Cotree tree;
  RestrictedSet restricted;
};

/// random_cotree and random_restricted drawn from the same seed. With
/// `connected`, the root becomes a join so no vertex is isolated.
Instance make_instance(const InstanceSpec& spec);

enum class Execution { Serial, Parallel };

struct BatchOutcome {
  std::optional<MPDSolution> solution;  // empty when the graph has isolated vertices
  std::vector<Vertex> isolated;
  std::string error;                    // unexpected failure, empty otherwise
};

/// Solves independent instances. Parallel runs one OpenMP thread per
/// instance slot; the serial path is the reference. Results are in input
/// order either way.
std::vector<BatchOutcome> solve_batch(std::span<const Instance> instances, Execution exec);

/// Builds the instances for `specs` with the same execution choice.
std::vector<Instance> make_instances(std::span<const InstanceSpec> specs, Execution exec);

int max_threads();

}  // namespace mpd
