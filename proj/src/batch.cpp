#include "mpd/batch.hpp"

#include <exception>

#include "mpd/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mpd {

Instance make_instance(const InstanceSpec& spec) {
  Instance inst{random_cotree(spec.n, spec.join_bias, spec.seed),
                random_restricted(spec.n, spec.density, spec.seed)};
  if (spec.connected && spec.n >= 2) inst.tree.set_kind(inst.tree.root(), Cotree::Kind::Join);
  return inst;
}

namespace {

BatchOutcome solve_one(const Instance& inst) {
  BatchOutcome out;
  try {
    out.solution = solve(inst.tree, inst.restricted);
  } catch (const NoSolutionError& e) {
    out.isolated = e.isolated();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

std::vector<BatchOutcome> solve_batch(std::span<const Instance> instances, Execution exec) {
  std::vector<BatchOutcome> out(instances.size());
  const auto count = static_cast<std::int64_t>(instances.size());
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < count; ++i) out[i] = solve_one(instances[i]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) out[i] = solve_one(instances[i]);
  return out;
}

std::vector<Instance> make_instances(std::span<const InstanceSpec> specs, Execution exec) {
  std::vector<Instance> out(specs.size());
  const auto count = static_cast<std::int64_t>(specs.size());
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < count; ++i) out[i] = make_instance(specs[i]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) out[i] = make_instance(specs[i]);
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mpd
