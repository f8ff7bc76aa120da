// Serial vs OpenMP batch solve over independent seeded instances.
//   batch_bench [instances=400] [n=5000] [repeats=3]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "mpd/batch.hpp"

namespace {

bool same(const mpd::BatchOutcome& a, const mpd::BatchOutcome& b) {
  if (a.error != b.error || a.isolated != b.isolated) return false;
  if (a.solution.has_value() != b.solution.has_value()) return false;
  return !a.solution || a.solution->pairs == b.solution->pairs;
}

double seconds_of(mpd::Execution exec, const std::vector<mpd::Instance>& insts,
                  std::vector<mpd::BatchOutcome>& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = mpd::solve_batch(insts, exec);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int count = argc > 1 ? std::atoi(argv[1]) : 400;
  const int n = argc > 2 ? std::atoi(argv[2]) : 5000;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

  std::vector<mpd::InstanceSpec> specs;
  for (int i = 0; i < count; ++i) specs.push_back({n, 0.5, 0.5, static_cast<std::uint64_t>(i + 1)});
  const auto insts = mpd::make_instances(specs, mpd::Execution::Parallel);

  std::vector<double> serial, parallel;
  std::vector<mpd::BatchOutcome> ref, par;
  for (int r = 0; r < repeats; ++r) {
    serial.push_back(seconds_of(mpd::Execution::Serial, insts, ref));
    parallel.push_back(seconds_of(mpd::Execution::Parallel, insts, par));
    for (int i = 0; i < count; ++i) {
      if (!same(ref[i], par[i])) {
        std::printf("MISMATCH at instance %d\n", i);
        return 1;
      }
    }
  }
  std::sort(serial.begin(), serial.end());
  std::sort(parallel.begin(), parallel.end());
  const double s = serial[serial.size() / 2];
  const double p = parallel[parallel.size() / 2];
  std::printf("threads,%d\ninstances,%d\nn,%d\nserial_s,%.4f\nparallel_s,%.4f\nspeedup,%.2f\n",
              mpd::max_threads(), count, n, s, p, s / p);
  return 0;
}
