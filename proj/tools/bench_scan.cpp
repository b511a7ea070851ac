// Benchmark of the verification battery: serial reference runner against the
// OpenMP runner, with a result-equality check.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "rootstrata/verify.hpp"

using namespace rootstrata;

namespace {

double run_timed(const std::vector<VerifyTask>& tasks, bool parallel, VerifyReport& out) {
  auto start = std::chrono::steady_clock::now();
  out = parallel ? run_tasks_parallel(tasks) : run_tasks_serial(tasks);
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(end - start).count();
}

bool same_reports(const VerifyReport& a, const VerifyReport& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (size_t i = 0; i < a.checks.size(); ++i) {
    if (a.checks[i].name != b.checks[i].name || a.checks[i].pass != b.checks[i].pass ||
        a.checks[i].detail != b.checks[i].detail) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions opt;
  opt.max_rank = 6;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--max-rank") && i + 1 < argc) {
      opt.max_rank = std::atoi(argv[++i]);
    } else if (!std::strcmp(argv[i], "--deep")) {
      opt.deep = true;
    } else {
      std::fprintf(stderr, "usage: bench_scan [--max-rank N] [--deep]\n");
      return 2;
    }
  }

  auto tasks = build_verify_tasks(opt);
  std::printf("battery: %zu tasks, max rank %d%s\n", tasks.size(), opt.max_rank,
              opt.deep ? ", deep" : "");

  VerifyReport serial;
  double t_serial = run_timed(tasks, false, serial);
  std::printf("%-22s %8.3f s   (%d passed, %d failed)\n", "serial reference", t_serial,
              serial.passed, serial.failed);

  int max_threads = omp_get_max_threads();
  for (int threads : {2, 4, max_threads}) {
    if (threads > max_threads || threads < 2) continue;
    omp_set_num_threads(threads);
    VerifyReport parallel;
    double t_par = run_timed(tasks, true, parallel);
    bool same = same_reports(serial, parallel);
    std::printf("%-15s %2d thr %8.3f s   speedup %.2fx   results %s\n", "openmp", threads, t_par,
                t_serial / t_par, same ? "identical" : "DIFFER");
    if (!same) return 1;
    if (threads == max_threads) break;
  }
  return serial.failed == 0 ? 0 : 1;
}
