// Times the suite runner serially and over OpenMP threads on the same
// configuration and checks that both produce the same report payload.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cloc/suites.hpp"

using namespace cloc;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 4;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 1;
  if (n < 1 || n > 12 || repeats < 1) {
    std::fprintf(stderr, "usage: bench_suites [n=4] [repeats=1]\n");
    return 2;
  }
  InstanceConfig cfg;
  cfg.n = n;
  cfg.seed = 7;
  cfg.samples = 200;
  cfg.suites = {"kernel", "stilde", "identify", "equivalence"};
  if (n <= 4) {
    cfg.t_mode = TMode::All;
  } else {
    cfg.t_mode = TMode::Random;
    cfg.random_count = 8;
  }
  const Category c = Category::build(Polygon{n});

  auto time_run = [&](Exec exec, std::string& payload) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const SuiteReport rep = run_suites(c, cfg, exec);
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      best = s < best ? s : best;
      payload = report_json(rep, false).dump();
    }
    return best;
  };

  std::string serial_payload, parallel_payload;
  const double serial = time_run(Exec::Serial, serial_payload);
  const double parallel = time_run(Exec::Parallel, parallel_payload);
  const bool same = serial_payload == parallel_payload;
  std::printf("n=%d suites=kernel,stilde,identify,equivalence threads=%d\n", n, parallel_threads());
  std::printf("serial   %8.3f s\n", serial);
  std::printf("parallel %8.3f s  speedup %.2fx\n", parallel, serial / parallel);
  std::printf("reports %s\n", same ? "identical" : "DIFFER");
  return same ? 0 : 1;
}
