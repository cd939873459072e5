// Timing comparison between the straight serial kernels and the OpenMP ones.
// Build and run: cmake --build build --target spinform_bench && ./build/bench/spinform_bench
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinform/character.hpp"
#include "spinform/findim.hpp"

using namespace spinform;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-38s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 3;
  bool quick = false;
  for (int a = 1; a < argc; ++a)
    if (std::strcmp(argv[a], "--quick") == 0) quick = true;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("%-38s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  struct Case {
    int rank;
    int depth;
  };
  std::vector<Case> grid = quick ? std::vector<Case>{{3, 16}} : std::vector<Case>{{2, 24}, {3, 20}, {4, 14}};

  for (const Case& c : grid) {
    Character s = spinor_character(c.rank, Parity::even, c.depth);
    Character d = weyl_denominator_inverse_ordered(c.rank, c.depth, positive_roots(c.rank), Exec::serial);
    char name[64];
    std::snprintf(name, sizeof name, "product l=%d depth=%d", c.rank, c.depth);
    double serial = time_best_of(reps, [&] { mul_serial(s, d, c.depth); });
    double parallel = time_best_of(reps, [&] { mul(s, d, c.depth, Exec::parallel); });
    row(name, serial, parallel);
  }

  for (const Case& c : grid) {
    char name[64];
    std::snprintf(name, sizeof name, "denominator inverse l=%d depth=%d", c.rank, c.depth);
    double serial = time_best_of(reps, [&] {
      weyl_denominator_inverse_ordered(c.rank, c.depth, positive_roots(c.rank), Exec::serial);
    });
    double parallel = time_best_of(reps, [&] {
      weyl_denominator_inverse_ordered(c.rank, c.depth, positive_roots(c.rank), Exec::parallel);
    });
    row(name, serial, parallel);
  }

  {
    Weight lam = Weight::from_fundamental(
        quick ? std::vector<HalfInt>{HalfInt(2), HalfInt(1), HalfInt(1)}
              : std::vector<HalfInt>{HalfInt(3), HalfInt(2), HalfInt(2)});
    double serial = time_best_of(reps, [&] { freudenthal_multiplicities(lam, Exec::serial); });
    double parallel = time_best_of(reps, [&] { freudenthal_multiplicities(lam, Exec::parallel); });
    row(("freudenthal " + lam.str()).c_str(), serial, parallel);
  }

  {
    std::vector<HalfInt> f{HalfInt(1), HalfInt(0), HalfInt(0), HalfInt::from_twice(-1)};
    Weight lam = Weight::from_fundamental(f);
    int depth = quick ? 10 : 14;
    double serial = time_best_of(reps, [&] { kac_wakimoto_character(lam, depth, Exec::serial); });
    double parallel = time_best_of(reps, [&] { kac_wakimoto_character(lam, depth, Exec::parallel); });
    char name[64];
    std::snprintf(name, sizeof name, "character formula l=4 depth=%d", depth);
    row(name, serial, parallel);
  }

  return 0;
}
