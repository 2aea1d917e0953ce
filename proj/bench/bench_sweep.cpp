// Serial reference vs OpenMP sweep, tuple box and random matrix mode.

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hopf/enumeration.hpp"

namespace {

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void compare(const char* label, const hopf::SweepSpec& spec, int threads) {
  hopf::SweepResult serial, parallel;
  const double ts = time_ms([&] { serial = hopf::sweep_serial(spec); });
  const double tp = time_ms([&] { parallel = hopf::sweep_parallel(spec, threads); });
  std::cout << label << ": cells=" << hopf::cell_count(spec) << " records=" << serial.records.size()
            << " serial=" << ts << "ms parallel=" << tp << "ms speedup=" << ts / tp
            << (serial.records == parallel.records ? "" : "  MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  int threads = argc > 1 ? std::atoi(argv[1]) : 0;
#ifdef _OPENMP
  if (threads == 0) threads = omp_get_max_threads();
#endif
  std::cout << "threads=" << threads << '\n';

  hopf::SweepSpec box;
  box.ranges = {hopf::IntRange{-2, 2}, {-2, 2}, {-4, 4}, {-2, 2}, {-2, 2}, {-4, 4}};
  compare("tuple box", box, threads);

  hopf::SweepSpec random;
  random.mode = hopf::SweepMode::Matrix;
  random.sample_count = 20000;
  random.seed = 17;
  random.word_length = 24;
  compare("random sl3", random, threads);
}
