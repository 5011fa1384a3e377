// Timing of the class-count kernels: the recursive reference, the bitmask
// kernel on one thread, and the OpenMP split over several thread counts.
//
//   commclass_bench [max_rank=8] [max_threads=hardware]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "commclass/engine.hpp"

using namespace commclass;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
  const int max_rank = argc > 1 ? std::atoi(argv[1]) : 8;
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const int max_threads = argc > 2 ? std::atoi(argv[2]) : hw;

  std::printf("%-5s %-12s %-10s %10s %14s\n", "rank", "kernel", "threads", "seconds", "classes/s");
  for (int n = 5; n <= max_rank; ++n) {
    const auto w0 = longest_element(n);
    BigCount expected;

    // The reference walks permutations by value and is far slower; cap it.
    if (n <= 7) {
      const double t = seconds([&] { expected = count_commutation_classes_reference(w0); });
      std::printf("%-5d %-12s %-10d %10.4f %14.0f\n", n, "reference", 1, t, expected.convert_to<double>() / t);
    }
    for (int threads = 1; threads <= max_threads; threads *= 2) {
      BigCount got;
      const double t = seconds([&] { got = count_commutation_classes(w0, threads); });
      std::printf("%-5d %-12s %-10d %10.4f %14.0f\n", n, threads == 1 ? "serial" : "openmp", threads, t,
                  got.convert_to<double>() / t);
      if (n <= 7 && got != expected) {
        std::fprintf(stderr, "count mismatch at rank %d\n", n);
        return 1;
      }
    }
  }
  return 0;
}
