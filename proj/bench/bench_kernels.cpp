// Times the serial reference against the optimized single-range kernel and
// the OpenMP path, plus the group convolution at two worker counts.

#include <chrono>
#include <cstdio>
#include <string>

#include "qmm/count_kernel.hpp"
#include "qmm/fq_counter.hpp"
#include "qmm/group_counter.hpp"

using namespace qmm;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_kernel(const char* label, uint32_t p, int m) {
  const BilinearKernel k = compile_bilinear(jet_system(loop_quiver(2), {2}, m), p);
  const uint64_t total = k.forward_tuple_count().convert_to<uint64_t>();
  std::printf("%s: p=%u m=%d, %llu forward tuples\n", label, p, m,
              static_cast<unsigned long long>(total));

  auto t0 = std::chrono::steady_clock::now();
  const RankHistogram serial = rank_histogram_serial(k, 0, total);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const RankHistogram fast = detail::rank_histogram_fast_range(k, 0, total);
  const double t_fast = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const RankHistogram omp = rank_histogram(k, 0);
  const double t_omp = seconds_since(t0);

  const bool agree = serial == fast && fast == omp;
  std::printf("  serial reference %.3f s | fast %.3f s | openmp %.3f s | %s\n", t_serial,
              t_fast, t_omp, agree ? "histograms agree" : "HISTOGRAM MISMATCH");
  std::printf("  count = %s\n", assemble_count(k, omp).str().c_str());
}

void bench_group() {
  const FiniteMatrixGroup G = enumerate_group(5, 2, MatrixGroupKind::special_linear);
  std::printf("group: sl2(F5), order %u\n", G.size());
  for (int w : {1, 0}) {
    const auto t0 = std::chrono::steady_clock::now();
    const ClassFunctionTable c = commutator_distribution(G, w);
    const ClassFunctionTable c2 = convolve_power(c, 2, G, w);
    std::printf("  workers=%s: %.3f s, identity fiber %s\n", w == 1 ? "1" : "auto",
                seconds_since(t0), c2[G.identity].str().c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  const bool heavy = argc > 1 && std::string(argv[1]) == "--heavy";
  bench_kernel("moment count", 2, 0);
  bench_kernel("jet count", 2, 1);
  bench_kernel("moment count", 3, 0);
  if (heavy) bench_kernel("jet count", 2, 2);  // 2^24 tuples
  bench_group();
  return 0;
}
