#include <omp.h>

#include <algorithm>

#include "qmm/count_kernel.hpp"
#include "qmm/parallel.hpp"

namespace qmm {

RankHistogram rank_histogram(const BilinearKernel& k, int workers) {
  const BigInt total_big = k.forward_tuple_count();
  const uint64_t total = total_big.convert_to<uint64_t>();
  const int w = std::max(1, resolve_workers(workers));

  const size_t hist_len = size_t(std::min(k.rows, k.rev_vars)) + 1;
  RankHistogram hist(hist_len, 0);

// contiguous index ranges; per-range histograms add exactly, so the merge
// is independent of worker count and chunk boundaries
#pragma omp parallel num_threads(w)
  {
    const int tid = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    const uint64_t lo = total / nt * tid + std::min<uint64_t>(tid, total % nt);
    const uint64_t hi = lo + total / nt + (uint64_t(tid) < total % nt ? 1 : 0);
    RankHistogram local = detail::rank_histogram_fast_range(k, lo, hi);
#pragma omp critical
    for (size_t i = 0; i < hist_len; ++i) hist[i] += local[i];
  }
  return hist;
}

}  // namespace qmm
