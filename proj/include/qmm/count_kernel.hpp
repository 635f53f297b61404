#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "qmm/modp.hpp"
#include "qmm/polysys.hpp"

namespace qmm {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(uint32_t base, uint64_t exp);

struct BilinearTerm {
  uint32_t row = 0;
  uint32_t fwd = 0;
  uint32_t rev = 0;
  int8_t sign = 0;  // +1 or -1
};

// A strictly bilinear system (every monomial one forward times one reverse
// variable) compiled for fix-forward counting: enumerate assignments of the
// occurring forward variables; for each one the equations are linear in the
// occurring reverse variables, and the solution count is p^(rev - rank).
// Declared variables absent from every equation are free and enter as plain
// powers of p.
struct BilinearKernel {
  uint32_t prime = 2;
  uint32_t fwd_vars = 0;
  uint32_t rev_vars = 0;
  uint32_t rows = 0;
  uint64_t free_fwd = 0;
  uint64_t free_rev = 0;
  std::vector<BilinearTerm> terms;

  BigInt forward_tuple_count() const;  // p^fwd_vars
};

// Throws std::invalid_argument when the system is not bilinear.
BilinearKernel compile_bilinear(const PolySystem& ps, uint32_t prime);

// Restriction of a jet system to jets based in the fixed locus: order-0
// variables are bound to scalars on loops and zero elsewhere, so every
// monomial containing one vanishes and those variables leave the kernel.
// The locus cardinality factor p^(2 * loops) is NOT included here.
BilinearKernel compile_bilinear_over_fixed(const PolySystem& jet_ps, uint32_t prime);

// h[r] = number of forward tuples whose linear system has rank r.
using RankHistogram = std::vector<uint64_t>;

// Straightforward single-threaded implementation, the reference the
// optimized paths are tested against.
RankHistogram rank_histogram_serial(const BilinearKernel& k, uint64_t begin, uint64_t end);

namespace detail {
// Optimized single-range kernel: GF(2) bitmask elimination when p = 2,
// table-driven elimination otherwise.
RankHistogram rank_histogram_fast_range(const BilinearKernel& k, uint64_t begin, uint64_t end);
}  // namespace detail

// OpenMP over contiguous index ranges; the per-range histograms add up, so
// the result does not depend on the worker count or chunking.
RankHistogram rank_histogram(const BilinearKernel& k, int workers = 0);

// p^(free_fwd + free_rev) * sum_r h[r] * p^(rev_vars - r)
BigInt assemble_count(const BilinearKernel& k, const RankHistogram& h);

}  // namespace qmm
