#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmm/count_kernel.hpp"
#include "qmm/quiver.hpp"

namespace qmm {

struct CountOptions {
  BigInt budget = BigInt(1) << 26;  // cap on enumerated forward tuples
  int workers = 0;                  // 0: resolve from environment
};

struct CountResult {
  uint32_t prime = 2;
  Quiver quiver;
  DimVector dims;
  int jet_order = 0;
  bool over_fixed = false;
  BigInt count;
  // (alpha.alpha - 1 + 2 p(alpha)) * (m+1); the exponent a count of an
  // irreducible complete intersection of that dimension would track.
  // Meaningful for plain counts only.
  int64_t expected_exponent = 0;

  double ratio() const;        // count / p^expected_exponent
  bool exact_power() const;    // count == p^expected_exponent
  std::string key() const;     // stable baseline key
};

// Exact number of solutions of the moment equations over F_p, by forward
// enumeration and rank counting. Throws budget_error when the enumeration
// would exceed opts.budget tuples.
CountResult count_moment_points(const Quiver& q, const DimVector& dims, uint32_t p,
                                const CountOptions& opts = {});

// Exact |X_m(F_p)|; m = 0 agrees with count_moment_points.
CountResult count_jet_points(const Quiver& q, const DimVector& dims, uint32_t p, int m,
                             const CountOptions& opts = {});

// Exact number of m-jets whose base point lies in the fixed locus (scalar
// loop matrices, zero elsewhere). m >= 1.
CountResult count_jets_over_fixed(const Quiver& q, const DimVector& dims, uint32_t p, int m,
                                  const CountOptions& opts = {});

struct DimensionRow {
  uint32_t prime = 2;
  std::string count;  // decimal
  int64_t expected_exponent = 0;
  double log_p_count = 0.0;  // log base p of the count
  double ratio = 0.0;
  bool exact = false;
  bool in_band = false;
};

struct DimensionReport {
  std::vector<DimensionRow> rows;  // sorted by prime
  double band_lo = 0.5;
  double band_hi = 2.0;
  bool all_in_band = false;
};

// Ratio diagnostics over several primes for one parameter set. At least two
// results with identical (quiver, dims, jet order) are required. This is a
// heuristic indicator, never a dimension proof.
DimensionReport estimate_dimension(const std::vector<CountResult>& counts, double band_lo = 0.5,
                                   double band_hi = 2.0);

struct MustataRow {
  int m = 0;
  bool computed = false;
  std::string count;  // decimal, when computed
  int64_t expected_exponent = 0;
  double ratio = 0.0;
  bool exact = false;
};

struct FixedProductRow {
  int m = 0;
  bool computed = false;
  std::string jets_over_fixed;  // decimal
  std::string product_form;     // decimal
  bool exact = false;
};

struct MustataReport {
  int g = 0, n = 0;
  uint32_t prime = 2;
  int m_max = 0;
  std::vector<MustataRow> rows;
  std::vector<FixedProductRow> fixed_rows;
  bool truncated = false;  // some order skipped for budget
};

// Count-level shadow of the jet-dimension criterion for the one-vertex
// g-loop quiver: ratios count/p^(d(m+1)) for m = 0..m_max plus the exact
// fixed-locus product identities. Orders above budget are marked truncated.
MustataReport mustata_ratio_report(int g, int n, uint32_t p, int m_max,
                                   const CountOptions& opts = {});

struct FixedProductCheck {
  int m = 0;
  BigInt jets_over_fixed;
  BigInt product_form;
  bool exact = false;
};

// count_jets_over_fixed(m) versus p^(2*loops) * |X_{m-2}| * p^(2*dim Rep
// of the double)/..., with the degenerate m = 1 form.
FixedProductCheck check_fixed_jet_product(const Quiver& q, const DimVector& dims, uint32_t p,
                                          int m, const CountOptions& opts = {});

}  // namespace qmm
