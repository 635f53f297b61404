#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "qmm/count_kernel.hpp"
#include "qmm/polysys.hpp"

namespace qmm {

// Fully enumerated GL_n or SL_n over F_p with index tables; products are
// computed on the fly and resolved through the index map.
struct FiniteMatrixGroup {
  uint32_t prime = 2;
  int n = 1;
  MatrixGroupKind kind = MatrixGroupKind::general_linear;
  std::vector<std::vector<uint8_t>> elements;  // row-major n*n entries
  std::unordered_map<uint64_t, uint32_t> index_of;
  std::vector<uint32_t> inverse;
  std::vector<uint32_t> class_of;                // conjugacy class id per element
  std::vector<std::vector<uint32_t>> classes;    // members, ascending
  uint32_t identity = 0;

  uint32_t size() const { return static_cast<uint32_t>(elements.size()); }
  uint64_t code(const std::vector<uint8_t>& m) const;
  uint32_t multiply(uint32_t a, uint32_t b) const;
};

// |GL_n(F_p)| = prod_k (p^n - p^k); |SL_n| = |GL_n| / (p-1).
BigInt group_order_formula(uint32_t p, int n, MatrixGroupKind kind);

// Enumerates the group, inverse table and conjugacy classes. Throws
// budget_error when the order formula exceeds the cap, before any
// enumeration work.
FiniteMatrixGroup enumerate_group(uint32_t p, int n, MatrixGroupKind kind, uint64_t cap = 2000);

// Count per element, constant on conjugacy classes for everything produced
// here.
using ClassFunctionTable = std::vector<BigInt>;

// c(z) = #{(x,y) : x y x^-1 y^-1 = z}, by full pair enumeration.
ClassFunctionTable commutator_distribution(const FiniteMatrixGroup& G, int workers = 0);

// g-fold convolution: entry at z counts tuples (x_1,y_1,...,x_g,y_g) whose
// commutator product is z.
ClassFunctionTable convolve_power(const ClassFunctionTable& c, int g, const FiniteMatrixGroup& G,
                                  int workers = 0);

struct FiberClassRow {
  uint32_t class_id = 0;
  uint32_t representative = 0;  // element index
  uint32_t class_size = 0;
  std::string count;  // decimal fiber count at the representative
  double ratio = 0.0;  // count * |G| / |G|^(2g)
};

struct FiberReport {
  uint32_t p = 2;
  int n = 1;
  MatrixGroupKind kind = MatrixGroupKind::general_linear;
  int g = 1;
  uint32_t order = 0;
  uint32_t class_count = 0;
  std::vector<FiberClassRow> rows;  // by class id
  std::string total;                // decimal, must equal |G|^(2g)
  bool mass_ok = false;
  std::string identity_fiber;       // decimal
  double min_ratio = 0.0, max_ratio = 0.0;
};

// Per-class fiber counts of the commutator-product map, with the spread of
// the ratios against the uniform value. Reported as data, not pass/fail.
FiberReport fiber_report(const FiniteMatrixGroup& G, int g, int workers = 0);

// "index count" lines.
std::string render_class_function(const ClassFunctionTable& t);

}  // namespace qmm
