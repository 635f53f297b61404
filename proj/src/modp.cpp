#include "qmm/modp.hpp"

#include <stdexcept>

namespace qmm {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField make_prime_field(uint32_t p) {
  if (!is_prime_u32(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (p > (1u << 16)) throw std::invalid_argument("prime too large: " + std::to_string(p));
  PrimeField f;
  f.p = p;
  f.inv.assign(p, 0);
  f.mul.assign(uint64_t(p) * p, 0);
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b) f.mul[a * p + b] = uint32_t(uint64_t(a) * b % p);
  for (uint32_t a = 1; a < p; ++a)
    for (uint32_t b = 1; b < p; ++b)
      if (f.mul[a * p + b] == 1) {
        f.inv[a] = b;
        break;
      }
  return f;
}

int rank_dense_modp(uint32_t* m, int rows, int cols, const PrimeField& f) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < cols; ++c) std::swap(m[pivot * cols + c], m[rank * cols + c]);
    const uint32_t pinv = f.inv[m[rank * cols + col]];
    for (int r = rank + 1; r < rows; ++r) {
      const uint32_t v = m[r * cols + col];
      if (v == 0) continue;
      const uint32_t factor = f.multiply(v, pinv);
      for (int c = col; c < cols; ++c)
        m[r * cols + c] = f.sub(m[r * cols + c], f.multiply(factor, m[rank * cols + c]));
    }
    ++rank;
  }
  return rank;
}

int rank_gf2(uint64_t* rows, int nrows) {
  int rank = 0;
  for (int bit = 0; bit < 64 && rank < nrows; ++bit) {
    const uint64_t mask = uint64_t(1) << bit;
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[r] & mask) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    for (int r = rank + 1; r < nrows; ++r)
      if (rows[r] & mask) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace qmm
