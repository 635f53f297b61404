#pragma once

#include <cstdint>
#include <vector>

namespace qmm {

bool is_prime_u32(uint32_t n);

// Small prime with precomputed inverse and multiplication tables; the
// counting kernels only ever see single-digit primes, so table lookups
// beat hardware division in the inner loops.
struct PrimeField {
  uint32_t p = 2;
  std::vector<uint32_t> inv;  // inv[x] for 1 <= x < p, inv[0] = 0
  std::vector<uint32_t> mul;  // mul[a*p+b] = a*b mod p

  uint32_t multiply(uint32_t a, uint32_t b) const { return mul[a * p + b]; }
  uint32_t add(uint32_t a, uint32_t b) const {
    const uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t negate(uint32_t a) const { return a == 0 ? 0 : p - a; }
};

// Throws std::invalid_argument unless p is a prime (capped at 2^16 so the
// multiplication table stays small).
PrimeField make_prime_field(uint32_t p);

// Row echelon rank of a dense row-major matrix, destructive.
int rank_dense_modp(uint32_t* m, int rows, int cols, const PrimeField& f);

// Rank of a GF(2) matrix given as row bitmasks (cols <= 64), destructive.
int rank_gf2(uint64_t* rows, int nrows);

}  // namespace qmm
