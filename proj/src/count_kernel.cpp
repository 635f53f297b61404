#include "qmm/count_kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmm {

BigInt big_pow(uint32_t base, uint64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

BigInt BilinearKernel::forward_tuple_count() const { return big_pow(prime, fwd_vars); }

namespace {

BilinearKernel compile_impl(const PolySystem& ps, bool drop_order_zero) {
  BilinearKernel k;
  // forward/reverse classification and the occurring-variable maps
  std::vector<int32_t> fwd_map(ps.variables.size(), -1);
  std::vector<int32_t> rev_map(ps.variables.size(), -1);

  struct RawTerm {
    uint32_t row, f, r;
    int8_t sign;
  };
  std::vector<RawTerm> raw;
  uint32_t row = 0;
  for (const Poly& eq : ps.equations) {
    for (const Term& t : eq) {
      if (t.vars.size() != 2)
        throw std::invalid_argument("system is not bilinear: monomial degree != 2");
      const VarId& a = ps.variables.at(t.vars[0]);
      const VarId& b = ps.variables.at(t.vars[1]);
      if (drop_order_zero && (a.jet == 0 || b.jet == 0)) continue;
      if (a.dir == b.dir)
        throw std::invalid_argument("system is not bilinear: need one forward, one reverse");
      if (t.coef != 1 && t.coef != -1)
        throw std::invalid_argument("system is not bilinear: coefficient not +-1");
      const uint32_t fv = a.dir == VarDir::forward ? t.vars[0] : t.vars[1];
      const uint32_t rv = a.dir == VarDir::forward ? t.vars[1] : t.vars[0];
      raw.push_back(RawTerm{row, fv, rv, static_cast<int8_t>(t.coef)});
    }
    ++row;
  }
  k.rows = row;

  for (const RawTerm& t : raw) {
    if (fwd_map[t.f] < 0) fwd_map[t.f] = static_cast<int32_t>(k.fwd_vars++);
    if (rev_map[t.r] < 0) rev_map[t.r] = static_cast<int32_t>(k.rev_vars++);
  }
  k.terms.reserve(raw.size());
  for (const RawTerm& t : raw)
    k.terms.push_back(BilinearTerm{t.row, static_cast<uint32_t>(fwd_map[t.f]),
                                   static_cast<uint32_t>(rev_map[t.r]), t.sign});

  // declared but unused variables are free directions
  for (size_t i = 0; i < ps.variables.size(); ++i) {
    if (drop_order_zero && ps.variables[i].jet == 0) continue;
    if (ps.variables[i].dir == VarDir::forward) {
      if (fwd_map[i] < 0) ++k.free_fwd;
    } else {
      if (rev_map[i] < 0) ++k.free_rev;
    }
  }
  return k;
}

}  // namespace

BilinearKernel compile_bilinear(const PolySystem& ps, uint32_t prime) {
  BilinearKernel k = compile_impl(ps, false);
  k.prime = prime;
  return k;
}

BilinearKernel compile_bilinear_over_fixed(const PolySystem& jet_ps, uint32_t prime) {
  BilinearKernel k = compile_impl(jet_ps, true);
  k.prime = prime;
  return k;
}

RankHistogram rank_histogram_serial(const BilinearKernel& k, uint64_t begin, uint64_t end) {
  const PrimeField f = make_prime_field(k.prime);
  const uint32_t p = k.prime;
  RankHistogram hist(std::min(k.rows, k.rev_vars) + 1, 0);
  std::vector<uint32_t> fwd(k.fwd_vars, 0);
  std::vector<uint32_t> matrix;

  for (uint64_t idx = begin; idx < end; ++idx) {
    uint64_t t = idx;
    for (uint32_t i = 0; i < k.fwd_vars; ++i) {
      fwd[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
    matrix.assign(size_t(k.rows) * k.rev_vars, 0);
    for (const BilinearTerm& term : k.terms) {
      const uint32_t v = term.sign > 0 ? fwd[term.fwd] : f.negate(fwd[term.fwd]);
      uint32_t& cell = matrix[size_t(term.row) * k.rev_vars + term.rev];
      cell = f.add(cell, v);
    }
    const int rank = k.rev_vars == 0
                         ? 0
                         : rank_dense_modp(matrix.data(), int(k.rows), int(k.rev_vars), f);
    ++hist[size_t(rank)];
  }
  return hist;
}

namespace detail {

namespace {

RankHistogram gf2_range(const BilinearKernel& k, uint64_t begin, uint64_t end) {
  RankHistogram hist(std::min(k.rows, k.rev_vars) + 1, 0);
  std::vector<uint64_t> rows(k.rows, 0);
  std::vector<uint64_t> work(k.rows, 0);
  for (uint64_t idx = begin; idx < end; ++idx) {
    std::fill(rows.begin(), rows.end(), 0);
    for (const BilinearTerm& term : k.terms)
      if ((idx >> term.fwd) & 1) rows[term.row] ^= uint64_t(1) << term.rev;
    work = rows;
    ++hist[size_t(rank_gf2(work.data(), int(k.rows)))];
  }
  return hist;
}

RankHistogram modp_range(const BilinearKernel& k, uint64_t begin, uint64_t end) {
  const PrimeField f = make_prime_field(k.prime);
  const uint32_t p = k.prime;
  RankHistogram hist(std::min(k.rows, k.rev_vars) + 1, 0);
  std::vector<uint32_t> fwd(k.fwd_vars, 0);
  std::vector<uint32_t> base(size_t(k.rows) * k.rev_vars, 0);
  std::vector<uint32_t> work(base.size(), 0);

  // decode the first index, then run the digits as an odometer
  {
    uint64_t t = begin;
    for (uint32_t i = 0; i < k.fwd_vars; ++i) {
      fwd[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
  }
  auto rebuild = [&]() {
    std::fill(base.begin(), base.end(), 0);
    for (const BilinearTerm& term : k.terms) {
      const uint32_t v = term.sign > 0 ? fwd[term.fwd] : f.negate(fwd[term.fwd]);
      uint32_t& cell = base[size_t(term.row) * k.rev_vars + term.rev];
      cell = f.add(cell, v);
    }
  };
  rebuild();

  for (uint64_t idx = begin; idx < end; ++idx) {
    if (idx != begin) {
      // advance digit 0 with carry; rebuilding the matrix outright is
      // cheaper than patching it term by term only on full carries
      uint32_t i = 0;
      while (i < k.fwd_vars) {
        if (++fwd[i] < p) break;
        fwd[i] = 0;
        ++i;
      }
      rebuild();
    }
    work = base;
    const int rank = k.rev_vars == 0
                         ? 0
                         : rank_dense_modp(work.data(), int(k.rows), int(k.rev_vars), f);
    ++hist[size_t(rank)];
  }
  return hist;
}

}  // namespace

RankHistogram rank_histogram_fast_range(const BilinearKernel& k, uint64_t begin, uint64_t end) {
  if (k.prime == 2 && k.fwd_vars <= 63 && k.rev_vars <= 64) return gf2_range(k, begin, end);
  return modp_range(k, begin, end);
}

}  // namespace detail

BigInt assemble_count(const BilinearKernel& k, const RankHistogram& h) {
  BigInt total = 0;
  for (size_t r = 0; r < h.size(); ++r)
    if (h[r]) total += BigInt(h[r]) * big_pow(k.prime, k.rev_vars - r);
  total *= big_pow(k.prime, k.free_fwd + k.free_rev);
  return total;
}

}  // namespace qmm
