#include "qmm/group_counter.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "qmm/errors.hpp"
#include "qmm/modp.hpp"
#include "qmm/parallel.hpp"

namespace qmm {

namespace {

std::vector<uint8_t> mat_mul(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b, int n,
                             uint32_t p) {
  std::vector<uint8_t> out(size_t(n) * n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      uint32_t s = 0;
      for (int k = 0; k < n; ++k) s += uint32_t(a[r * n + k]) * b[k * n + c];
      out[r * n + c] = static_cast<uint8_t>(s % p);
    }
  return out;
}

uint32_t det_mod_p(std::vector<uint8_t> m, int n, const PrimeField& f) {
  uint32_t det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r * n + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
      det = f.negate(det);
    }
    det = f.multiply(det, m[col * n + col]);
    const uint32_t pinv = f.inv[m[col * n + col]];
    for (int r = col + 1; r < n; ++r) {
      const uint32_t v = m[r * n + col];
      if (v == 0) continue;
      const uint32_t factor = f.multiply(v, pinv);
      for (int c = col; c < n; ++c)
        m[r * n + c] = static_cast<uint8_t>(f.sub(m[r * n + c], f.multiply(factor, m[col * n + c])));
    }
  }
  return det;
}

}  // namespace

uint64_t FiniteMatrixGroup::code(const std::vector<uint8_t>& m) const {
  uint64_t c = 0;
  for (size_t i = m.size(); i-- > 0;) c = c * prime + m[i];
  return c;
}

uint32_t FiniteMatrixGroup::multiply(uint32_t a, uint32_t b) const {
  return index_of.at(code(mat_mul(elements[a], elements[b], n, prime)));
}

BigInt group_order_formula(uint32_t p, int n, MatrixGroupKind kind) {
  BigInt order = 1;
  const BigInt pn = big_pow(p, uint64_t(n));
  for (int k = 0; k < n; ++k) order *= pn - big_pow(p, uint64_t(k));
  if (kind == MatrixGroupKind::special_linear) order /= p - 1;
  return order;
}

FiniteMatrixGroup enumerate_group(uint32_t p, int n, MatrixGroupKind kind, uint64_t cap) {
  if (n < 1) throw std::domain_error("matrix size must be positive");
  const BigInt order = group_order_formula(p, n, kind);
  if (order > cap)
    throw budget_error("group order " + order.str() + " exceeds cap " + std::to_string(cap));
  const PrimeField f = make_prime_field(p);

  FiniteMatrixGroup G;
  G.prime = p;
  G.n = n;
  G.kind = kind;

  // all n x n matrices with the right determinant
  const uint64_t total = big_pow(p, uint64_t(n) * n).convert_to<uint64_t>();
  std::vector<uint8_t> m(size_t(n) * n, 0);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t t = idx;
    for (size_t i = 0; i < m.size(); ++i) {
      m[i] = static_cast<uint8_t>(t % p);
      t /= p;
    }
    const uint32_t d = det_mod_p(m, n, f);
    const bool keep = kind == MatrixGroupKind::general_linear ? d != 0 : d == 1;
    if (keep) {
      G.index_of.emplace(G.code(m), G.size());
      G.elements.push_back(m);
    }
  }
  if (BigInt(G.size()) != order)
    throw std::logic_error("group enumeration does not match the order formula");

  {
    std::vector<uint8_t> id(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;
    G.identity = G.index_of.at(G.code(id));
  }

  G.inverse.assign(G.size(), 0);
  for (uint32_t a = 0; a < G.size(); ++a)
    for (uint32_t b = 0; b < G.size(); ++b)
      if (G.multiply(a, b) == G.identity) {
        G.inverse[a] = b;
        break;
      }

  // conjugacy classes by orbit closure under conjugation
  G.class_of.assign(G.size(), UINT32_MAX);
  for (uint32_t e = 0; e < G.size(); ++e) {
    if (G.class_of[e] != UINT32_MAX) continue;
    const uint32_t id = static_cast<uint32_t>(G.classes.size());
    std::vector<uint32_t> members;
    std::vector<uint32_t> frontier{e};
    G.class_of[e] = id;
    while (!frontier.empty()) {
      const uint32_t x = frontier.back();
      frontier.pop_back();
      members.push_back(x);
      for (uint32_t g = 0; g < G.size(); ++g) {
        const uint32_t y = G.multiply(G.multiply(g, x), G.inverse[g]);
        if (G.class_of[y] == UINT32_MAX) {
          G.class_of[y] = id;
          frontier.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    G.classes.push_back(std::move(members));
  }
  return G;
}

ClassFunctionTable commutator_distribution(const FiniteMatrixGroup& G, int workers) {
  const uint32_t size = G.size();
  const int w = resolve_workers(workers);
  std::vector<uint64_t> counts(size, 0);

#pragma omp parallel num_threads(w)
  {
    std::vector<uint64_t> local(size, 0);
#pragma omp for schedule(static)
    for (uint32_t x = 0; x < size; ++x) {
      const uint32_t xinv = G.inverse[x];
      for (uint32_t y = 0; y < size; ++y) {
        const uint32_t z = G.multiply(G.multiply(G.multiply(x, y), xinv), G.inverse[y]);
        ++local[z];
      }
    }
#pragma omp critical
    for (uint32_t i = 0; i < size; ++i) counts[i] += local[i];
  }

  ClassFunctionTable table(size);
  for (uint32_t i = 0; i < size; ++i) table[i] = counts[i];
  return table;
}

ClassFunctionTable convolve_power(const ClassFunctionTable& c, int g,
                                  const FiniteMatrixGroup& G, int workers) {
  if (g < 1) throw std::domain_error("convolution power must be >= 1");
  if (c.size() != G.size()) throw std::invalid_argument("table does not cover the group");
  const uint32_t size = G.size();
  const int w = resolve_workers(workers);

  ClassFunctionTable current = c;
  for (int step = 2; step <= g; ++step) {
    ClassFunctionTable next(size);
#pragma omp parallel for schedule(static) num_threads(w)
    for (uint32_t z = 0; z < size; ++z) {
      BigInt acc = 0;
      for (uint32_t u = 0; u < size; ++u) acc += current[u] * c[G.multiply(G.inverse[u], z)];
      next[z] = std::move(acc);
    }
    current = std::move(next);
  }
  return current;
}

FiberReport fiber_report(const FiniteMatrixGroup& G, int g, int workers) {
  FiberReport rep;
  rep.p = G.prime;
  rep.n = G.n;
  rep.kind = G.kind;
  rep.g = g;
  rep.order = G.size();
  rep.class_count = static_cast<uint32_t>(G.classes.size());

  const ClassFunctionTable c = commutator_distribution(G, workers);
  const ClassFunctionTable cg = convolve_power(c, g, G, workers);

  BigInt total = 0;
  for (const BigInt& v : cg) total += v;
  rep.total = total.str();
  rep.mass_ok = total == big_pow(G.size(), 2 * uint64_t(g));
  rep.identity_fiber = cg[G.identity].str();

  const double uniform = big_pow(G.size(), 2 * uint64_t(g) - 1).convert_to<double>();
  bool first = true;
  for (uint32_t id = 0; id < G.classes.size(); ++id) {
    FiberClassRow row;
    row.class_id = id;
    row.representative = G.classes[id].front();
    row.class_size = static_cast<uint32_t>(G.classes[id].size());
    row.count = cg[row.representative].str();
    row.ratio = cg[row.representative].convert_to<double>() / uniform;
    if (first || row.ratio < rep.min_ratio) rep.min_ratio = row.ratio;
    if (first || row.ratio > rep.max_ratio) rep.max_ratio = row.ratio;
    first = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string render_class_function(const ClassFunctionTable& t) {
  std::string out;
  for (size_t i = 0; i < t.size(); ++i) {
    out += std::to_string(i);
    out += ' ';
    out += t[i].str();
    out += '\n';
  }
  return out;
}

}  // namespace qmm
