#include "qmm/fq_counter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmm/errors.hpp"

namespace qmm {

namespace {

int64_t expected_dim(const Quiver& q, const DimVector& dims) {
  return dot(dims, dims) - 1 + 2 * p_value(q, dims);
}

void check_budget(const BilinearKernel& k, const CountOptions& opts) {
  const BigInt cost = k.forward_tuple_count();
  if (cost > opts.budget)
    throw budget_error("forward enumeration needs " + cost.str() + " tuples, budget is " +
                       opts.budget.str());
}

std::string quiver_signature(const Quiver& q) {
  std::string s = std::to_string(q.vertex_count) + ":";
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(q.arrows[i].tail) + ">" + std::to_string(q.arrows[i].head);
  }
  return s;
}

}  // namespace

double CountResult::ratio() const {
  const BigInt den = big_pow(prime, uint64_t(expected_exponent < 0 ? 0 : expected_exponent));
  return count.convert_to<double>() / den.convert_to<double>();
}

bool CountResult::exact_power() const {
  if (expected_exponent < 0) return false;
  return count == big_pow(prime, uint64_t(expected_exponent));
}

std::string CountResult::key() const {
  return "p" + std::to_string(prime) + ".m" + std::to_string(jet_order) +
         (over_fixed ? "f" : "") + ".q" + quiver_signature(quiver) + ".d" +
         format_dim_vector(dims);
}

CountResult count_jet_points(const Quiver& q, const DimVector& dims, uint32_t p, int m,
                             const CountOptions& opts) {
  if (m < 0) throw std::domain_error("negative jet order");
  BilinearKernel k = compile_bilinear(jet_system(q, dims, m), p);
  check_budget(k, opts);
  CountResult r;
  r.prime = p;
  r.quiver = q;
  r.dims = dims;
  r.jet_order = m;
  r.count = assemble_count(k, rank_histogram(k, opts.workers));
  r.expected_exponent = expected_dim(q, dims) * (m + 1);
  return r;
}

CountResult count_moment_points(const Quiver& q, const DimVector& dims, uint32_t p,
                                const CountOptions& opts) {
  return count_jet_points(q, dims, p, 0, opts);
}

CountResult count_jets_over_fixed(const Quiver& q, const DimVector& dims, uint32_t p, int m,
                                  const CountOptions& opts) {
  if (m < 1) throw std::domain_error("jets over the fixed locus need m >= 1");
  BilinearKernel k = compile_bilinear_over_fixed(jet_system(q, dims, m), p);
  check_budget(k, opts);
  CountResult r;
  r.prime = p;
  r.quiver = q;
  r.dims = dims;
  r.jet_order = m;
  r.over_fixed = true;
  r.count = assemble_count(k, rank_histogram(k, opts.workers));
  r.count *= big_pow(p, 2 * uint64_t(q.loop_count()));  // fixed-locus cardinality
  r.expected_exponent = expected_dim(q, dims) * (m + 1);
  return r;
}

DimensionReport estimate_dimension(const std::vector<CountResult>& counts, double band_lo,
                                   double band_hi) {
  if (counts.size() < 2)
    throw std::invalid_argument("dimension estimate needs at least two primes");
  for (const CountResult& c : counts) {
    if (c.quiver != counts.front().quiver || c.dims != counts.front().dims ||
        c.jet_order != counts.front().jet_order || c.over_fixed || counts.front().over_fixed)
      throw std::invalid_argument("inconsistent parameters in dimension estimate");
  }
  std::vector<const CountResult*> sorted;
  for (const CountResult& c : counts) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(),
            [](const CountResult* a, const CountResult* b) { return a->prime < b->prime; });
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i]->prime == sorted[i - 1]->prime)
      throw std::invalid_argument("duplicate prime in dimension estimate");

  DimensionReport rep;
  rep.band_lo = band_lo;
  rep.band_hi = band_hi;
  rep.all_in_band = true;
  for (const CountResult* c : sorted) {
    DimensionRow row;
    row.prime = c->prime;
    row.count = c->count.str();
    row.expected_exponent = c->expected_exponent;
    row.log_p_count = std::log(c->count.convert_to<double>()) / std::log(double(c->prime));
    row.ratio = c->ratio();
    row.exact = c->exact_power();
    row.in_band = row.ratio >= band_lo && row.ratio <= band_hi;
    rep.all_in_band = rep.all_in_band && row.in_band;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

FixedProductCheck check_fixed_jet_product(const Quiver& q, const DimVector& dims, uint32_t p,
                                          int m, const CountOptions& opts) {
  FixedProductCheck c;
  c.m = m;
  c.jets_over_fixed = count_jets_over_fixed(q, dims, p, m, opts).count;
  const uint64_t loops2 = 2 * uint64_t(q.loop_count());
  const uint64_t rep2 = 2 * uint64_t(rep_space_dim(q, dims));
  c.product_form = big_pow(p, loops2 + rep2);
  if (m >= 2) c.product_form *= count_jet_points(q, dims, p, m - 2, opts).count;
  c.exact = c.jets_over_fixed == c.product_form;
  return c;
}

MustataReport mustata_ratio_report(int g, int n, uint32_t p, int m_max,
                                   const CountOptions& opts) {
  if (g < 1 || n < 1 || m_max < 0) throw std::domain_error("bad ratio report parameters");
  const Quiver q = loop_quiver(g);
  const DimVector dims{n};

  MustataReport rep;
  rep.g = g;
  rep.n = n;
  rep.prime = p;
  rep.m_max = m_max;

  std::vector<CountResult> computed(size_t(m_max) + 1);
  std::vector<bool> have(size_t(m_max) + 1, false);
  for (int m = 0; m <= m_max; ++m) {
    MustataRow row;
    row.m = m;
    try {
      computed[size_t(m)] = count_jet_points(q, dims, p, m, opts);
      have[size_t(m)] = true;
      row.computed = true;
      row.count = computed[size_t(m)].count.str();
      row.expected_exponent = computed[size_t(m)].expected_exponent;
      row.ratio = computed[size_t(m)].ratio();
      row.exact = computed[size_t(m)].exact_power();
    } catch (const budget_error&) {
      rep.truncated = true;
    }
    rep.rows.push_back(std::move(row));
  }

  for (int m = 1; m <= m_max; ++m) {
    FixedProductRow row;
    row.m = m;
    try {
      const CountResult lhs = count_jets_over_fixed(q, dims, p, m, opts);
      BigInt rhs = big_pow(p, 2 * uint64_t(q.loop_count()) + 2 * uint64_t(rep_space_dim(q, dims)));
      if (m >= 2) {
        if (!have[size_t(m - 2)]) throw budget_error("base jet count unavailable");
        rhs *= computed[size_t(m - 2)].count;
      }
      row.computed = true;
      row.jets_over_fixed = lhs.count.str();
      row.product_form = rhs.str();
      row.exact = lhs.count == rhs;
    } catch (const budget_error&) {
      rep.truncated = true;
    }
    rep.fixed_rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace qmm
