#include "qmm/strata_bounds.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qmm/errors.hpp"
#include "qmm/parallel.hpp"

namespace qmm {

namespace {

void top_types_rec(const DimVector& remaining, std::vector<TopStep>& stack,
                   std::vector<TopType>& out) {
  if (std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; })) {
    out.push_back(TopType{stack});
    return;
  }
  for (int j = 0; j < static_cast<int>(remaining.size()); ++j) {
    if (remaining[j] == 0) continue;
    for (int m = 1; m <= remaining[j]; ++m) {
      DimVector next = remaining;
      next[j] -= m;
      stack.push_back(TopStep{j, m});
      top_types_rec(next, stack, out);
      stack.pop_back();
    }
  }
}

}  // namespace

std::vector<TopType> enumerate_top_types(const DimVector& e, int budget_sum) {
  if (e.empty()) throw std::domain_error("empty dimension vector");
  int total = 0;
  for (int v : e) {
    if (v < 1) throw std::domain_error("top types need positive entries");
    total += v;
  }
  if (total > budget_sum)
    throw budget_error("top-type enumeration over sum " + std::to_string(total) +
                       " exceeds budget " + std::to_string(budget_sum));
  std::vector<TopType> out;
  std::vector<TopStep> stack;
  top_types_rec(e, stack, out);
  return out;
}

std::vector<int64_t> z_sequence(const TopType& t, const std::vector<int64_t>& loop_p) {
  std::vector<int64_t> z(t.steps.size(), 0);
  for (size_t s = 0; s < t.steps.size(); ++s) {
    const int j = t.steps[s].vertex;
    if (j < 0 || j >= static_cast<int>(loop_p.size()))
      throw std::invalid_argument("top-type vertex out of range");
    if (loop_p[j] == 0) continue;
    for (size_t k = s; k-- > 0;) {
      if (t.steps[k].vertex == j) {
        z[s] = t.steps[k].mult;
        break;
      }
    }
  }
  return z;
}

std::vector<int64_t> loop_p_values(const LocalQuiverData& lq) {
  std::vector<int64_t> loop_p(lq.quiver.vertex_count, 0);
  for (int i = 0; i < lq.quiver.vertex_count; ++i) {
    DimVector eps(lq.quiver.vertex_count, 0);
    eps[i] = 1;
    loop_p[i] = p_value(lq.quiver, eps);
  }
  return loop_p;
}

int64_t cb_dimension_bound(const TopType& t, const LocalQuiverData& lq) {
  DimVector sums(lq.dims.size(), 0);
  for (const TopStep& s : t.steps) {
    if (s.vertex < 0 || s.vertex >= static_cast<int>(sums.size()))
      throw std::invalid_argument("top-type vertex out of range");
    sums[s.vertex] += s.mult;
  }
  if (sums != lq.dims)
    throw std::invalid_argument("top type does not match the local dimension vector");

  const std::vector<int64_t> loop_p = loop_p_values(lq);
  const std::vector<int64_t> z = z_sequence(t, loop_p);
  int64_t bound = dot(lq.dims, lq.dims) - 1 + p_value(lq.quiver, lq.dims);
  for (size_t s = 0; s < t.steps.size(); ++s) {
    const int64_t m = t.steps[s].mult;
    bound += m * z[s];
    bound -= m * m * loop_p[t.steps[s].vertex];
  }
  return bound;
}

namespace {

void validate_tau(int g, int n, const RepType& tau) {
  if (g < 2) throw std::domain_error("requires g >= 2");
  if (n < 1) throw std::domain_error("requires n >= 1");
  if (tau.weighted_dim_sum() != DimVector{n})
    throw std::invalid_argument("type does not sum to n");
}

}  // namespace

int64_t nilpotent_target(int g, int n, const RepType& tau) {
  validate_tau(g, n, tau);
  int64_t beta_sq = 0;
  for (const RepPair& p : tau.pairs) beta_sq += int64_t(p.dim[0]) * p.dim[0];
  return 2 * int64_t(g - 1) * (int64_t(n) * n - beta_sq);
}

int64_t nilpotent_target_p_form(int g, int n, const RepType& tau) {
  validate_tau(g, n, tau);
  const Quiver q = loop_quiver(g);
  int64_t sum_p = 0;
  for (const RepPair& p : tau.pairs) sum_p += p_value(q, p.dim);
  return 2 * p_value(q, DimVector{n}) - 2 * sum_p;
}

BoundReport check_prop_nil(int g, int n, const RepType& tau, int top_budget) {
  validate_tau(g, n, tau);
  if (tau.is_full_simple())
    throw excluded_type_error("the simple type (1,n) is excluded from the fiber bound");

  BoundReport report;
  report.tau = tau;
  const LocalQuiverData lq = local_quiver(loop_quiver(g), tau);
  const std::vector<TopType> tops = enumerate_top_types(lq.dims, top_budget);
  report.per_top_type.reserve(tops.size());
  bool first = true;
  for (const TopType& t : tops) {
    const int64_t b = cb_dimension_bound(t, lq);
    report.per_top_type.emplace_back(t, b);
    if (first || b > report.max_bound) report.max_bound = b;
    first = false;
  }
  report.target = nilpotent_target(g, n, tau);
  report.pass = report.max_bound < report.target;
  return report;
}

EqClassResult check_eqclass(const LocalQuiverData& lq, int64_t fiber_dim_bound) {
  EqClassResult r;
  const int64_t loops = lq.quiver.loop_count();
  const int64_t p = p_value(lq.quiver, lq.dims);
  r.fiber_cap = 2 * (p - loops);
  r.holds = fiber_dim_bound < r.fiber_cap;
  r.z_dim_bound = 2 * loops + fiber_dim_bound;
  r.two_p = 2 * p;
  return r;
}

FinalInequality check_final_inequality(const std::vector<int64_t>& A,
                                       const std::vector<int64_t>& betas) {
  if (A.empty() || A.size() != betas.size())
    throw std::invalid_argument("final inequality needs equal-length nonempty inputs");
  FinalInequality f;
  int64_t cross = 0;
  for (size_t i = 0; i < A.size(); ++i) {
    f.lhs += A[i] * A[i] + betas[i] * betas[i];
    cross += betas[i] * A[i];
  }
  f.rhs = cross * cross;
  f.strict = f.lhs < f.rhs;
  return f;
}

GridResult check_prop_nil_grid(const std::vector<int>& gs, int n_max, int top_budget,
                               int workers) {
  struct Job {
    int g, n;
    RepType tau;
  };
  std::vector<Job> jobs;
  for (int g : gs)
    for (int n = 2; n <= n_max; ++n)
      for (RepType& tau : enumerate_rep_types(g, n))
        if (!tau.is_full_simple()) jobs.push_back(Job{g, n, std::move(tau)});

  GridResult result;
  result.reports.resize(jobs.size());
  const int w = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic) num_threads(w)
  for (size_t i = 0; i < jobs.size(); ++i)
    result.reports[i] = check_prop_nil(jobs[i].g, jobs[i].n, jobs[i].tau, top_budget);

  result.checked = static_cast<int>(jobs.size());
  result.all_pass = std::all_of(result.reports.begin(), result.reports.end(),
                                [](const BoundReport& r) { return r.pass; });
  return result;
}

}  // namespace qmm
