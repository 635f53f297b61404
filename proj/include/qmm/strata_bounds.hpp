#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmm/rep_types.hpp"

namespace qmm {

struct TopStep {
  int vertex = 0;  // 0-based
  int mult = 0;
  friend bool operator==(const TopStep&, const TopStep&) = default;
};

// Filtration signature: successive quotients are mult copies of the trivial
// simple at `vertex`. Per-vertex multiplicity sums must match the local
// dimension vector.
struct TopType {
  std::vector<TopStep> steps;
  friend bool operator==(const TopType&, const TopType&) = default;
};

// All step sequences whose per-vertex sums equal e, lexicographic order.
// The count is exponential in sum(e); inputs above budget_sum are rejected
// with budget_error.
std::vector<TopType> enumerate_top_types(const DimVector& e, int budget_sum = 12);

// loop_p[i] is the p-value of the i-th coordinate vector on the local
// quiver. z_s is 0 when loop_p at the step vertex vanishes or no earlier
// step used the same vertex; otherwise the multiplicity of the latest such
// step.
std::vector<int64_t> z_sequence(const TopType& t, const std::vector<int64_t>& loop_p);

std::vector<int64_t> loop_p_values(const LocalQuiverData& lq);

// e.e - 1 + p(e) + sum m_s z_s - sum m_s^2 loop_p[j_s], evaluated on the
// local quiver.
int64_t cb_dimension_bound(const TopType& t, const LocalQuiverData& lq);

// 2(g-1)(n^2 - sum beta_i^2), the strict upper target for the dimension of
// the nilpotent fiber of the local quiver at a non-simple type.
int64_t nilpotent_target(int g, int n, const RepType& tau);

// 2 p(n) - 2 sum p(beta_i). Agrees with nilpotent_target only at r = 1;
// the general gap is 2(r-1). Kept as a diagnostic.
int64_t nilpotent_target_p_form(int g, int n, const RepType& tau);

struct BoundReport {
  RepType tau;
  std::vector<std::pair<TopType, int64_t>> per_top_type;
  int64_t max_bound = 0;
  int64_t target = 0;
  bool pass = false;  // max_bound < target
};

// Evaluates the bound over every top type of the local dimension vector and
// compares against nilpotent_target. Rejects the full simple type (1,n)
// with excluded_type_error.
BoundReport check_prop_nil(int g, int n, const RepType& tau, int top_budget = 12);

struct EqClassResult {
  bool holds = false;       // fiber_dim_bound < 2 (p - loops)
  int64_t fiber_cap = 0;    // 2 (p - loops)
  int64_t z_dim_bound = 0;  // 2 * loops + fiber_dim_bound
  int64_t two_p = 0;
};

// The fixed-locus criterion: a strict fiber bound below 2(p - loops) gives
// dim Z <= 2*loops + fiber bound < 2p.
EqClassResult check_eqclass(const LocalQuiverData& lq, int64_t fiber_dim_bound);

struct FinalInequality {
  int64_t lhs = 0;
  int64_t rhs = 0;
  bool strict = false;
};

// sum A_i^2 + sum beta_i^2 < (sum beta_i A_i)^2. The reduced form of the
// bound chain; not strict at A = beta = (1,1) and false at r=1, beta=1,
// which the suite reports as findings.
FinalInequality check_final_inequality(const std::vector<int64_t>& A,
                                       const std::vector<int64_t>& betas);

struct GridResult {
  bool all_pass = false;
  int checked = 0;
  std::vector<BoundReport> reports;  // one per non-excluded type
};

// check_prop_nil over every non-simple type for g in gs, 2 <= n <= n_max,
// parallel over types.
GridResult check_prop_nil_grid(const std::vector<int>& gs, int n_max, int top_budget = 12,
                               int workers = 0);

}  // namespace qmm
