#include "qmm/suite.hpp"

#include <algorithm>
#include <random>

#include "qmm/baselines.hpp"
#include "qmm/errors.hpp"
#include "qmm/fq_counter.hpp"
#include "qmm/group_counter.hpp"
#include "qmm/rep_types.hpp"
#include "qmm/strata_bounds.hpp"
#include "qmm/version.hpp"

namespace qmm {

namespace {

const char* kind_name(MatrixGroupKind k) {
  return k == MatrixGroupKind::special_linear ? "sl" : "gl";
}

MatrixGroupKind kind_from_name(const std::string& s) {
  if (s == "sl") return MatrixGroupKind::special_linear;
  if (s == "gl") return MatrixGroupKind::general_linear;
  throw std::invalid_argument("unknown group kind: " + s);
}

}  // namespace

SuiteConfig suite_config_from_json(const Json& j) {
  SuiteConfig cfg;
  try {
    if (j.contains("gs")) cfg.gs = j.at("gs").get<std::vector<int>>();
    if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<int>();
    if (j.contains("top_budget")) cfg.top_budget = j.at("top_budget").get<int>();
    if (j.contains("iteration_exhaustive_n"))
      cfg.iteration_exhaustive_n = j.at("iteration_exhaustive_n").get<int>();
    if (j.contains("iteration_sample_count"))
      cfg.iteration_sample_count = j.at("iteration_sample_count").get<int>();
    if (j.contains("iteration_sample_n"))
      cfg.iteration_sample_n = j.at("iteration_sample_n").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
    if (j.contains("unit_primes"))
      cfg.unit_primes = j.at("unit_primes").get<std::vector<uint32_t>>();
    if (j.contains("unit_m_max")) cfg.unit_m_max = j.at("unit_m_max").get<int>();
    auto parse_cases = [](const Json& arr) {
      std::vector<CountCase> cases;
      for (const Json& c : arr)
        cases.push_back(CountCase{c.at("g").get<int>(), c.at("n").get<int>(),
                                  c.at("p").get<uint32_t>(), c.value("m", 0)});
      return cases;
    };
    if (j.contains("count_cases")) cfg.count_cases = parse_cases(j.at("count_cases"));
    if (j.contains("fixed_cases")) cfg.fixed_cases = parse_cases(j.at("fixed_cases"));
    if (j.contains("ratio_primes"))
      cfg.ratio_primes = j.at("ratio_primes").get<std::vector<uint32_t>>();
    if (j.contains("mustata_m_max")) cfg.mustata_m_max = j.at("mustata_m_max").get<int>();
    if (j.contains("mustata_prime")) cfg.mustata_prime = j.at("mustata_prime").get<uint32_t>();
    if (j.contains("budget")) cfg.budget = BigInt(j.at("budget").get<std::string>());
    if (j.contains("band")) {
      cfg.band_lo = j.at("band").at(0).get<double>();
      cfg.band_hi = j.at("band").at(1).get<double>();
    }
    if (j.contains("groups")) {
      cfg.groups.clear();
      for (const Json& gc : j.at("groups"))
        cfg.groups.push_back(GroupCase{gc.at("p").get<uint32_t>(), gc.at("n").get<int>(),
                                       kind_from_name(gc.at("kind").get<std::string>())});
    }
    if (j.contains("group_gs")) cfg.group_gs = j.at("group_gs").get<std::vector<int>>();
    if (j.contains("group_cap")) cfg.group_cap = j.at("group_cap").get<uint64_t>();
    if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
    if (j.contains("baselines")) cfg.baselines_path = j.at("baselines").get<std::string>();
    if (j.contains("freeze")) cfg.freeze = j.at("freeze").get<bool>();
    if (j.contains("include_excluded_type"))
      cfg.include_excluded_type = j.at("include_excluded_type").get<bool>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad suite config: ") + e.what());
  }
  return cfg;
}

Json suite_config_to_json(const SuiteConfig& cfg) {
  Json j;
  j["gs"] = cfg.gs;
  j["n_max"] = cfg.n_max;
  j["top_budget"] = cfg.top_budget;
  j["iteration_exhaustive_n"] = cfg.iteration_exhaustive_n;
  j["iteration_sample_count"] = cfg.iteration_sample_count;
  j["iteration_sample_n"] = cfg.iteration_sample_n;
  j["seed"] = cfg.seed;
  j["unit_primes"] = cfg.unit_primes;
  j["unit_m_max"] = cfg.unit_m_max;
  auto cases_json = [](const std::vector<CountCase>& cases) {
    Json arr = Json::array();
    for (const CountCase& c : cases)
      arr.push_back(Json{{"g", c.g}, {"n", c.n}, {"p", c.p}, {"m", c.m}});
    return arr;
  };
  j["count_cases"] = cases_json(cfg.count_cases);
  j["fixed_cases"] = cases_json(cfg.fixed_cases);
  j["ratio_primes"] = cfg.ratio_primes;
  j["mustata_m_max"] = cfg.mustata_m_max;
  j["mustata_prime"] = cfg.mustata_prime;
  j["budget"] = cfg.budget.str();
  j["band"] = Json::array({cfg.band_lo, cfg.band_hi});
  Json groups = Json::array();
  for (const GroupCase& gc : cfg.groups)
    groups.push_back(Json{{"p", gc.p}, {"n", gc.n}, {"kind", kind_name(gc.kind)}});
  j["groups"] = groups;
  j["group_gs"] = cfg.group_gs;
  j["group_cap"] = cfg.group_cap;
  j["workers"] = cfg.workers;
  j["baselines"] = cfg.baselines_path;
  j["freeze"] = cfg.freeze;
  j["include_excluded_type"] = cfg.include_excluded_type;
  return j;
}

namespace {

void add_class_c_checks(const SuiteConfig& cfg, SuiteReport& rep) {
  // p-invariance of the built quiver over a small (g, betas, e) grid
  {
    CheckRecord c;
    c.name = "class-c-p-invariance";
    c.tag = StatementTag::class_c_construction;
    int checked = 0;
    bool ok = true;
    Json failures = Json::array();
    for (int g : cfg.gs)
      for (const std::vector<int>& betas :
           {std::vector<int>{1}, {2}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {1, 1, 2}})
        for (const DimVector& e :
             {DimVector(betas.size(), 1), DimVector(betas.size(), 2)}) {
          const Quiver q = build_class_c_quiver(g, betas);
          int64_t weighted = 0;
          for (size_t i = 0; i < betas.size(); ++i) weighted += int64_t(e[i]) * betas[i];
          const int64_t expected = 1 + int64_t(g - 1) * weighted * weighted;
          ++checked;
          if (p_value(q, e) != expected) {
            ok = false;
            failures.push_back(Json{{"g", g}, {"betas", betas}, {"e", e}});
          }
        }
    c.inputs = Json{{"gs", cfg.gs}};
    c.outcome = ok ? Outcome::pass : Outcome::fail;
    c.data = Json{{"checked", checked}};
    if (!ok) c.data["failures"] = failures;
    rep.checks.push_back(std::move(c));
  }

  // The construction uses 2(g-1) b_i b_j arrows between distinct vertices;
  // the alternative reading (g-1) b_i b_j breaks the p-invariance above.
  {
    CheckRecord c;
    c.name = "cross-arrow-convention";
    c.tag = StatementTag::cross_arrow_convention;
    c.outcome = Outcome::info;
    const int g = 2;
    const std::vector<int> betas{1, 1};
    const DimVector e{1, 1};
    Quiver chosen = build_class_c_quiver(g, betas);
    Quiver alt = chosen;
    // strip half of the cross arrows to model the alternative reading
    alt.arrows.clear();
    for (const Arrow& a : chosen.arrows)
      if (a.tail == a.head) alt.arrows.push_back(a);
    for (size_t i = 0; i < betas.size(); ++i)
      for (size_t j = i + 1; j < betas.size(); ++j)
        for (int64_t k = 0; k < int64_t(g - 1) * betas[i] * betas[j]; ++k)
          alt.arrows.push_back(Arrow{int(i), int(j)});
    const int64_t expected = 1 + int64_t(g - 1) * 4;
    c.inputs = Json{{"g", g}, {"betas", betas}, {"e", e}};
    c.data = Json{
        {"note", "two cross-arrow totals are in circulation for the class-C construction; "
                 "only one preserves p under the local construction"},
        {"chosen_cross_total", "2(g-1)*b_i*b_j"},
        {"alternative_cross_total", "(g-1)*b_i*b_j"},
        {"expected_p", expected},
        {"chosen_p", p_value(chosen, e)},
        {"alternative_p", p_value(alt, e)},
        {"chosen_preserves_p", p_value(chosen, e) == expected},
        {"alternative_preserves_p", p_value(alt, e) == expected}};
    rep.checks.push_back(std::move(c));
  }
}

void add_local_p_checks(const SuiteConfig& cfg, SuiteReport& rep) {
  for (int g : cfg.gs) {
    CheckRecord c;
    c.name = "local-p-invariance g=" + std::to_string(g);
    c.tag = StatementTag::local_p_invariance;
    c.inputs = Json{{"g", g}, {"n_max", cfg.n_max}};
    int checked = 0;
    bool ok = true;
    Json failures = Json::array();
    const Quiver q = loop_quiver(g);
    for (int n = 1; n <= cfg.n_max; ++n) {
      const int64_t pn = p_value(q, DimVector{n});
      for (const RepType& tau : enumerate_rep_types(g, n)) {
        const LocalQuiverData lq = local_quiver(q, tau);
        ++checked;
        if (p_value(lq.quiver, lq.dims) != pn) {
          ok = false;
          failures.push_back(Json{{"n", n}, {"tau", format_tau(tau)}});
        }
      }
    }
    c.outcome = ok ? Outcome::pass : Outcome::fail;
    c.data = Json{{"types_checked", checked}};
    if (!ok) c.data["failures"] = failures;
    rep.checks.push_back(std::move(c));
  }
}

void add_iteration_checks(const SuiteConfig& cfg, SuiteReport& rep) {
  // exhaustive at the smallest configured g
  {
    const int g = cfg.gs.empty() ? 2 : *std::min_element(cfg.gs.begin(), cfg.gs.end());
    CheckRecord c;
    c.name = "iteration-consistency-exhaustive g=" + std::to_string(g);
    c.tag = StatementTag::iteration_consistency;
    c.inputs = Json{{"g", g}, {"n_max", cfg.iteration_exhaustive_n}};
    int checked = 0;
    bool ok = true;
    Json failures = Json::array();
    const Quiver q = loop_quiver(g);
    for (int n = 1; n <= cfg.iteration_exhaustive_n; ++n)
      for (const RepType& tau : enumerate_rep_types(g, n)) {
        const LocalQuiverData lq = local_quiver(q, tau);
        for (const RepType& tp : enumerate_types_on(lq.dims)) {
          ++checked;
          if (!check_iteration_consistency(q, tau, tp).consistent) {
            ok = false;
            failures.push_back(
                Json{{"n", n}, {"tau", format_tau(tau)}, {"tau_prime", format_tau(tp)}});
          }
        }
      }
    c.outcome = ok ? Outcome::pass : Outcome::fail;
    c.data = Json{{"pairs_checked", checked}};
    if (!ok) c.data["failures"] = failures;
    rep.checks.push_back(std::move(c));
  }

  // random samples at the largest configured g
  {
    const int g = cfg.gs.empty() ? 3 : *std::max_element(cfg.gs.begin(), cfg.gs.end());
    CheckRecord c;
    c.name = "iteration-consistency-samples g=" + std::to_string(g);
    c.tag = StatementTag::iteration_consistency;
    c.inputs = Json{{"g", g},
                    {"n_max", cfg.iteration_sample_n},
                    {"samples", cfg.iteration_sample_count},
                    {"seed", cfg.seed}};
    std::mt19937_64 rng(cfg.seed);
    const Quiver q = loop_quiver(g);
    int checked = 0;
    bool ok = true;
    Json failures = Json::array();
    while (checked < cfg.iteration_sample_count) {
      const int n = 1 + int(rng() % uint64_t(cfg.iteration_sample_n));
      const std::vector<RepType> taus = enumerate_rep_types(g, n);
      const RepType& tau = taus[rng() % taus.size()];
      const LocalQuiverData lq = local_quiver(q, tau);
      const std::vector<RepType> inner = enumerate_types_on(lq.dims);
      const RepType& tp = inner[rng() % inner.size()];
      ++checked;
      if (!check_iteration_consistency(q, tau, tp).consistent) {
        ok = false;
        failures.push_back(Json{{"n", n}, {"tau", format_tau(tau)}, {"tau_prime", format_tau(tp)}});
      }
    }
    c.outcome = ok ? Outcome::pass : Outcome::fail;
    c.data = Json{{"pairs_checked", checked}};
    if (!ok) c.data["failures"] = failures;
    rep.checks.push_back(std::move(c));
  }
}

void add_bound_checks(const SuiteConfig& cfg, SuiteReport& rep) {
  for (int g : cfg.gs)
    for (int n = 2; n <= cfg.n_max; ++n) {
      CheckRecord c;
      c.name = "nilpotent-fiber-bound g=" + std::to_string(g) + " n=" + std::to_string(n);
      c.tag = StatementTag::nilpotent_fiber_bound;
      c.inputs = Json{{"g", g}, {"n", n}};
      int types = 0;
      bool ok = true;
      int64_t worst_margin = 0;
      std::string worst_tau;
      Json boundary = Json::array();
      Json failures = Json::array();
      for (const RepType& tau : enumerate_rep_types(g, n)) {
        if (tau.is_full_simple()) {
          if (cfg.include_excluded_type) {
            CheckRecord ex;
            ex.name = "nilpotent-fiber-bound g=" + std::to_string(g) + " n=" +
                      std::to_string(n) + " tau=" + format_tau(tau);
            ex.tag = StatementTag::excluded_simple_type;
            ex.inputs = Json{{"g", g}, {"n", n}, {"tau", format_tau(tau)}};
            ex.outcome = Outcome::info;
            try {
              check_prop_nil(g, n, tau, cfg.top_budget);
              ex.data = Json{{"error", "expected rejection did not happen"}};
              ex.outcome = Outcome::fail;
            } catch (const excluded_type_error& e) {
              ex.data = Json{{"error", e.what()}};
            }
            rep.checks.push_back(std::move(ex));
          }
          continue;
        }
        BoundReport br;
        try {
          br = check_prop_nil(g, n, tau, cfg.top_budget);
        } catch (const budget_error& e) {
          CheckRecord b;
          b.name = c.name + " tau=" + format_tau(tau);
          b.tag = StatementTag::budget;
          b.outcome = Outcome::info;
          b.data = Json{{"error", e.what()}};
          rep.checks.push_back(std::move(b));
          continue;
        }
        ++types;
        const int64_t margin = br.target - br.max_bound;
        if (types == 1 || margin < worst_margin) {
          worst_margin = margin;
          worst_tau = format_tau(tau);
        }
        if (!br.pass) {
          ok = false;
          failures.push_back(Json{{"tau", format_tau(tau)},
                                  {"max_bound", br.max_bound},
                                  {"target", br.target}});
        }
        // the fixed-locus route, which can sit exactly at its boundary
        // while the type-specific target stays strict
        const LocalQuiverData lq = local_quiver(loop_quiver(g), tau);
        const EqClassResult eq = check_eqclass(lq, br.max_bound);
        if (!eq.holds)
          boundary.push_back(Json{{"tau", format_tau(tau)},
                                  {"fiber_bound", br.max_bound},
                                  {"fiber_cap", eq.fiber_cap},
                                  {"z_dim_bound", eq.z_dim_bound},
                                  {"two_p", eq.two_p},
                                  {"type_target", br.target},
                                  {"type_target_strict", br.pass}});
      }
      c.outcome = ok ? Outcome::pass : Outcome::fail;
      c.data = Json{{"types_checked", types},
                    {"worst_margin", worst_margin},
                    {"worst_tau", worst_tau}};
      if (!failures.empty()) c.data["failures"] = failures;
      rep.checks.push_back(std::move(c));

      if (!boundary.empty()) {
        CheckRecord b;
        b.name = "fixed-locus-bound-boundary g=" + std::to_string(g) + " n=" + std::to_string(n);
        b.tag = StatementTag::fixed_locus_bound;
        b.inputs = Json{{"g", g}, {"n", n}};
        b.outcome = Outcome::info;
        b.data = Json{{"note", "types where the fixed-locus criterion is not strict; the "
                               "type-specific target is reported alongside"},
                      {"types", boundary}};
        rep.checks.push_back(std::move(b));
      }
    }

  // the excluded type really is excluded: at (1,n) the stratum through the
  // fixed locus is the full simple locus, of dimension n^2-1+2p >= 2p
  {
    CheckRecord c;
    c.name = "excluded-simple-type-witness";
    c.tag = StatementTag::excluded_simple_type;
    c.inputs = Json{{"gs", cfg.gs}, {"n_max", cfg.n_max}};
    bool ok = true;
    int checked = 0;
    for (int g : cfg.gs)
      for (int n = 2; n <= cfg.n_max; ++n) {
        const int64_t p = p_value(loop_quiver(g), DimVector{n});
        const int64_t simple_locus_dim = int64_t(n) * n - 1 + 2 * p;
        ++checked;
        if (!(simple_locus_dim >= 2 * p)) ok = false;
      }
    c.outcome = ok ? Outcome::pass : Outcome::fail;
    c.data = Json{{"checked", checked},
                  {"note", "the strict bound fails at (1,n): the stratum is open of dimension "
                           "n^2-1+2p"}};
    rep.checks.push_back(std::move(c));
  }

  // the two target forms agree only at r = 1; the general gap is 2(r-1)
  {
    CheckRecord c;
    c.name = "target-form-gap";
    c.tag = StatementTag::target_form_gap;
    c.inputs = Json{{"gs", cfg.gs}, {"n_max", cfg.n_max}};
    bool relation_ok = true;
    int checked = 0;
    for (int g : cfg.gs)
      for (int n = 2; n <= cfg.n_max; ++n)
        for (const RepType& tau : enumerate_rep_types(g, n)) {
          const int64_t closed = nilpotent_target(g, n, tau);
          const int64_t p_form = nilpotent_target_p_form(g, n, tau);
          const int64_t r = int64_t(tau.pairs.size());
          ++checked;
          if (closed - p_form != 2 * (r - 1)) relation_ok = false;
        }
    const RepType sample = parse_tau("1x1,1x1");
    c.outcome = relation_ok ? Outcome::pass : Outcome::fail;
    c.data = Json{
        {"note", "the p-value form 2p(n) - 2 sum p(b_i) of the fiber target differs from the "
                 "closed form 2(g-1)(n^2 - sum b_i^2) by 2(r-1); the closed form is the one "
                 "the bound is checked against"},
        {"relation_checked", checked},
        {"example",
         Json{{"g", 2},
              {"n", 2},
              {"tau", format_tau(sample)},
              {"closed_form", nilpotent_target(2, 2, sample)},
              {"p_value_form", nilpotent_target_p_form(2, 2, sample)}}}};
    rep.checks.push_back(std::move(c));
  }

  // reduced-chain endpoint edge cases, recorded as findings
  {
    const FinalInequality eq_case = check_final_inequality({1, 1}, {1, 1});
    const FinalInequality fail_case = check_final_inequality({3}, {1});
    const FinalInequality pass_case = check_final_inequality({2}, {2});
    CheckRecord c;
    c.name = "final-inequality-edge-cases";
    c.tag = StatementTag::final_inequality_edge;
    c.outcome = Outcome::info;
    c.data = Json{
        {"note", "the reduced inequality drops slack, so these edge cases do not affect the "
                 "direct bound checks above"},
        {"equality_at_r2",
         Json{{"A", {1, 1}}, {"beta", {1, 1}}, {"lhs", eq_case.lhs}, {"rhs", eq_case.rhs},
              {"strict", eq_case.strict}}},
        {"failure_at_r1_beta1",
         Json{{"A", {3}}, {"beta", {1}}, {"lhs", fail_case.lhs}, {"rhs", fail_case.rhs},
              {"strict", fail_case.strict}}},
        {"strict_sample",
         Json{{"A", {2}}, {"beta", {2}}, {"lhs", pass_case.lhs}, {"rhs", pass_case.rhs},
              {"strict", pass_case.strict}}}};
    rep.checks.push_back(std::move(c));
  }
}

void add_count_checks(const SuiteConfig& cfg, SuiteReport& rep, Baselines& baselines,
                      bool& baselines_dirty) {
  const CountOptions opts{cfg.budget, cfg.workers};

  // n = 1: every jet space is an affine space, counts are exact powers
  {
    CheckRecord c;
    c.name = "unit-dimension-counts";
    c.tag = StatementTag::jet_count;
    c.inputs = Json{{"gs", cfg.gs}, {"primes", cfg.unit_primes}, {"m_max", cfg.unit_m_max}};
    bool ok = true;
    int checked = 0;
    for (int g : cfg.gs)
      for (uint32_t p : cfg.unit_primes)
        for (int m = 0; m <= cfg.unit_m_max; ++m) {
          const CountResult r = count_jet_points(loop_quiver(g), DimVector{1}, p, m, opts);
          ++checked;
          if (r.count != big_pow(p, 2 * uint64_t(g) * (m + 1))) ok = false;
        }
    c.outcome = ok ? Outcome::pass : Outcome::fail;
    c.data = Json{{"checked", checked}};
    rep.checks.push_back(std::move(c));
  }

  // configured counting cases against the frozen baselines
  for (const CountCase& cc : cfg.count_cases) {
    CheckRecord c;
    c.name = (cc.m == 0 ? "moment-count" : "jet-count");
    c.name += " g=" + std::to_string(cc.g) + " n=" + std::to_string(cc.n) +
              " p=" + std::to_string(cc.p) + " m=" + std::to_string(cc.m);
    c.tag = cc.m == 0 ? StatementTag::moment_count : StatementTag::jet_count;
    c.inputs = Json{{"g", cc.g}, {"n", cc.n}, {"p", cc.p}, {"m", cc.m}};
    try {
      const CountResult r = count_jet_points(loop_quiver(cc.g), DimVector{cc.n}, cc.p, cc.m, opts);
      c.data = Json{{"count", r.count.str()},
                    {"expected_exponent", r.expected_exponent},
                    {"ratio", r.ratio()},
                    {"key", r.key()}};
      if (cfg.freeze) {
        baselines.set(r.key(), r.count);
        baselines_dirty = true;
        c.outcome = Outcome::info;
        c.data["baseline"] = "frozen";
        rep.baseline_diffs.push_back(Json{{"key", r.key()}, {"action", "frozen"}});
      } else {
        switch (baselines.compare(r.key(), r.count)) {
          case Baselines::Status::match:
            c.outcome = Outcome::pass;
            c.data["baseline"] = "match";
            break;
          case Baselines::Status::mismatch:
            c.outcome = Outcome::fail;
            c.data["baseline"] = "mismatch";
            c.data["baseline_value"] = baselines.find(r.key())->str();
            rep.baseline_diffs.push_back(Json{{"key", r.key()},
                                              {"action", "mismatch"},
                                              {"stored", baselines.find(r.key())->str()},
                                              {"computed", r.count.str()}});
            break;
          case Baselines::Status::missing:
            c.outcome = Outcome::info;
            c.data["baseline"] = "missing; rerun with freeze to record";
            rep.baseline_diffs.push_back(Json{{"key", r.key()}, {"action", "missing"}});
            break;
        }
      }
    } catch (const budget_error& e) {
      c.tag = StatementTag::budget;
      c.outcome = Outcome::info;
      c.data = Json{{"error", e.what()}};
    }
    rep.checks.push_back(std::move(c));
  }

  // fixed-locus product identities
  for (const CountCase& cc : cfg.fixed_cases) {
    CheckRecord c;
    c.name = "fixed-jet-product g=" + std::to_string(cc.g) + " n=" + std::to_string(cc.n) +
             " p=" + std::to_string(cc.p) + " m=" + std::to_string(cc.m);
    c.tag = StatementTag::fixed_jet_product;
    c.inputs = Json{{"g", cc.g}, {"n", cc.n}, {"p", cc.p}, {"m", cc.m}};
    try {
      const FixedProductCheck f =
          check_fixed_jet_product(loop_quiver(cc.g), DimVector{cc.n}, cc.p, cc.m, opts);
      c.outcome = f.exact ? Outcome::pass : Outcome::fail;
      c.data = Json{{"jets_over_fixed", f.jets_over_fixed.str()},
                    {"product_form", f.product_form.str()},
                    {"exact", f.exact}};
    } catch (const budget_error& e) {
      c.tag = StatementTag::budget;
      c.outcome = Outcome::info;
      c.data = Json{{"error", e.what()}};
    }
    rep.checks.push_back(std::move(c));
  }

  // ratio diagnostics across primes; labeled, never pass/fail
  if (cfg.ratio_primes.size() >= 2) {
    CheckRecord c;
    c.name = "count-ratio-diagnostic g=2 n=2 m=0";
    c.tag = StatementTag::count_ratio_diagnostic;
    c.inputs = Json{{"primes", cfg.ratio_primes}, {"band", {cfg.band_lo, cfg.band_hi}}};
    c.outcome = Outcome::info;
    try {
      std::vector<CountResult> results;
      for (uint32_t p : cfg.ratio_primes)
        results.push_back(count_moment_points(loop_quiver(2), DimVector{2}, p, opts));
      const DimensionReport dr = estimate_dimension(results, cfg.band_lo, cfg.band_hi);
      Json rows = Json::array();
      for (const DimensionRow& row : dr.rows)
        rows.push_back(Json{{"p", row.prime},
                            {"count", row.count},
                            {"expected_exponent", row.expected_exponent},
                            {"log_p_count", row.log_p_count},
                            {"ratio", row.ratio},
                            {"exact", row.exact},
                            {"in_band", row.in_band}});
      c.data = Json{{"note", "count-ratio diagnostic at small primes; indicative only, not a "
                             "dimension statement"},
                    {"rows", rows},
                    {"all_in_band", dr.all_in_band}};
    } catch (const budget_error& e) {
      c.data = Json{{"error", e.what()}};
    }
    rep.checks.push_back(std::move(c));
  }

  // jet-ratio table with the fixed-locus identities at one prime
  {
    CheckRecord c;
    c.name = "jet-ratio-table g=2 n=2 p=" + std::to_string(cfg.mustata_prime);
    c.tag = StatementTag::count_ratio_diagnostic;
    c.inputs = Json{{"p", cfg.mustata_prime}, {"m_max", cfg.mustata_m_max}};
    c.outcome = Outcome::info;
    const MustataReport mr = mustata_ratio_report(2, 2, cfg.mustata_prime, cfg.mustata_m_max, opts);
    Json rows = Json::array();
    for (const MustataRow& row : mr.rows) {
      Json jr{{"m", row.m}, {"computed", row.computed}};
      if (row.computed) {
        jr["count"] = row.count;
        jr["expected_exponent"] = row.expected_exponent;
        jr["ratio"] = row.ratio;
      } else {
        jr["truncated"] = "budget exceeded";
      }
      rows.push_back(std::move(jr));
    }
    Json fixed = Json::array();
    for (const FixedProductRow& row : mr.fixed_rows) {
      Json jr{{"m", row.m}, {"computed", row.computed}};
      if (row.computed) {
        jr["jets_over_fixed"] = row.jets_over_fixed;
        jr["product_form"] = row.product_form;
        jr["exact"] = row.exact;
      } else {
        jr["truncated"] = "budget exceeded";
      }
      fixed.push_back(std::move(jr));
    }
    c.data = Json{{"note", "count-level shadow of the jet-dimension criterion; indicative "
                           "only, not a dimension statement"},
                  {"rows", rows},
                  {"fixed_identities", fixed},
                  {"truncated", mr.truncated}};
    rep.checks.push_back(std::move(c));
  }
}

void add_group_checks(const SuiteConfig& cfg, SuiteReport& rep) {
  for (const GroupCase& gc : cfg.groups) {
    const std::string gname = std::string(kind_name(gc.kind)) + std::to_string(gc.n) + "(F" +
                              std::to_string(gc.p) + ")";
    FiniteMatrixGroup G;
    try {
      G = enumerate_group(gc.p, gc.n, gc.kind, cfg.group_cap);
    } catch (const budget_error& e) {
      CheckRecord c;
      c.name = "group-enumeration " + gname;
      c.tag = StatementTag::budget;
      c.outcome = Outcome::info;
      c.data = Json{{"error", e.what()}};
      rep.checks.push_back(std::move(c));
      continue;
    }
    const ClassFunctionTable cdist = commutator_distribution(G, cfg.workers);

    for (int g : cfg.group_gs) {
      const ClassFunctionTable cg = convolve_power(cdist, g, G, cfg.workers);
      BigInt total = 0;
      for (const BigInt& v : cg) total += v;

      CheckRecord c;
      c.name = "relation-mass " + gname + " g=" + std::to_string(g);
      c.tag = StatementTag::group_mass_conservation;
      c.inputs = Json{{"group", gname}, {"g", g}};
      const BigInt expected = big_pow(G.size(), 2 * uint64_t(g));
      c.outcome = total == expected ? Outcome::pass : Outcome::fail;
      c.data = Json{{"order", G.size()},
                    {"total", total.str()},
                    {"expected", expected.str()},
                    {"identity_fiber", cg[G.identity].str()}};
      rep.checks.push_back(std::move(c));

      if (g == 1) {
        CheckRecord cp;
        cp.name = "commuting-pairs " + gname;
        cp.tag = StatementTag::commuting_pair_identity;
        cp.inputs = Json{{"group", gname}};
        const BigInt expected_pairs = BigInt(G.size()) * BigInt(G.classes.size());
        cp.outcome = cg[G.identity] == expected_pairs ? Outcome::pass : Outcome::fail;
        cp.data = Json{{"identity_fiber", cg[G.identity].str()},
                       {"order_times_classes", expected_pairs.str()},
                       {"classes", G.classes.size()}};
        rep.checks.push_back(std::move(cp));
      }

      const FiberReport fr = fiber_report(G, g, cfg.workers);
      CheckRecord fs;
      fs.name = "relation-fiber-spread " + gname + " g=" + std::to_string(g);
      fs.tag = StatementTag::relation_fiber_spread;
      fs.inputs = Json{{"group", gname}, {"g", g}};
      fs.outcome = Outcome::info;
      Json rows = Json::array();
      for (const FiberClassRow& row : fr.rows)
        rows.push_back(Json{{"class", row.class_id},
                            {"size", row.class_size},
                            {"count", row.count},
                            {"ratio", row.ratio}});
      fs.data = Json{{"note", "per-class fiber counts against the uniform value; spread is "
                              "reported, no pass threshold is attached"},
                     {"min_ratio", fr.min_ratio},
                     {"max_ratio", fr.max_ratio},
                     {"classes", rows}};
      rep.checks.push_back(std::move(fs));
    }
  }
}

void add_determinism_check(const SuiteConfig& cfg, SuiteReport& rep) {
  CheckRecord c;
  c.name = "worker-count-independence";
  c.tag = StatementTag::determinism;
  c.inputs = Json{{"workers", {1, 2, 8}}};
  const CountOptions base{cfg.budget, 0};
  BigInt reference;
  bool ok = true;
  try {
    for (int w : {1, 2, 8}) {
      CountOptions o = base;
      o.workers = w;
      const BigInt v = count_jet_points(loop_quiver(2), DimVector{2}, 2, 1, o).count;
      if (w == 1)
        reference = v;
      else
        ok = ok && v == reference;
    }
    c.outcome = ok ? Outcome::pass : Outcome::fail;
    c.data = Json{{"count", reference.str()}};
  } catch (const budget_error& e) {
    c.tag = StatementTag::budget;
    c.outcome = Outcome::info;
    c.data = Json{{"error", e.what()}};
  }
  rep.checks.push_back(std::move(c));
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.version = kVersion;
  rep.parameters = suite_config_to_json(cfg);

  Baselines baselines = Baselines::load(cfg.baselines_path);
  bool baselines_dirty = false;

  add_class_c_checks(cfg, rep);
  add_local_p_checks(cfg, rep);
  add_iteration_checks(cfg, rep);
  add_bound_checks(cfg, rep);
  add_count_checks(cfg, rep, baselines, baselines_dirty);
  add_group_checks(cfg, rep);
  add_determinism_check(cfg, rep);

  if (baselines_dirty) baselines.save(cfg.baselines_path);
  return rep;
}

}  // namespace qmm
