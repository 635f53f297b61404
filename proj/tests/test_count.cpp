#include <doctest.h>

#include <map>
#include <random>

#include "qmm/errors.hpp"
#include "qmm/fq_counter.hpp"
#include "support/brute_force.hpp"

using namespace qmm;
using qmm::testsupport::brute_force_count;

TEST_CASE("scalar counts are plain powers") {
  for (int g : {1, 2, 3})
    for (uint32_t p : {2u, 3u, 5u})
      for (int m = 0; m <= 3; ++m) {
        const CountResult r = count_jet_points(loop_quiver(g), {1}, p, m);
        CHECK(r.count == big_pow(p, 2 * uint64_t(g) * (m + 1)));
        CHECK(r.exact_power());
      }
}

TEST_CASE("moment count matches brute force at g=1, n=2, p=2") {
  const CountResult r = count_moment_points(loop_quiver(1), {2}, 2);
  CHECK(r.count == 88);
  CHECK(brute_force_count(moment_system(loop_quiver(1), {2}), 2) == 88);
}

TEST_CASE("moment count matches brute force at g=2, n=2, p=2") {
  const CountResult r = count_moment_points(loop_quiver(2), {2}, 2);
  CHECK(r.count == 11776);
  CHECK(brute_force_count(moment_system(loop_quiver(2), {2}), 2) == r.count);
}

TEST_CASE("moment counts match brute force across primes and shapes") {
  // one loop, n=2 over F_3: 3^8 = 6561 states
  const CountResult a = count_moment_points(loop_quiver(1), {2}, 3);
  CHECK(a.count == brute_force_count(moment_system(loop_quiver(1), {2}), 3));

  // a non-loop arrow between two vertices
  Quiver q;
  q.vertex_count = 2;
  q.arrows = {{0, 1}};
  const CountResult b = count_moment_points(q, {2, 2}, 2);
  CHECK(b.count == brute_force_count(moment_system(q, {2, 2}), 2));
}

TEST_CASE("jet count at order one matches a sliced brute force") {
  const PolySystem ps = jet_system(loop_quiver(2), {2}, 1);
  const BilinearKernel k = compile_bilinear(ps, 2);
  REQUIRE(k.fwd_vars == 16);
  REQUIRE(k.rev_vars == 16);

  // forward variable order inside the kernel follows term discovery; fix
  // whole forward assignments through the original system instead
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 3; ++trial) {
    std::map<uint32_t, uint32_t> fixed;
    for (uint32_t v = 0; v < ps.variables.size(); ++v)
      if (ps.variables[v].dir == VarDir::forward)
        fixed[v] = static_cast<uint32_t>(rng() % 2);
    const BigInt direct = brute_force_count(ps, 2, fixed);
    // the rank route: solutions = 2^(16 - rank) for this forward slice
    bool found = false;
    for (uint64_t r = 0; r <= 16; ++r)
      if (direct == big_pow(2, 16 - r)) found = true;
    CHECK(found);
  }
}

TEST_CASE("jet count m=1 equals the full count assembled from slices") {
  // count the m=1 jets over F_2 both ways on the one-loop quiver: the
  // kernel route and a full 2^16-state brute force
  const PolySystem ps = jet_system(loop_quiver(1), {2}, 1);
  const CountResult r = count_jet_points(loop_quiver(1), {2}, 2, 1);
  CHECK(r.count == brute_force_count(ps, 2, {}, uint64_t(1) << 16));
}

TEST_CASE("order zero jets equal the moment count") {
  for (uint32_t p : {2u, 3u}) {
    const CountResult jets = count_jet_points(loop_quiver(2), {2}, p, 0);
    const CountResult moments = count_moment_points(loop_quiver(2), {2}, p);
    CHECK(jets.count == moments.count);
  }
}

TEST_CASE("counts ignore arrow orientation") {
  Quiver q;
  q.vertex_count = 2;
  q.arrows = {{0, 1}, {1, 1}};
  Quiver flipped = q;
  flipped.arrows[0] = {1, 0};
  for (uint32_t p : {2u, 3u}) {
    CHECK(count_moment_points(q, {1, 2}, p).count ==
          count_moment_points(flipped, {1, 2}, p).count);
    CHECK(count_jet_points(q, {1, 2}, p, 1).count ==
          count_jet_points(flipped, {1, 2}, p, 1).count);
  }
}

TEST_CASE("serial reference agrees with the optimized parallel kernel") {
  for (uint32_t p : {2u, 3u}) {
    const BilinearKernel k = compile_bilinear(jet_system(loop_quiver(2), {2}, 0), p);
    const uint64_t total = k.forward_tuple_count().convert_to<uint64_t>();
    const RankHistogram serial = rank_histogram_serial(k, 0, total);
    CHECK(serial == rank_histogram(k, 1));
    CHECK(serial == rank_histogram(k, 2));
    CHECK(serial == rank_histogram(k, 8));
    CHECK(serial == detail::rank_histogram_fast_range(k, 0, total));
  }
}

TEST_CASE("histograms add over range splits") {
  const BilinearKernel k = compile_bilinear(jet_system(loop_quiver(2), {2}, 0), 3);
  const uint64_t total = k.forward_tuple_count().convert_to<uint64_t>();
  const RankHistogram whole = rank_histogram_serial(k, 0, total);
  for (uint64_t cut : {uint64_t(1), total / 3, total / 2, total - 1}) {
    RankHistogram left = rank_histogram_serial(k, 0, cut);
    const RankHistogram right = rank_histogram_serial(k, cut, total);
    for (size_t i = 0; i < left.size(); ++i) left[i] += right[i];
    CHECK(left == whole);
  }
}

TEST_CASE("jets based in the fixed locus, small brute force") {
  // m=1: the order-1 layer is unconstrained over a fixed base point
  const CountResult r = count_jets_over_fixed(loop_quiver(1), {2}, 2, 1);
  CHECK(r.count == big_pow(2, 2 + 8));

  const PolySystem ps = jet_system(loop_quiver(1), {2}, 1);
  BigInt direct = 0;
  for (uint32_t lam = 0; lam < 2; ++lam)
    for (uint32_t mu = 0; mu < 2; ++mu) {
      std::map<uint32_t, uint32_t> fixed;
      for (uint32_t v = 0; v < ps.variables.size(); ++v) {
        const VarId& id = ps.variables[v];
        if (id.jet != 0) continue;
        const uint32_t scalar = id.dir == VarDir::forward ? lam : mu;
        fixed[v] = id.row == id.col ? scalar : 0;
      }
      direct += brute_force_count(ps, 2, fixed);
    }
  CHECK(direct == r.count);
}

TEST_CASE("fixed-locus product identity at accessible orders") {
  for (uint32_t p : {2u, 3u})
    for (int m : {1, 2}) {
      const FixedProductCheck c = check_fixed_jet_product(loop_quiver(2), {2}, p, m);
      CHECK(c.exact);
    }
  // m=3 at p=2 stays cheap
  CHECK(check_fixed_jet_product(loop_quiver(2), {2}, 2, 3).exact);
}

TEST_CASE("budget errors carry the required cost") {
  CountOptions opts;
  opts.budget = 100;
  CHECK_THROWS_AS(count_moment_points(loop_quiver(2), {2}, 2, opts), budget_error);
  try {
    count_moment_points(loop_quiver(2), {2}, 2, opts);
  } catch (const budget_error& e) {
    CHECK(std::string(e.what()).find("256") != std::string::npos);
  }
}

TEST_CASE("dimension estimate across primes") {
  std::vector<CountResult> unit;
  for (uint32_t p : {2u, 3u, 5u}) unit.push_back(count_moment_points(loop_quiver(2), {1}, p));
  const DimensionReport udr = estimate_dimension(unit);
  for (const DimensionRow& row : udr.rows) {
    CHECK(row.exact);
    CHECK(row.ratio == 1.0);
  }

  std::vector<CountResult> mixed;
  for (uint32_t p : {2u, 3u, 5u}) mixed.push_back(count_moment_points(loop_quiver(2), {2}, p));
  const DimensionReport dr = estimate_dimension(mixed, 0.5, 2.0);
  CHECK(dr.all_in_band);
  // ratios drift toward 1 as p grows
  for (size_t i = 1; i < dr.rows.size(); ++i)
    CHECK(std::abs(dr.rows[i].ratio - 1.0) < std::abs(dr.rows[i - 1].ratio - 1.0));

  std::vector<CountResult> bad = mixed;
  bad[1] = count_jet_points(loop_quiver(2), {2}, 3, 1);
  CHECK_THROWS_AS(estimate_dimension(bad), std::invalid_argument);
  CHECK_THROWS_AS(estimate_dimension({mixed[0]}), std::invalid_argument);
}

TEST_CASE("ratio table truncates over budget") {
  CountOptions opts;
  opts.budget = 300;  // enough for m=0 only at g=2, n=2, p=2
  const MustataReport rep = mustata_ratio_report(2, 2, 2, 2, opts);
  CHECK(rep.truncated);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].computed);
  CHECK_FALSE(rep.rows[1].computed);
  CHECK_FALSE(rep.rows[2].computed);
}

TEST_CASE("ratio table at the default budget") {
  const MustataReport rep = mustata_ratio_report(2, 2, 2, 1);
  CHECK_FALSE(rep.truncated);
  CHECK(rep.rows[0].count == "11776");
  CHECK(rep.rows[1].count == "111149056");
  for (const FixedProductRow& row : rep.fixed_rows) {
    CHECK(row.computed);
    CHECK(row.exact);
  }
}

TEST_CASE("baseline keys are stable") {
  CHECK(count_moment_points(loop_quiver(2), {2}, 2).key() == "p2.m0.q1:0>0,0>0.d2");
  CHECK(count_jets_over_fixed(loop_quiver(2), {2}, 2, 1).key() == "p2.m1f.q1:0>0,0>0.d2");
}

TEST_CASE("unit-dimension ratio table is exact at every order") {
  const MustataReport rep = mustata_ratio_report(2, 1, 3, 3);
  CHECK_FALSE(rep.truncated);
  for (const MustataRow& row : rep.rows) {
    CHECK(row.computed);
    CHECK(row.exact);
    CHECK(row.ratio == 1.0);
  }
  for (const FixedProductRow& row : rep.fixed_rows) CHECK(row.exact);
}

TEST_CASE("log ratios track the expected exponent") {
  std::vector<CountResult> mixed;
  for (uint32_t p : {2u, 3u}) mixed.push_back(count_moment_points(loop_quiver(2), {2}, p));
  for (const DimensionRow& row : estimate_dimension(mixed).rows)
    CHECK(std::abs(row.log_p_count - double(row.expected_exponent)) < 1.0);
}
