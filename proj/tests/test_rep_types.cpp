#include <doctest.h>

#include <random>
#include <set>

#include "qmm/errors.hpp"
#include "qmm/rep_types.hpp"

using namespace qmm;

TEST_CASE("type enumeration at small n") {
  CHECK(enumerate_rep_types(2, 1) == std::vector<RepType>{parse_tau("1x1")});

  const std::vector<RepType> t2 = enumerate_rep_types(2, 2);
  REQUIRE(t2.size() == 3);
  CHECK(t2[0] == parse_tau("1x2"));
  CHECK(t2[1] == parse_tau("2x1"));
  CHECK(t2[2] == parse_tau("1x1,1x1"));

  CHECK(enumerate_rep_types(2, 3).size() == 5);

  CHECK_THROWS_AS(enumerate_rep_types(2, 0), std::domain_error);
  CHECK_THROWS_AS(enumerate_rep_types(1, 2), std::domain_error);
}

TEST_CASE("type enumeration invariants") {
  size_t prev = 0;
  for (int n = 1; n <= 6; ++n) {
    const std::vector<RepType> types = enumerate_rep_types(2, n);
    CHECK(types.size() >= prev);
    prev = types.size();
    std::set<std::string> seen;
    for (const RepType& tau : types) {
      CHECK(tau.weighted_dim_sum() == DimVector{n});
      for (size_t i = 0; i + 1 < tau.pairs.size(); ++i)
        CHECK_FALSE(rep_pair_canonical_less(tau.pairs[i + 1], tau.pairs[i]));
      CHECK(seen.insert(format_tau(tau)).second);  // no duplicates
    }
  }
}

TEST_CASE("trivial type") {
  CHECK(trivial_type({2}) == parse_tau("2x1"));

  const RepType t11 = trivial_type({1, 1});
  REQUIRE(t11.pairs.size() == 2);
  CHECK(t11.pairs[0] == RepPair{1, {1, 0}});
  CHECK(t11.pairs[1] == RepPair{1, {0, 1}});

  const RepType t302 = trivial_type({3, 0, 2});
  REQUIRE(t302.pairs.size() == 2);
  CHECK(t302.pairs[0] == RepPair{3, {1, 0, 0}});
  CHECK(t302.pairs[1] == RepPair{2, {0, 0, 1}});

  CHECK_THROWS_AS(trivial_type({0, 0}), std::domain_error);
}

TEST_CASE("local quivers of one-vertex types") {
  const Quiver q = loop_quiver(2);

  const LocalQuiverData a = local_quiver(q, parse_tau("2x1"));
  CHECK(a.quiver == loop_quiver(2));
  CHECK(a.dims == DimVector{2});
  CHECK(a.vertex_labels == std::vector<DimVector>{{1}});

  const LocalQuiverData b = local_quiver(q, parse_tau("1x1,1x1"));
  CHECK(b.quiver == build_class_c_quiver(2, {1, 1}));
  CHECK(b.dims == DimVector{1, 1});

  for (int n = 1; n <= 5; ++n) {
    const LocalQuiverData c = local_quiver(q, RepType{{RepPair{1, {n}}}});
    CHECK(c.quiver == loop_quiver(1 + n * n));
    CHECK(c.dims == DimVector{1});
  }
}

TEST_CASE("local p invariance over the enumerated types") {
  for (int g : {2, 3}) {
    const Quiver q = loop_quiver(g);
    for (int n = 1; n <= 4; ++n) {
      const int64_t pn = p_value(q, {n});
      for (const RepType& tau : enumerate_rep_types(g, n)) {
        const LocalQuiverData lq = local_quiver(q, tau);
        CHECK(p_value(lq.quiver, lq.dims) == pn);
      }
    }
  }
}

TEST_CASE("local quiver rejects types outside the supported class") {
  // a loop-free vertex has p(eps) = 0, and any second summand forces a
  // negative cross count
  Quiver q;
  q.vertex_count = 1;
  q.arrows = {};
  CHECK_THROWS_AS(local_quiver(q, parse_tau("1x1,1x2")), invalid_type_error);
}

TEST_CASE("compose types") {
  const RepType tau = parse_tau("1x1,1x1");

  // trivial inner type reproduces tau
  CHECK(compose_types(tau, trivial_type({1, 1})) == tau);

  // the full simple inner type collapses to (1, alpha)
  const RepType full{{RepPair{1, {1, 1}}}};
  CHECK(compose_types(tau, full) == parse_tau("1x2"));

  // direct formula evaluation
  const RepType tp{{RepPair{2, {1, 1}}}};
  CHECK(compose_types(tau, tp) == parse_tau("2x2"));

  CHECK_THROWS_AS(compose_types(tau, RepType{{RepPair{1, {1, 0, 0}}}}),
                  std::invalid_argument);
}

TEST_CASE("iteration consistency, exhaustive small grid") {
  const Quiver q = loop_quiver(2);
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (const RepType& tau : enumerate_rep_types(2, n)) {
      const LocalQuiverData lq = local_quiver(q, tau);
      for (const RepType& tp : enumerate_types_on(lq.dims)) {
        ++checked;
        CHECK(check_iteration_consistency(q, tau, tp).consistent);
      }
    }
  CHECK(checked > 10);
}

TEST_CASE("iteration with the trivial inner type reproduces the local quiver") {
  const Quiver q = loop_quiver(3);
  for (const RepType& tau : enumerate_rep_types(3, 3)) {
    const LocalQuiverData lq = local_quiver(q, tau);
    const IterationCheck ic = check_iteration_consistency(q, tau, trivial_type(lq.dims));
    CHECK(ic.consistent);
    CHECK(double_adjacency(ic.iterated.quiver) == double_adjacency(lq.quiver));
  }
}

TEST_CASE("iteration consistency on random samples at g=3") {
  std::mt19937_64 rng(20240501);
  const Quiver q = loop_quiver(3);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + int(rng() % 4);
    const std::vector<RepType> taus = enumerate_rep_types(3, n);
    const RepType& tau = taus[rng() % taus.size()];
    const std::vector<RepType> inner = enumerate_types_on(local_quiver(q, tau).dims);
    const RepType& tp = inner[rng() % inner.size()];
    CHECK(check_iteration_consistency(q, tau, tp).consistent);
  }
}

TEST_CASE("iteration consistency validates the inner sum") {
  const Quiver q = loop_quiver(2);
  const RepType tau = parse_tau("1x1,1x1");
  CHECK_THROWS_AS(check_iteration_consistency(q, tau, RepType{{RepPair{2, {1, 1}}}}),
                  std::invalid_argument);
}

TEST_CASE("tau encoding round trip") {
  for (const char* text : {"1x1", "2x1", "1x2,1x1", "3x2,2x2,1x1"})
    CHECK(format_tau(parse_tau(text)) == text);
  CHECK_THROWS_AS(parse_tau(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_tau("2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tau("0x1"), std::invalid_argument);
  // canonical order is restored on parse
  CHECK(format_tau(parse_tau("1x1,1x2")) == "1x2,1x1");
}
