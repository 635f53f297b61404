#include <doctest.h>

#include <map>

#include "qmm/errors.hpp"
#include "qmm/polysys.hpp"

using namespace qmm;

namespace {

// sum over vertices of the traces of order-k equations; the jet system
// lists equations as (order, vertex, row, col) nested
Poly trace_sum(const PolySystem& ps, int order) {
  PolyBuilder pb;
  size_t eq = 0;
  for (int k = 0; k <= ps.jet_order; ++k)
    for (int i = 0; i < ps.quiver.vertex_count; ++i)
      for (int r = 0; r < ps.dims[i]; ++r)
        for (int c = 0; c < ps.dims[i]; ++c) {
          if (k == order && r == c)
            for (const Term& t : ps.equations[eq]) pb.add(t.coef, t.vars);
          ++eq;
        }
  return pb.take();
}

}  // namespace

TEST_CASE("scalar moment equation cancels identically") {
  const PolySystem ps = moment_system(loop_quiver(1), {1});
  REQUIRE(ps.equations.size() == 1);
  CHECK(ps.equations[0].empty());
  CHECK(ps.variables.size() == 2);
}

TEST_CASE("moment system shape for two loops at n=2") {
  const PolySystem ps = moment_system(loop_quiver(2), {2});
  REQUIRE(ps.equations.size() == 4);
  CHECK(ps.variables.size() == 16);

  // every monomial pairs one forward with one reverse variable, +-1
  for (const Poly& eq : ps.equations)
    for (const Term& t : eq) {
      REQUIRE(t.vars.size() == 2);
      CHECK((t.coef == 1 || t.coef == -1));
      CHECK(ps.variables[t.vars[0]].dir != ps.variables[t.vars[1]].dir);
    }

  // off-diagonal entries keep all 8 expansion terms; the diagonal ones
  // lose the two commuting pairs
  CHECK(ps.equations[0].size() == 4);   // (0,0)
  CHECK(ps.equations[1].size() == 8);   // (0,1)
  CHECK(ps.equations[2].size() == 8);   // (1,0)
  CHECK(ps.equations[3].size() == 4);   // (1,1)

  CHECK(trace_sum(ps, 0).empty());
}

TEST_CASE("moment system on a two-vertex quiver") {
  Quiver q;
  q.vertex_count = 2;
  q.arrows = {{0, 1}};
  const PolySystem ps = moment_system(q, {2, 3});
  CHECK(ps.variables.size() == 12);
  CHECK(ps.equations.size() == 4 + 9);
  CHECK(trace_sum(ps, 0).empty());
}

TEST_CASE("jet system at order zero equals the moment system") {
  for (int g : {1, 2})
    for (int n : {1, 2, 3})
      CHECK(jet_system(loop_quiver(g), {n}, 0) == moment_system(loop_quiver(g), {n}));
}

TEST_CASE("jet system shape and grading") {
  const PolySystem ps = jet_system(loop_quiver(2), {2}, 2);
  CHECK(ps.variables.size() == (2 + 1) * 2 * 2 * 4);   // (m+1) * 2g * n^2
  CHECK(ps.equations.size() == (2 + 1) * 4);           // (m+1) * n^2

  // the jet orders inside an order-k equation sum to k
  size_t eq = 0;
  for (int k = 0; k <= 2; ++k)
    for (int entry = 0; entry < 4; ++entry, ++eq)
      for (const Term& t : ps.equations[eq])
        CHECK(ps.variables[t.vars[0]].jet + ps.variables[t.vars[1]].jet == k);

  // order 2 mixes the middle orders: some monomial uses jet 1 twice
  bool has_middle = false;
  for (size_t e = 8; e < 12; ++e)
    for (const Term& t : ps.equations[e])
      if (ps.variables[t.vars[0]].jet == 1 && ps.variables[t.vars[1]].jet == 1)
        has_middle = true;
  CHECK(has_middle);

  for (int k = 0; k <= 2; ++k) CHECK(trace_sum(ps, k).empty());
}

TEST_CASE("scalar jets cancel at every order") {
  const PolySystem ps = jet_system(loop_quiver(1), {1}, 1);
  REQUIRE(ps.equations.size() == 2);
  CHECK(ps.equations[0].empty());
  CHECK(ps.equations[1].empty());
}

TEST_CASE("multiplicative system shapes") {
  const std::vector<std::vector<int64_t>> id1{{1}};
  const PolySystem tiny = multiplicative_system(1, 1, MatrixGroupKind::special_linear, id1);
  // 4 inverse equations + 2 determinant equations + 1 relation equation
  CHECK(tiny.equations.size() == 7);
  CHECK(tiny.variables.size() == 4);

  const std::vector<std::vector<int64_t>> id2{{1, 0}, {0, 1}};
  const PolySystem ps = multiplicative_system(2, 2, MatrixGroupKind::special_linear, id2);
  CHECK(ps.variables.size() == 4 * 2 * 4);
  CHECK(ps.equations.size() == 4 * 2 * 4 + 2 * 2 + 4);

  // relation equations close the list and have degree 4g
  size_t max_deg = 0;
  for (size_t e = ps.equations.size() - 4; e < ps.equations.size(); ++e)
    for (const Term& t : ps.equations[e]) max_deg = std::max(max_deg, t.vars.size());
  CHECK(max_deg == 8);

  // gl variant drops the determinant equations
  const PolySystem gl = multiplicative_system(2, 2, MatrixGroupKind::general_linear, id2);
  CHECK(gl.equations.size() == 4 * 2 * 4 + 4);

  CHECK_THROWS_AS(multiplicative_system(2, 2, MatrixGroupKind::special_linear, {{1}}),
                  std::invalid_argument);
}

TEST_CASE("export of the scalar moment system") {
  const std::string text = render_system(moment_system(loop_quiver(1), {1}));
  CHECK(text ==
        "quiver r=1 arrows=0>0\n"
        "dims=1\n"
        "jetorder=0\n"
        "vars=2\n"
        "v 0 a0 f 0 0 j0\n"
        "v 1 a0 r 0 0 j0\n"
        "e 0\n");
}

TEST_CASE("export declares the full jet variable count") {
  const PolySystem ps = jet_system(loop_quiver(2), {2}, 1);
  const std::string text = render_system(ps);
  CHECK(text.find("vars=" + std::to_string(2 * (1 + 1) * 2 * 4)) != std::string::npos);
}

TEST_CASE("export round trip") {
  const std::vector<std::vector<int64_t>> id2{{1, 0}, {0, 1}};
  for (const PolySystem& ps :
       {moment_system(loop_quiver(2), {2}), jet_system(loop_quiver(2), {2}, 1),
        jet_system(loop_quiver(1), {2}, 2),
        multiplicative_system(1, 2, MatrixGroupKind::special_linear, id2)}) {
    CHECK(parse_system_text(render_system(ps)) == ps);
    // byte-stable across renders
    CHECK(render_system(ps) == render_system(parse_system_text(render_system(ps))));
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_system_text("nonsense\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_system_text("quiver r=1 arrows=0>0\ndims=1\n"), std::runtime_error);
}
