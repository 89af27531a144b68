#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pkgenus/errors.hpp"
#include "pkgenus/fatgraph.hpp"
#include "pkgenus/permutation.hpp"

using namespace pkgenus;

TEST_SUITE("permutation") {
  TEST_CASE("construction validates bijections") {
    CHECK_NOTHROW(Permutation({2, 0, 1}));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), StructuralError);
    CHECK_THROWS_AS(Permutation({0, 3}), StructuralError);
    CHECK_THROWS_AS(Permutation({-1, 0}), StructuralError);
    CHECK(Permutation::identity(4).cycle_count() == 4);
    CHECK(Permutation().size() == 0);
  }

  TEST_CASE("composition applies the inner permutation first") {
    const Permutation a({1, 2, 0});  // 0->1->2->0
    const Permutation b({1, 0, 2});  // swaps 0 and 1
    const Permutation ab = compose(a, b);
    for (int x = 0; x < 3; ++x) CHECK(ab(x) == a(b(x)));
    CHECK(ab != compose(b, a));
    CHECK_THROWS_AS(compose(a, Permutation::identity(2)), StructuralError);
  }

  TEST_CASE("cycles start at their smallest point") {
    const Permutation p = Permutation::from_cycles(7, {{4, 2, 6}, {1, 3}});
    const auto cs = p.cycles();
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == std::vector<int>{0});
    CHECK(cs[1] == std::vector<int>{1, 3});
    CHECK(cs[2] == std::vector<int>{2, 6, 4});
    CHECK(cs[3] == std::vector<int>{5});
    CHECK(p.cycle_count() == 4);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), StructuralError);
  }

  TEST_CASE("inverse and involutions") {
    std::mt19937 gen(1);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> img(20);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), gen);
      const Permutation p(img);
      CHECK(compose(p, p.inverse()) == Permutation::identity(20));
      CHECK(compose(p.inverse(), p) == Permutation::identity(20));
    }
    CHECK(Permutation({1, 0, 3, 2}).is_fixed_point_free_involution());
    CHECK_FALSE(Permutation({1, 0, 2}).is_fixed_point_free_involution());
    CHECK_FALSE(Permutation({1, 2, 0}).is_fixed_point_free_involution());
  }
}

TEST_SUITE("permutation") {
  TEST_CASE("fatgraph genus from the Euler characteristic") {
    // One vertex with two crossing loops: the torus.
    const Fatgraph torus(Permutation({1, 2, 3, 0}), Permutation({2, 3, 0, 1}));
    const GenusResult t = genus_of(torus);
    CHECK(t.genus == 1);
    CHECK(t.boundary_count == 1);
    CHECK(t.euler == 0);

    // A single edge between two vertices: the sphere with one boundary.
    const Fatgraph edge(Permutation::identity(2), Permutation({1, 0}));
    CHECK(genus_of(edge) == GenusResult{0, 1, 2});

    CHECK_THROWS_AS(Fatgraph(Permutation::identity(2), Permutation::identity(2)), StructuralError);
    CHECK_THROWS_AS(Fatgraph(Permutation::identity(3), Permutation({1, 0})), StructuralError);
  }

  TEST_CASE("duality swaps vertices and boundary components") {
    const Fatgraph g(Permutation({1, 2, 3, 4, 5, 0}), Permutation({3, 4, 5, 0, 1, 2}));
    const Fatgraph d = g.dual();
    CHECK(d.vertices() == trace_boundaries(g).count());
    CHECK(trace_boundaries(d).count() == g.vertices());
    CHECK(genus_of(d).genus == genus_of(g).genus);
    for (const auto& c : trace_boundaries(g).cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(g.gamma()(c[i]) == c[(i + 1) % c.size()]);
    }
  }
}
