#include <doctest.h>

#include "helpers.hpp"
#include "pkgenus/enumerate.hpp"
#include "pkgenus/errors.hpp"
#include "pkgenus/io.hpp"
#include "pkgenus/sampler.hpp"
#include "pkgenus/unicellular.hpp"

using namespace pkgenus;

namespace {

// Calls visit(tuple) for every increasing tuple of `k` entries of `items`.
template <class T, class F>
void for_each_tuple(const std::vector<T>& items, int k, F visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  const int n = static_cast<int>(items.size());
  if (k > n) return;
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<T> pick;
    for (int i : idx) pick.push_back(items[static_cast<std::size_t>(i)]);
    visit(pick);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

TEST_SUITE("unicellular") {
  TEST_CASE("matching to map and back") {
    for (int n = 0; n <= 6; ++n) {
      for_each_matching(n, [&](const Diagram& d) {
        const UnicellularMap m = matching_to_unicellular(d);
        CHECK(m.edges() == n);
        CHECK(m.genus() == genus_of_matching(d).genus);
        CHECK(m.vertex_count() == n + 1 - 2 * m.genus());
        CHECK(static_cast<int>(m.vertices().size()) == m.vertex_count());
        CHECK(unicellular_to_matching(m) == d);
        CHECK(m.canonical() == m);
        if (n > 0) CHECK(trace_boundaries(m.fatgraph()).count() == 1);
      });
    }
  }

  TEST_CASE("tour order starts at the root") {
    const UnicellularMap m = matching_to_unicellular(parse_diagram("6 | (1,4)(2,5)(3,6)"));
    CHECK(m.root() == 5);
    const TourOrder t = tour(m);
    CHECK(t.rank[5] == 0);
    for (int h = 0; h < 5; ++h) CHECK(t.rank[static_cast<std::size_t>(h)] == h + 1);
    CHECK(m.precedes(5, 0));
  }

  TEST_CASE("constructor rejects non-unicellular input") {
    CHECK_THROWS_AS(UnicellularMap({1, 0}, {1, 0}, 0), StructuralError);  // two faces
    CHECK_THROWS_AS(UnicellularMap({1, 0}, {0, 1}, 0), StructuralError);  // alpha has fixed points
    CHECK_THROWS_AS(UnicellularMap({0, 1}, {1, 0}, 2), StructuralError);  // root out of range
    CHECK_NOTHROW(UnicellularMap({0, 1}, {1, 0}, 0));
  }

  TEST_CASE("partner-table factory agrees with the general constructor") {
    for (int n = 0; n <= 5; ++n) {
      for_each_matching(n, [&](const Diagram& d) {
        const std::vector<int> p = d.partners();
        const int size = 2 * n;
        if (size == 0) return;
        std::vector<int> sigma(static_cast<std::size_t>(size));
        for (int h = 0; h < size; ++h) sigma[static_cast<std::size_t>(h)] = p[static_cast<std::size_t>((h + 1) % size)];
        const UnicellularMap general(sigma, p, size - 1);
        const UnicellularMap fast = UnicellularMap::from_partners(p);
        CHECK(fast == general);
        CHECK(fast.vertex_count() == general.vertex_count());
        for (int h = 0; h < size; ++h) {
          CHECK(fast.sigma_inverse(h) == general.sigma_inverse(h));
          CHECK(fast.rank(h) == general.rank(h));
        }
      });
    }
    CHECK_THROWS_AS(UnicellularMap::from_partners({1, 0, 2}), StructuralError);
    CHECK_THROWS_AS(UnicellularMap::from_partners({1, 2, 0, 3}), StructuralError);
    CHECK(UnicellularMap::from_partners({}).half_edges() == 0);
  }

  TEST_CASE("trisection count is twice the genus") {
    for (int n = 1; n <= 6; ++n) {
      for_each_matching(n, [&](const Diagram& d) {
        const UnicellularMap m = matching_to_unicellular(d);
        const auto ts = find_trisections(m);
        CHECK(static_cast<int>(ts.size()) == 2 * m.genus());
        for (const Trisection& t : ts) {
          CHECK(is_trisection(m, t.half_edge));
          CHECK(m.vertex_of(t.half_edge) == t.vertex);
        }
      });
    }
  }

  TEST_CASE("slicing then gluing is the identity") {
    int type_one = 0;
    int type_two = 0;
    for (int n = 2; n <= 5; ++n) {
      for_each_matching(n, [&](const Diagram& d) {
        const UnicellularMap m = matching_to_unicellular(d);
        for (const Trisection& t : find_trisections(m)) {
          const SliceResult s = slice_xi(m, t);
          const int k = (static_cast<int>(s.vertices.size()) - 1) / 2;
          CHECK(s.map.genus() == m.genus() - k);
          for (std::size_t i = 1; i < s.vertices.size(); ++i) {
            CHECK(s.map.precedes(s.vertices[i - 1].min_half_edge, s.vertices[i].min_half_edge));
          }
          const GlueResult g = glue_lambda(s.map, s.vertices);
          CHECK(g.map == m);
          CHECK(g.trisection.half_edge == t.half_edge);
          (classify_trisection_type(m, t) == TrisectionType::I ? type_one : type_two) += 1;
        }
      });
    }
    CHECK(type_one > 0);
    CHECK(type_two > 0);
  }

  TEST_CASE("gluing then slicing is the identity") {
    int checked = 0;
    for (int n = 0; n <= 4; ++n) {
      for_each_matching(n, [&](const Diagram& d) {
        const UnicellularMap m = matching_to_unicellular(d);
        for (int k = 1; 2 * k + 1 <= m.vertex_count(); ++k) {
          for_each_tuple(m.vertices(), 2 * k + 1, [&](const std::vector<VertexHandle>& vs) {
            const GlueResult g = glue_lambda(m, vs);
            CHECK(g.map.genus() == m.genus() + k);
            CHECK(static_cast<int>(find_trisections(g.map).size()) == 2 * g.map.genus());
            CHECK(is_trisection(g.map, g.trisection.half_edge));
            const SliceResult s = slice_xi(g.map, g.trisection);
            CHECK(s.map == m);
            CHECK(s.vertices == vs);
            ++checked;
          });
        }
      });
    }
    CHECK(checked > 100);
  }

  TEST_CASE("phi and psi types") {
    const UnicellularMap path = matching_to_unicellular(parse_diagram("8 | (1,8)(2,7)(3,6)(4,5)"));
    const auto vs = path.vertices();
    REQUIRE(vs.size() == 5);
    const GlueResult phi = glue_phi(path, vs[2], vs[3], vs[4]);
    CHECK(classify_trisection_type(phi.map, phi.trisection) == TrisectionType::I);
    const GlueResult psi = glue_psi(phi.map, vs[0], vs[1], phi.trisection);
    CHECK(psi.map.genus() == 2);
    CHECK(classify_trisection_type(psi.map, psi.trisection) == TrisectionType::II);
    CHECK(glue_lambda(path, vs).map == psi.map);
    CHECK_THROWS(glue_psi(phi.map, vs[3], vs[0], phi.trisection));
  }

  TEST_CASE("random slice/glue round trips at larger sizes") {
    RandomSource rng(2024);
    for (int i = 0; i < 300; ++i) {
      const int n = 2 + static_cast<int>(rng.uniform_below(49));
      const int g = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n / 2)));
      const UnicellularMap m = matching_to_unicellular(uniform_matching(n, g, rng));
      const auto ts = find_trisections(m);
      REQUIRE(static_cast<int>(ts.size()) == 2 * g);
      const Trisection& t = ts[rng.uniform_below(ts.size())];
      const SliceResult s = slice_xi(m, t);
      CHECK(glue_lambda(s.map, s.vertices).map == m);
    }
  }
}
