#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pkgenus/errors.hpp"
#include "pkgenus/io.hpp"
#include "pkgenus/random.hpp"

using namespace pkgenus;

namespace {

Diagram random_diagram(int length, RandomSource& rng) {
  std::vector<int> free;
  for (int i = 0; i < length; ++i) {
    if (rng.uniform_below(3) != 0) free.push_back(i);
  }
  for (std::size_t i = free.size(); i > 1; --i) std::swap(free[i - 1], free[rng.uniform_below(i)]);
  std::vector<int> partner(static_cast<std::size_t>(length), -1);
  for (std::size_t i = 0; i + 1 < free.size(); i += 2) {
    partner[static_cast<std::size_t>(free[i])] = free[i + 1];
    partner[static_cast<std::size_t>(free[i + 1])] = free[i];
  }
  return Diagram::from_partners(partner);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("arc-list text") {
    const Diagram d(6, {{1, 4}, {2, 5}, {3, 6}});
    CHECK(format_diagram(d) == "6 | (1,4)(2,5)(3,6)");
    CHECK(format_diagram(Diagram(5, {})) == "5 |");
    CHECK(parse_diagram("6 | (1,4)(2,5)(3,6)") == d);
    CHECK(parse_diagram("  6|(3,6) (1,4)\t(2,5)  ") == d);
    CHECK(parse_diagram("5 |") == Diagram(5, {}));
    CHECK(parse_diagram("0 |") == Diagram());
  }

  TEST_CASE("annotations") {
    DiagramRecord r{Diagram(4, {{1, 3}, {2, 4}}), 1, 2, {}, {}};
    CHECK(format_record(r) == "4 | (1,3)(2,4) # genus=1 boundaries=2");
    const DiagramRecord back = parse_record(format_record(r));
    CHECK(back.diagram == r.diagram);
    CHECK(back.genus == 1);
    CHECK(back.boundaries == 2);
    CHECK(parse_record("4 | (1,3)(2,4) # note=x").genus == std::nullopt);
  }

  TEST_CASE("text round trip on random diagrams") {
    RandomSource rng(1);
    for (int i = 0; i < 200; ++i) {
      const int length = static_cast<int>(rng.uniform_below(10001));
      const Diagram d = random_diagram(length, rng);
      REQUIRE(parse_diagram(format_diagram(d)) == d);
    }
  }

  TEST_CASE("JSON round trip") {
    RandomSource rng(2);
    for (int i = 0; i < 100; ++i) {
      DiagramRecord r{random_diagram(static_cast<int>(rng.uniform_below(300)), rng), 3, {}, 17u, 99u};
      const DiagramRecord back = from_json(to_json(r));
      CHECK(back.diagram == r.diagram);
      CHECK(back.genus == 3);
      CHECK(back.index == 17u);
      CHECK(back.seed == 99u);
    }
    CHECK(to_json(DiagramRecord{Diagram(4, {{1, 3}, {2, 4}}), 1, {}, 0u, 7u}) ==
          R"({"index":0,"seed":7,"length":4,"arcs":[[1,3],[2,4]],"genus":1})");
  }

  TEST_CASE("parse errors carry line numbers") {
    std::istringstream in("4 | (1,3)(2,4)\n\n# comment\n4 | (1,3)(3,4)\n");
    try {
      read_records(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_diagram("4 (1,3)"), ParseError);
    CHECK_THROWS_AS(parse_diagram("4 | (1,3"), ParseError);
    CHECK_THROWS_AS(parse_diagram("4 | (1,x)"), ParseError);
    CHECK_THROWS_AS(parse_diagram("4 | (1,5)"), ParseError);
    CHECK_THROWS_AS(parse_diagram("-4 |"), ParseError);
    CHECK_THROWS_AS(from_json("{\"length\": 4}", 9), ParseError);
    CHECK_THROWS_AS(from_json("{\"length\": 4, \"arcs\": [[1,2,3]]}"), ParseError);

    std::istringstream mixed("{\"length\":4,\"arcs\":[[1,3],[2,4]]}\n4 | (1,3)(2,4)\n");
    const auto rs = read_records(mixed);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].diagram == rs[1].diagram);
  }

  TEST_CASE("parameter files") {
    std::istringstream in("# weights\nb = 0.1\nLhp=-0.2  # hairpins\n\nLint = 5e-2\nLmul = -0.1\nLpk1 = 0.3\n");
    const EnergyParams p = parse_params(in);
    CHECK(p.arc == 0.1);
    CHECK(p.hairpin == -0.2);
    CHECK(p.interior == 0.05);
    CHECK(p.multi == -0.1);
    CHECK(p.pseudoknot == 0.3);

    std::istringstream again(format_params(p));
    CHECK(parse_params(again) == p);

    std::istringstream partial("Lpk1 = 2\n");
    CHECK(parse_params(partial) == EnergyParams{0, 0, 0, 0, 2});

    auto fails_on = [](const char* text, int line) {
      std::istringstream s(text);
      try {
        parse_params(s);
      } catch (const ParseError& e) {
        return e.line() == line;
      }
      return false;
    };
    CHECK(fails_on("b = 1\nLfoo = 2\n", 2));
    CHECK(fails_on("b = 1\nb = 2\n", 2));
    CHECK(fails_on("b = nan\n", 1));
    CHECK(fails_on("b = inf\n", 1));
    CHECK(fails_on("b = 1.5x\n", 1));
    CHECK(fails_on("b 1.5\n", 1));
    CHECK(fails_on("b =\n", 1));
    CHECK_THROWS_AS(load_params("/nonexistent/params.cfg"), ParseError);
  }
}
