#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "pkgenus/exact_distribution.hpp"
#include "pkgenus/random.hpp"

using namespace pkgenus;

TEST_SUITE("random") {
  TEST_CASE("Philox4x32-10 known answers") {
    using W = std::array<std::uint32_t, 4>;
    CHECK(RandomSource::philox({0, 0, 0, 0}, {0, 0}) == W{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(RandomSource::philox({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          W{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(RandomSource::philox({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          W{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
  }

  TEST_CASE("streams are reproducible and distinct") {
    RandomSource a(42, 3);
    RandomSource b(42, 3);
    RandomSource c = a.split(4);
    RandomSource d(43, 3);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
      const auto x = a();
      CHECK(x == b());
      seen.insert(x);
      seen.insert(c());
      seen.insert(d());
    }
    CHECK(seen.size() == 3000);
    CHECK(c.stream() == 4);
    CHECK(c.seed() == 42);
  }

  TEST_CASE("bounded integers are uniform") {
    RandomSource rng(9);
    std::map<std::uint64_t, int> counts;
    const int draws = 70000;
    for (int i = 0; i < draws; ++i) {
      const auto x = rng.uniform_below(7);
      REQUIRE(x < 7);
      ++counts[x];
    }
    CHECK(uniform_chi_square_p(counts, 7, draws) > 1e-3);
    CHECK(rng.uniform_below(1) == 0);
    const std::uint64_t huge = (std::uint64_t{1} << 63) + 12345;
    for (int i = 0; i < 100; ++i) CHECK(rng.uniform_below(huge) < huge);
  }

  TEST_CASE("big-integer bounds") {
    RandomSource rng(10);
    const mpz_class bound("1000000000000000000000000000001");
    std::map<int, int> top;
    for (int i = 0; i < 4000; ++i) {
      const mpz_class x = rng.uniform_below(bound);
      REQUIRE(x >= 0);
      REQUIRE(x < bound);
      ++top[static_cast<int>(mpz_class(x * 4 / bound).get_si())];
    }
    CHECK(uniform_chi_square_p(top, 4, 4000) > 1e-3);
    CHECK(rng.uniform_below(mpz_class(1)) == 0);
  }

  TEST_CASE("unit interval") {
    RandomSource rng(11);
    double sum = 0;
    for (int i = 0; i < 100000; ++i) {
      const double u = rng.uniform01();
      REQUIRE(u >= 0.0);
      REQUIRE(u < 1.0);
      sum += u;
    }
    CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
  }

  TEST_CASE("exact distributions") {
    const ExactDistribution<char> d({{'a', mpq_class(1, 6)}, {'b', mpq_class(1, 2)}, {'c', mpq_class(1, 3)}});
    CHECK(d.denominator() == 6);
    RandomSource rng(12);
    std::map<char, int> counts;
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) ++counts[d.sample(rng)];
    CHECK(counts['a'] / double(draws) == doctest::Approx(1.0 / 6).epsilon(0.05));
    CHECK(counts['b'] / double(draws) == doctest::Approx(0.5).epsilon(0.05));

    const ExactDistribution<int> zero({{1, mpq_class(0)}, {2, mpq_class(1)}});
    for (int i = 0; i < 100; ++i) CHECK(zero.sample(rng) == 2);

    using V = std::vector<std::pair<int, mpq_class>>;
    CHECK_THROWS_AS(ExactDistribution<int>(V{}), PreconditionError);
    CHECK_THROWS_AS(ExactDistribution<int>(V{{1, mpq_class(1, 2)}}), PreconditionError);
    CHECK_THROWS_AS(ExactDistribution<int>(V{{1, mpq_class(3, 2)}, {2, mpq_class(-1, 2)}}), PreconditionError);

    // Denominator beyond 64 bits takes the big-integer path.
    const mpz_class big("100000000000000000000000000000");
    const ExactDistribution<int> wide({{0, mpq_class(mpz_class(1), big)}, {1, mpq_class(mpz_class(big - 1), big)}});
    for (int i = 0; i < 100; ++i) CHECK(wide.sample(rng) == 1);
  }
}
