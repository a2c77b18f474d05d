#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobring/dual_ring.hpp"
#include "frobring/error.hpp"
#include "frobring/semigroup.hpp"
#include "oracles.hpp"

using namespace frob;

namespace {

std::vector<oracle::DualGen> plain(const std::vector<DualGenerator>& gens) {
  std::vector<oracle::DualGen> out;
  for (const auto& g : gens) out.push_back({g.a, g.b});
  return out;
}

std::vector<Point2> pts(std::initializer_list<Point2> p) { return p; }

// Random list with gcd(a) = 1 and at least one b = 0.
std::vector<DualGenerator> random_valid(std::mt19937_64& rng, int max_n, std::int64_t max_a, std::int64_t max_b) {
  for (;;) {
    std::vector<DualGenerator> gens;
    std::vector<std::int64_t> as;
    const int n = static_cast<int>(oracle::uniform(rng, 2, max_n));
    for (int i = 0; i < n; ++i) {
      const auto a = oracle::uniform(rng, 2, max_a);
      const auto b = i == 0 ? 0 : oracle::uniform(rng, 0, max_b);
      gens.emplace_back(a, b);
      as.push_back(a);
    }
    if (oracle::gcd_all(as) == 1) return gens;
  }
}

}  // namespace

TEST_CASE("dual multiplication") {
  CHECK(dual_mul({1, 0}, {5, 7}) == DualNumber{5, 7});
  CHECK(dual_mul({2, 3}, {4, 5}) == DualNumber{8, 22});
  CHECK(dual_mul({0, 1}, {0, 1}) == DualNumber{0, 0});
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const DualNumber x{oracle::uniform(rng, -9, 9), oracle::uniform(rng, -9, 9)};
    const DualNumber y{oracle::uniform(rng, -9, 9), oracle::uniform(rng, -9, 9)};
    const DualNumber z{oracle::uniform(rng, -9, 9), oracle::uniform(rng, -9, 9)};
    CHECK(dual_mul(x, y) == dual_mul(y, x));
    CHECK(dual_mul(dual_mul(x, y), z) == dual_mul(x, dual_mul(y, z)));
    // Matches [[a, b], [0, a]] matrix product.
    CHECK(dual_mul(x, y).b == x.a * y.b + x.b * y.a);
  }
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(DualGenerator(0, 1), Error);
  CHECK_THROWS_AS(DualGenerator(2, -1), Error);
}

TEST_CASE("MN membership examples") {
  const std::vector<DualGenerator> g{{3, 0}, {5, 2}};
  CHECK(is_member_dual({0, 0}, g));
  CHECK_FALSE(is_member_dual({3, 4}, g));
  CHECK(is_member_dual({8, 12}, g));
}

TEST_CASE("MN membership agrees with coefficient enumeration") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<DualGenerator> gens;
    const int n = static_cast<int>(oracle::uniform(rng, 1, 3));
    for (int i = 0; i < n; ++i) gens.emplace_back(oracle::uniform(rng, 1, 7), oracle::uniform(rng, 0, 5));
    const auto og = plain(gens);
    for (std::int64_t t = 0; t < 25; ++t) {
      for (std::int64_t u = 0; u < 25; ++u) {
        REQUIRE(is_member_dual({t, u}, gens) == oracle::member_dual(t, u, og));
      }
    }
  }
}

TEST_CASE("nonemptiness criterion") {
  CHECK(frob_nonempty_dual(std::vector<DualGenerator>{{3, 0}, {5, 2}}));
  CHECK_FALSE(frob_nonempty_dual(std::vector<DualGenerator>{{3, 1}, {5, 2}}));
  CHECK_FALSE(frob_nonempty_dual(std::vector<DualGenerator>{{2, 0}, {4, 0}}));
}

TEST_CASE("two-generator corner") {
  CHECK(frob_corner_pair({3, 0}, {5, 2}) == Point2{8, 12});
  CHECK(frob_corner_pair({1, 0}, {1, 0}) == Point2{0, 0});
  CHECK(frob_corner_pair({2, 0}, {3, 5}) == Point2{2, 7});
  CHECK_THROWS_AS(frob_corner_pair({3, 1}, {5, 2}), Error);
  CHECK_THROWS_AS(frob_corner_pair({2, 0}, {4, 1}), Error);

  const std::vector<oracle::DualGen> og{{3, 0}, {5, 2}};
  CHECK(oracle::dual_box_all(8, 12, og, 20));
  const std::vector<DualGenerator> g{{3, 0}, {5, 2}};
  CHECK_FALSE(frob_membership_dual({7, 12}, g));
  CHECK_FALSE(frob_membership_dual({8, 11}, g));
  CHECK(frob_membership_dual({8, 12}, g));
}

TEST_CASE("Frobenius membership examples") {
  const std::vector<DualGenerator> g{{3, 0}, {5, 2}, {7, 4}};
  CHECK(frob_membership_dual({5, 9}, g));
  CHECK_FALSE(frob_membership_dual({4, 9}, g));
  CHECK(frob_membership_dual({0, 0}, std::vector<DualGenerator>{{1, 0}}));
  CHECK_FALSE(frob_membership_dual({50, 50}, std::vector<DualGenerator>{{3, 1}, {5, 2}}));
}

TEST_CASE("staircase examples") {
  CHECK(frob_staircase(std::vector<DualGenerator>{{3, 0}, {5, 2}, {7, 4}})->corners() == pts({{5, 9}}));
  CHECK(frob_staircase(std::vector<DualGenerator>{{3, 0}, {5, 1}, {7, 4}})->corners() ==
        pts({{5, 9}, {8, 7}}));
  CHECK(frob_staircase(std::vector<DualGenerator>{{3, 0}, {5, 2}})->corners() == pts({{8, 12}}));
  CHECK(frob_staircase(std::vector<DualGenerator>{{1, 0}})->corners() == pts({{0, 0}}));
  CHECK(frob_staircase(std::vector<DualGenerator>{{1, 0}, {4, 9}})->corners() == pts({{0, 0}}));
  CHECK_FALSE(frob_staircase(std::vector<DualGenerator>{{3, 1}, {5, 2}}).has_value());
  CHECK_FALSE(frob_staircase(std::vector<DualGenerator>{{2, 0}, {4, 0}}).has_value());
}

TEST_CASE("row thresholds") {
  const std::vector<DualGenerator> g{{3, 0}, {5, 2}};
  CHECK_FALSE(row_threshold(0, g).has_value());
  CHECK(row_threshold(12, g) == 8);
  CHECK(row_threshold(0, std::vector<DualGenerator>{{1, 0}}) == 0);

  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 25; ++iter) {
    const auto gens = random_valid(rng, 3, 7, 4);
    const auto og = plain(gens);
    for (std::int64_t u = 0; u < 30; u += 3) {
      const auto T = row_threshold(u, gens);
      // Scan far enough that any threshold lies well inside.
      const std::int64_t span = 400;
      std::int64_t last_gap = -1;
      for (std::int64_t t = 0; t < span; ++t) {
        if (!oracle::member_dual(t, u, og)) last_gap = t;
      }
      if (T) {
        REQUIRE(*T < span - 50);
        CHECK(*T == last_gap + 1);
      } else {
        CHECK(last_gap > span - 50);
      }
    }
  }
}

TEST_CASE("window test equals the definitional box check") {
  std::mt19937_64 rng(44);
  for (int iter = 0; iter < 15; ++iter) {
    const auto gens = random_valid(rng, 3, 6, 3);
    const auto og = plain(gens);
    for (int s = 0; s < 8; ++s) {
      const Point2 p{oracle::uniform(rng, 0, 25), oracle::uniform(rng, 0, 25)};
      CHECK(frob_membership_dual(p, gens) == oracle::dual_box_all(p.t, p.u, og, 40));
    }
  }
}

TEST_CASE("staircase invariants") {
  std::mt19937_64 rng(45);
  for (int iter = 0; iter < 40; ++iter) {
    const auto gens = random_valid(rng, 4, 9, 6);
    const auto stairs = frob_staircase(gens);
    REQUIRE(stairs.has_value());
    const auto& cs = stairs->corners();
    REQUIRE_FALSE(cs.empty());

    std::vector<std::int64_t> as, s_all;
    for (const auto& g : gens) {
      as.push_back(g.a);
      s_all.push_back(g.a);
      if (g.b > 0) s_all.push_back(g.b);
    }
    const auto chi_a = conductor(GeneratorList(as)).value;
    const auto chi_s = conductor(GeneratorList(s_all)).value;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      CHECK(is_member_dual(cs[i], gens));
      CHECK(frob_membership_dual(cs[i], gens));
      CHECK(cs[i].t >= chi_a);
      CHECK(cs[i].u >= chi_s);
      if (cs[i].t > 0) CHECK_FALSE(frob_membership_dual({cs[i].t - 1, cs[i].u}, gens));
      if (cs[i].u > 0) CHECK_FALSE(frob_membership_dual({cs[i].t, cs[i].u - 1}, gens));
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (i == j) continue;
        CHECK_FALSE((cs[i].t <= cs[j].t && cs[i].u <= cs[j].u));
      }
      if (i > 0) {
        CHECK(cs[i - 1].t < cs[i].t);
        CHECK(cs[i - 1].u > cs[i].u);
      }
    }

    // Every point in a grid is in the staircase exactly when it passes the window test.
    for (std::int64_t t = 0; t < 60; t += 2) {
      for (std::int64_t u = 0; u < 80; u += 3) {
        REQUIRE(stairs->contains({t, u}) == frob_membership_dual({t, u}, gens));
      }
    }

    // Upward closure.
    const Point2 c = cs.front();
    for (std::int64_t j = 0; j <= 10; ++j) {
      for (std::int64_t k = 0; k <= 10; ++k) CHECK(frob_membership_dual({c.t + j, c.u + k}, gens));
    }

    // Bound from a single b = 0 generator.
    std::int64_t bsum = 0;
    for (const auto& g : gens) bsum += g.b;
    CHECK(frob_membership_dual({chi_a, chi_a + (gens[0].a - 1) * bsum}, gens));
  }
}

TEST_CASE("Staircase::from_points keeps minimal points sorted") {
  const auto s = Staircase::from_points({{8, 7}, {5, 9}, {9, 9}, {5, 10}, {8, 7}});
  CHECK(s.corners() == pts({{5, 9}, {8, 7}}));
  CHECK(s.contains({6, 9}));
  CHECK(s.contains({8, 8}));
  CHECK_FALSE(s.contains({7, 8}));
}

TEST_CASE("budget caps table sizes") {
  SearchBudget tiny(1000);
  CHECK_THROWS_AS(frob_staircase(std::vector<DualGenerator>{{11, 0}, {13, 7}, {17, 5}}, tiny), Error);
}
