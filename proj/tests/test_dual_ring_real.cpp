#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobring/dual_ring_real.hpp"
#include "frobring/error.hpp"
#include "region_protocol.hpp"

using namespace frob;

namespace {

Rational q(const char* s) { return parse_rational(s); }

std::vector<QPoint> qpts(std::initializer_list<std::pair<const char*, const char*>> p) {
  std::vector<QPoint> out;
  for (const auto& [f, g] : p) out.push_back({q(f), q(g)});
  return out;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("-3")) == "-3");
  CHECK(to_string(q("8/2")) == "4");
  CHECK_THROWS_AS(q("1.5"), Error);
  CHECK_THROWS_AS(q("1/0"), Error);
  CHECK_THROWS_AS(q(""), Error);
  CHECK_THROWS_AS(q("1/-2"), Error);
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(DualGenQ(0, 1), Error);
  CHECK_THROWS_AS(DualGenQ(1, -1), Error);
  CHECK_THROWS_AS(is_member_dual_real({1, 1}, DualGenQ(2, 1), DualGenQ(3, 1)), Error);
  CHECK_THROWS_AS(frob_region(DualGenQ(2, 1), DualGenQ(3, 1)), Error);
  const std::vector<DualGenQ> three{{1, 0}, {2, 1}, {3, 1}};
  CHECK_THROWS_AS(frob_region(three), Error);
  try {
    frob_region(three);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}

TEST_CASE("membership examples") {
  const DualGenQ g1(2, 0), g2(3, 1);
  CHECK(is_member_dual_real({0, 0}, g1, g2));
  CHECK(is_member_dual_real({2, 2}, g1, g2));
  CHECK_FALSE(is_member_dual_real({q("5/2"), q("1/2")}, g1, g2));
  CHECK(is_member_dual_real({3, 1}, g1, g2));
  CHECK_FALSE(is_member_dual_real({1, 0}, g1, g2));
  CHECK(is_member_dual_real({q("7/3"), 0}, g1, g2));
}

TEST_CASE("membership matches witnesses built from explicit coefficients") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int iter = 0; iter < 400; ++iter) {
    const DualGenQ g1(region_protocol::random_positive(rng), 0);
    const DualGenQ g2(region_protocol::random_positive(rng), pick(rng) == 0 ? Rational(0)
                                                                               : region_protocol::random_positive(rng));
    // Each coefficient is 0 or at least 1.
    auto coeff = [&]() { return pick(rng) == 0 ? Rational(0) : Rational(1 + region_protocol::random_positive(rng, 9, 5)); };
    const Rational c1 = coeff(), c2 = coeff(), d1 = coeff(), d2 = coeff();
    const QPoint p{g1.a * c1 + g2.a * c2, g1.a * d1 + g2.a * d2 + g2.b * c2};
    CHECK(is_member_dual_real(p, g1, g2));
  }
}

TEST_CASE("region examples") {
  CHECK(frob_region(DualGenQ(2, 0), DualGenQ(3, 4)).corners() == qpts({{"2", "2"}}));
  CHECK(frob_region(DualGenQ(2, 0), DualGenQ(3, 1)).corners() == qpts({{"2", "2"}, {"8", "1"}}));
  CHECK(frob_region(DualGenQ(5, 0), DualGenQ(2, 1)).corners() == qpts({{"2", "9/2"}, {"5", "2"}, {"9", "1"}}));
  CHECK(frob_region(DualGenQ(3, 0), DualGenQ(2, 0)).corners() == qpts({{"2", "2"}}));
}

TEST_CASE("case classification is exhaustive and exclusive") {
  std::mt19937_64 rng(52);
  for (int iter = 0; iter < 2000; ++iter) {
    const Rational a1 = region_protocol::random_positive(rng, 5, 2);
    const Rational a2 = region_protocol::random_positive(rng, 5, 2);
    const Rational b2 = iter % 5 == 0 ? Rational(0) : region_protocol::random_positive(rng, 5, 2);
    const int hits = (b2 == 0) + (b2 > 0 && a1 <= a2 && a1 <= b2) + (b2 > 0 && b2 < a1 && a1 <= a2) +
                     (b2 > 0 && a1 > a2 && a2 <= b2) + (b2 > 0 && b2 < a2 && a2 < a1);
    CHECK(hits == 1);
    const auto c = classify_region(DualGenQ(a1, 0), DualGenQ(a2, b2));
    if (b2 == 0) CHECK(c == RegionCase::NoShear);
    else if (a1 <= a2 && a1 <= b2) CHECK(c == RegionCase::Diagonal);
    else if (a1 <= a2) CHECK(c == RegionCase::LowShear);
    else if (a2 <= b2) CHECK(c == RegionCase::SteepNarrow);
    else CHECK(c == RegionCase::ThreeCorners);
  }
}

TEST_CASE("regions scale with the generators") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 200; ++iter) {
    const Rational a1 = region_protocol::random_positive(rng), a2 = region_protocol::random_positive(rng);
    const Rational b2 = iter % 4 == 0 ? Rational(0) : region_protocol::random_positive(rng);
    const Rational s = region_protocol::random_positive(rng, 9, 7);
    const auto base = frob_region(DualGenQ(a1, 0), DualGenQ(a2, b2)).corners();
    const auto scaled = frob_region(DualGenQ(s * a1, 0), DualGenQ(s * a2, s * b2)).corners();
    REQUIRE(base.size() == scaled.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(scaled[i].f == s * base[i].f);
      CHECK(scaled[i].g == s * base[i].g);
    }
  }
}

TEST_CASE("sampling protocol, a few instances per case") {
  std::mt19937_64 rng(54);
  for (RegionCase c : {RegionCase::NoShear, RegionCase::Diagonal, RegionCase::LowShear, RegionCase::SteepNarrow,
                       RegionCase::ThreeCorners}) {
    for (int i = 0; i < 3; ++i) {
      const auto in = region_protocol::random_instance(rng, c);
      REQUIRE(classify_region(DualGenQ(in.a1, 0), DualGenQ(in.a2, in.b2)) == c);
      const auto msg = region_protocol::check_instance(in, rng);
      CHECK_MESSAGE(msg.empty(), msg);
    }
  }
}

TEST_CASE("subfield predicate") {
  const std::vector<DualGenQ> with_zero{{2, 0}, {3, 1}};
  const std::vector<DualGenQ> without{{2, 1}, {3, 1}};
  CHECK(subfield_frob_is_quadrant(with_zero));
  CHECK_FALSE(subfield_frob_is_quadrant(without));
}

TEST_CASE("QuadrantRegion keeps the antichain") {
  const auto r = QuadrantRegion::from_corners(qpts({{"8", "1"}, {"2", "2"}, {"9", "3"}}));
  CHECK(r.corners() == qpts({{"2", "2"}, {"8", "1"}}));
  CHECK(r.contains({q("5/2"), 2}));
  CHECK_FALSE(r.contains({q("7"), q("3/2")}));
}

TEST_CASE("failing-point search finds gaps only outside the region") {
  const region_protocol::Instance in{2, 3, 1};
  const DualGenQ g1(in.a1, 0), g2(in.a2, in.b2);
  const auto crit = region_protocol::critical_values(in);
  const Rational K = 20, eps(1, 1000);
  CHECK_FALSE(region_protocol::has_failing_point({2, 2}, g1, g2, K, eps, crit));
  CHECK_FALSE(region_protocol::has_failing_point({8, 1}, g1, g2, K, eps, crit));
  CHECK(region_protocol::has_failing_point({q("15/2"), 1}, g1, g2, K, eps, crit));
  CHECK(region_protocol::has_failing_point({2, q("3/2")}, g1, g2, K, eps, crit));
  CHECK(region_protocol::has_failing_point({q("3/2"), 5}, g1, g2, K, eps, crit));
}
