#include "frobring/dual_ring_real.hpp"

#include <algorithm>
#include <optional>
#include <regex>

#include "frobring/error.hpp"

namespace frob {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(-?[0-9]+(/[0-9]*[1-9][0-9]*)?)");
  if (!std::regex_match(text, pattern)) {
    throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'");
  }
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

DualGenQ::DualGenQ(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
  if (sgn(a) <= 0 || sgn(b) < 0) {
    throw Error(ErrorKind::InvalidArgument, "generator (" + to_string(a) + ", " + to_string(b) +
                                                ") needs a > 0 and b >= 0");
  }
}

QuadrantRegion QuadrantRegion::from_corners(std::vector<QPoint> corners) {
  std::sort(corners.begin(), corners.end(), [](const QPoint& x, const QPoint& y) {
    return x.f != y.f ? x.f < y.f : x.g < y.g;
  });
  QuadrantRegion region;
  for (QPoint& c : corners) {
    if (region.corners_.empty() || c.g < region.corners_.back().g) {
      region.corners_.push_back(std::move(c));
    }
  }
  return region;
}

bool QuadrantRegion::contains(const QPoint& p) const {
  return std::any_of(corners_.begin(), corners_.end(),
                     [&](const QPoint& c) { return c.f <= p.f && c.g <= p.g; });
}

std::string_view to_string(RegionCase c) noexcept {
  switch (c) {
    case RegionCase::NoShear: return "no-shear";
    case RegionCase::Diagonal: return "diagonal";
    case RegionCase::LowShear: return "low-shear";
    case RegionCase::SteepNarrow: return "steep-narrow";
    case RegionCase::ThreeCorners: return "three-corners";
  }
  return "unknown";
}

namespace {

void require_free_first(const DualGenQ& g1) {
  if (sgn(g1.b) != 0) throw Error(ErrorKind::BadForm, "first generator must have b = 0");
}

// Closed interval with optional ends.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  void at_least(const Rational& v) {
    if (!lo || *lo < v) lo = v;
  }
  void at_most(const Rational& v) {
    if (!hi || v < *hi) hi = v;
  }
  void exactly(const Rational& v) {
    at_least(v);
    at_most(v);
  }
  bool empty() const { return lo && hi && *hi < *lo; }
};

}  // namespace

RegionCase classify_region(const DualGenQ& g1, const DualGenQ& g2) {
  require_free_first(g1);
  const Rational& a1 = g1.a;
  const Rational& a2 = g2.a;
  const Rational& b2 = g2.b;
  if (sgn(b2) == 0) return RegionCase::NoShear;
  if (a1 <= a2) return a1 <= b2 ? RegionCase::Diagonal : RegionCase::LowShear;
  return a2 <= b2 ? RegionCase::SteepNarrow : RegionCase::ThreeCorners;
}

bool is_member_dual_real(const QPoint& p, const DualGenQ& g1, const DualGenQ& g2) {
  require_free_first(g1);
  if (sgn(p.f) < 0 || sgn(p.g) < 0) return false;
  const Rational& a1 = g1.a;
  const Rational& a2 = g2.a;
  const Rational& b2 = g2.b;

  for (unsigned pattern = 0; pattern < 16; ++pattern) {
    const bool c1_on = pattern & 1U;
    const bool c2_on = pattern & 2U;
    const bool d1_on = pattern & 4U;
    const bool d2_on = pattern & 8U;

    Interval c2;  // feasible values of c2
    if (c2_on) {
      c2.at_least(1);
    } else {
      c2.exactly(0);
    }
    // f = a1 c1 + a2 c2
    if (c1_on) {
      c2.at_most((p.f - a1) / a2);  // c1 = (f - a2 c2) / a1 >= 1
    } else {
      c2.exactly(p.f / a2);
    }
    // h = g - b2 c2 must equal a1 d1 + a2 d2 for the d pattern:
    // {0}, [a1, inf), [a2, inf) or [a1 + a2, inf).
    const bool d_zero = !d1_on && !d2_on;
    Rational need = 0;
    if (d1_on) need += a1;
    if (d2_on) need += a2;
    if (sgn(b2) == 0) {
      const bool ok = d_zero ? sgn(p.g) == 0 : p.g >= need;
      if (!ok) continue;
    } else if (d_zero) {
      c2.exactly(p.g / b2);
    } else {
      c2.at_most((p.g - need) / b2);
    }
    if (!c2.empty()) return true;
  }
  return false;
}

QuadrantRegion frob_region(const DualGenQ& g1, const DualGenQ& g2) {
  const Rational& a1 = g1.a;
  const Rational& a2 = g2.a;
  const Rational& b2 = g2.b;
  switch (classify_region(g1, g2)) {
    case RegionCase::NoShear: {
      const Rational m = std::min(a1, a2);
      return QuadrantRegion::from_corners({{m, m}});
    }
    case RegionCase::Diagonal:
      return QuadrantRegion::from_corners({{a1, a1}});
    case RegionCase::LowShear:
      return QuadrantRegion::from_corners({{a1, a1}, {a1 * a2 / b2 + a1, b2}});
    case RegionCase::SteepNarrow:
      return QuadrantRegion::from_corners({{a1, a2}, {a2, a1 * b2 / a2 + a2}});
    case RegionCase::ThreeCorners:
      return QuadrantRegion::from_corners(
          {{a1, a2}, {a2, a1 * b2 / a2 + a2}, {a2 * a2 / b2 + a1, b2}});
  }
  throw Error(ErrorKind::InvalidArgument, "unreachable region case");
}

QuadrantRegion frob_region(std::span<const DualGenQ> gens) {
  if (gens.size() != 2) {
    throw Error(ErrorKind::Unsupported,
                "closed form exists only for two generators, got " + std::to_string(gens.size()));
  }
  return frob_region(gens[0], gens[1]);
}

bool subfield_frob_is_quadrant(std::span<const DualGenQ> gens) {
  return std::any_of(gens.begin(), gens.end(), [](const DualGenQ& g) { return sgn(g.b) == 0; });
}

}  // namespace frob
