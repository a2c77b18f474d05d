#pragma once

// The dual-number template over the reals with every scalar coefficient in
// {0} u [1, inf), evaluated exactly on rational inputs.

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace frob {

using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q"; throws InvalidArgument otherwise. The result is canonical.
Rational parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

struct QPoint {
  Rational f;
  Rational g;
  friend bool operator==(const QPoint&, const QPoint&) = default;
};

/// Generator (a, b) with a > 0 and b >= 0.
struct DualGenQ {
  DualGenQ(Rational a, Rational b);

  Rational a;
  Rational b;
};

/// Finite union of closed quadrants corner + [0, inf)^2, kept as the sorted
/// antichain of minimal corners (ascending f).
class QuadrantRegion {
 public:
  static QuadrantRegion from_corners(std::vector<QPoint> corners);

  const std::vector<QPoint>& corners() const noexcept { return corners_; }
  bool contains(const QPoint& p) const;

  friend bool operator==(const QuadrantRegion&, const QuadrantRegion&) = default;

 private:
  std::vector<QPoint> corners_;
};

// Which closed form applies to alpha1 = (a1, 0), alpha2 = (a2, b2).
enum class RegionCase {
  NoShear,       // b2 = 0
  Diagonal,      // a1 <= a2 and a1 <= b2
  LowShear,      // b2 < a1 <= a2
  SteepNarrow,   // a1 > a2 and a2 <= b2
  ThreeCorners,  // b2 < a2 < a1
};

std::string_view to_string(RegionCase c) noexcept;

RegionCase classify_region(const DualGenQ& g1, const DualGenQ& g2);

/// Exact membership of p in MN(g1, g2) with c1, c2, d1, d2 in {0} u [1, inf).
/// Each of the 16 zero/nonzero patterns pins c1 and (d1, d2) as functions of
/// c2, turning feasibility into an intersection of closed rational intervals.
/// Throws BadForm unless g1.b == 0.
bool is_member_dual_real(const QPoint& p, const DualGenQ& g1, const DualGenQ& g2);

/// Frob(g1, g2) in closed form. Throws BadForm unless g1.b == 0.
QuadrantRegion frob_region(const DualGenQ& g1, const DualGenQ& g2);

// List form; only pairs are supported (Unsupported otherwise).
QuadrantRegion frob_region(std::span<const DualGenQ> gens);

// With coefficients drawn from a whole subfield (no [1, inf) restriction), a
// list with some b_i = 0 has Frob = MN = the full quadrant: take c = f / a_i,
// d = g / a_i on that generator. Returns whether that holds for `gens`.
bool subfield_frob_is_quadrant(std::span<const DualGenQ> gens);

}  // namespace frob
