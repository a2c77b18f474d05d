#pragma once

// The ring Z^2 with (a, b)(c, d) = (ac, ad + bc), i.e. 2x2 upper-triangular
// matrices with constant diagonal, and the template with generators
// Z+ x N, coefficients N^2 and ambient monoid N^2.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobring/bitmap.hpp"
#include "frobring/budget.hpp"

namespace frob {

/// Element (a, b) ~ [[a, b], [0, a]].
struct DualNumber {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const DualNumber&, const DualNumber&) = default;
};

DualNumber dual_mul(DualNumber x, DualNumber y) noexcept;

/// Generator (a, b) with a >= 1 and b >= 0.
struct DualGenerator {
  DualGenerator(std::int64_t a, std::int64_t b);

  std::int64_t a;
  std::int64_t b;
  friend bool operator==(const DualGenerator&, const DualGenerator&) = default;
};

struct Point2 {
  std::int64_t t = 0;
  std::int64_t u = 0;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

/// Upward-closed subset of N^2 given by its minimal points, sorted by t.
class Staircase {
 public:
  /// Keeps only the minimal points of `points`.
  static Staircase from_points(std::vector<Point2> points);

  const std::vector<Point2>& corners() const noexcept { return corners_; }
  bool contains(Point2 p) const noexcept;

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  std::vector<Point2> corners_;
};

/// True iff p = sum c_i (a_i, b_i) + sum d_i (0, a_i) with c, d in N.
bool is_member_dual(Point2 p, std::span<const DualGenerator> gens,
                    SearchBudget& budget = SearchBudget::unlimited());

/// gcd of the a_i is 1 and some b_i is 0.
bool frob_nonempty_dual(std::span<const DualGenerator> gens);

/// Two-generator corner (chi, chi + b2 (a1 - 1)) with chi = chi(a1, a2).
/// Throws BadForm unless g1.b == 0, NotCoprime unless gcd(a1, a2) == 1.
Point2 frob_corner_pair(const DualGenerator& g1, const DualGenerator& g2);

/// Decides p + N^2 inside MN(gens) with a finite window: translation by (a*, 0)
/// for a b = 0 generator a* and by (0, s) for s in <a_1..a_n> preserve MN, so
/// it suffices that [t, t + a*) x [u, u + max(chi_a, 1)) is inside MN.
bool frob_membership_dual(Point2 p, std::span<const DualGenerator> gens,
                          SearchBudget& budget = SearchBudget::unlimited());

/// Minimal points of Frob(gens), or nullopt when it is empty.
std::optional<Staircase> frob_staircase(std::span<const DualGenerator> gens,
                                        SearchBudget& budget = SearchBudget::unlimited());

/// Least T with (t, u_row) in MN for every t >= T, or nullopt if no such T.
std::optional<std::int64_t> row_threshold(std::int64_t u_row, std::span<const DualGenerator> gens,
                                          SearchBudget& budget = SearchBudget::unlimited());

}  // namespace frob
