#pragma once

// Templates in Z[sqrt m] for a positive non-square m.

#include <cstdint>
#include <optional>
#include <span>

#include "frobring/budget.hpp"

namespace frob {

/// x + y sqrt(m).
class QuadraticInt {
 public:
  /// Throws InvalidArgument when m < 2 or m is a perfect square.
  QuadraticInt(std::int64_t x, std::int64_t y, std::int64_t m);

  std::int64_t x() const noexcept { return x_; }
  std::int64_t y() const noexcept { return y_; }
  std::int64_t m() const noexcept { return m_; }

  // Arithmetic throws MixedM when the radicands differ.
  friend QuadraticInt operator+(const QuadraticInt& p, const QuadraticInt& q);
  friend QuadraticInt operator-(const QuadraticInt& p, const QuadraticInt& q);
  friend QuadraticInt operator*(const QuadraticInt& p, const QuadraticInt& q);
  friend bool operator==(const QuadraticInt&, const QuadraticInt&) = default;

 private:
  std::int64_t x_;
  std::int64_t y_;
  std::int64_t m_;
};

/// corner + N[sqrt m].
struct QuadraticCorner {
  QuadraticInt corner;
  friend bool operator==(const QuadraticCorner&, const QuadraticCorner&) = default;
};

bool is_perfect_square(std::int64_t n) noexcept;

// The ideal generated by alphas, as a Z-lattice in the basis (1, sqrt m), in
// lower-triangular normal form: basis columns (first, mixed) and (0, second),
// with first, second >= 0 and 0 <= mixed < second when second > 0.
struct IdealLattice {
  std::int64_t first = 0;
  std::int64_t mixed = 0;
  std::int64_t second = 0;

  // Index in Z^2; 0 when the lattice is not of full rank.
  std::int64_t index() const noexcept { return first * second; }
  bool contains(std::int64_t x, std::int64_t y) const noexcept;
};

/// Normal form of the lattice spanned by every alpha and sqrt(m) * alpha.
/// Throws MixedM, InvalidArgument for an empty list.
IdealLattice ideal_lattice(std::span<const QuadraticInt> alphas);

/// 1 lies in the ideal generated by alphas.
bool spans_unity(std::span<const QuadraticInt> alphas);

/// Nonemptiness in (N[sqrt m], N[sqrt m], N[sqrt m]): spans unity and some
/// coordinate is zero. Throws InvalidArgument for negative coordinates.
bool looper_nonempty(std::span<const QuadraticInt> alphas);

/// List (a_1..a_r, b_1 sqrt m..b_s sqrt m): corner
/// chi(a, b m) + chi(a, b) sqrt m, or nullopt unless a, b m are coprime.
std::optional<QuadraticCorner> frob_corner_axis_list(std::span<const std::int64_t> as,
                                                     std::span<const std::int64_t> bs,
                                                     std::int64_t m);

/// Two generators with abcd = 0 spanning unity: (alpha - 1)(beta - 1)(1 + sqrt m).
/// nullopt when either hypothesis fails.
std::optional<QuadraticCorner> frob_corner_pair_sqrt(const QuadraticInt& alpha, const QuadraticInt& beta);

/// target = sum lambda_i alpha_i with lambda_i = p_i + q_i sqrt m and
/// 0 <= p_i, q_i <= coeff_bound. A false answer only means "not within the
/// bound"; bounds at or above both target coordinates make it exact.
bool is_member_nsqrtm(const QuadraticInt& target, std::span<const QuadraticInt> alphas,
                      std::int64_t coeff_bound, SearchBudget& budget = SearchBudget::unlimited());

}  // namespace frob
