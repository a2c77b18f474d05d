#pragma once

// Template (N, (n + N) u {0}, N): every coefficient is either 0 or at least the shift n.

#include <cstdint>
#include <optional>

#include "frobring/semigroup.hpp"

namespace frob {

struct ShiftedTemplate {
  ShiftedTemplate(GeneratorList gens, std::int64_t shift);

  GeneratorList gens;
  std::int64_t shift;
};

// Membership table for the shifted monoid over [0, limit]. A value is a member
// iff for some subset S of generators forced nonzero, x - shift * sum(S) lies
// in <S>.
class ShiftedSieve {
 public:
  ShiftedSieve(const ShiftedTemplate& t, std::int64_t limit,
               SearchBudget& budget = SearchBudget::unlimited());

  bool contains(std::int64_t x) const noexcept;
  const BitRow& bits() const noexcept { return bits_; }

 private:
  std::int64_t limit_;
  BitRow bits_;
};

bool is_member_shifted(std::int64_t x, const ShiftedTemplate& t);

// (sum of gens) * shift + chi(gens): every value from here up is a member.
std::int64_t shifted_ray_bound(const ShiftedTemplate& t);

/// Least w with w + N inside the shifted monoid. Throws NotCoprime.
Conductor conductor_shifted(const ShiftedTemplate& t);

/// (a + b) * shift + (a - 1)(b - 1) when shift - 1 is divisible by neither a
/// nor b, otherwise nullopt. shift = 1 always yields nullopt since 0 is
/// divisible by both. Throws NotCoprime, InvalidArgument for a, b, shift < 1.
std::optional<Conductor> conductor_shifted_formula(std::int64_t a, std::int64_t b, std::int64_t shift);

}  // namespace frob
