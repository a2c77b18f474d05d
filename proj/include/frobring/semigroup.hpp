#pragma once

// Classical numerical-semigroup primitives: the template (N, N, N) in Z.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "frobring/bitmap.hpp"
#include "frobring/budget.hpp"

namespace frob {

/// Positive generators of a numerical semigroup. Stored sorted and without
/// duplicates; neither changes the generated semigroup.
class GeneratorList {
 public:
  /// Throws InvalidArgument when the list is empty or holds a value < 1.
  explicit GeneratorList(std::vector<std::int64_t> gens);
  GeneratorList(std::initializer_list<std::int64_t> gens)
      : GeneratorList(std::vector<std::int64_t>(gens)) {}

  std::span<const std::int64_t> values() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  std::int64_t smallest() const noexcept { return gens_.front(); }
  std::int64_t largest() const noexcept { return gens_.back(); }
  bool contains(std::int64_t g) const noexcept;

  friend bool operator==(const GeneratorList&, const GeneratorList&) = default;

 private:
  std::vector<std::int64_t> gens_;
};

/// Least w with w + N inside the semigroup (the Frobenius number plus one).
struct Conductor {
  std::int64_t value = 0;
  friend auto operator<=>(const Conductor&, const Conductor&) = default;
};

/// The set corner + step * N.
struct UpwardRay {
  std::int64_t corner = 0;
  std::int64_t step = 1;
  friend bool operator==(const UpwardRay&, const UpwardRay&) = default;
};

/// (first, second) + N^2, the product of two rays.
struct ProductRay {
  UpwardRay first;
  UpwardRay second;
  friend bool operator==(const ProductRay&, const ProductRay&) = default;
};

std::int64_t gcd_list(const GeneratorList& gens) noexcept;
std::int64_t gcd_list(std::span<const std::int64_t> values) noexcept;

// Membership table for <gens> over [0, limit].
class SemigroupSieve {
 public:
  SemigroupSieve(const GeneratorList& gens, std::int64_t limit,
                 SearchBudget& budget = SearchBudget::unlimited());

  bool contains(std::int64_t x) const noexcept;
  std::int64_t limit() const noexcept { return limit_; }
  const BitRow& bits() const noexcept { return bits_; }

 private:
  std::int64_t limit_;
  BitRow bits_;
};

bool is_member_numerical(std::int64_t x, const GeneratorList& gens);

/// Least semigroup element in each residue class modulo `modulus` (which must
/// be one of the generators). Throws NotCoprime when gcd(gens) != 1.
std::vector<std::int64_t> apery_set(const GeneratorList& gens, std::int64_t modulus);

/// Conductor via the Apery set of the smallest generator. Throws NotCoprime.
Conductor conductor(const GeneratorList& gens);

// Same value found by scanning the sieve for a run of smallest() members.
Conductor conductor_by_scan(const GeneratorList& gens);

/// Template (2Z, Z, 2Z): 2 * (chi(|g/2|...) + N), encoded with step 2, or
/// nullopt when the halves are not coprime. Throws InvalidArgument for odd or
/// zero generators.
std::optional<UpwardRay> scaled_ideal_frob(std::span<const std::int64_t> gens);

/// Frobenius set of a product template. Throws EmptyFactor if either side is empty.
ProductRay product_frob(const std::optional<UpwardRay>& a, const std::optional<UpwardRay>& b);

}  // namespace frob
