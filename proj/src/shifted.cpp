#include "frobring/shifted.hpp"

#include <numeric>
#include <string>

#include "frobring/error.hpp"

namespace frob {

namespace {
constexpr std::size_t kMaxShiftedGenerators = 20;
}

ShiftedTemplate::ShiftedTemplate(GeneratorList g, std::int64_t s) : gens(std::move(g)), shift(s) {
  if (shift < 1) throw Error(ErrorKind::InvalidArgument, "shift must be >= 1");
  if (gens.size() > kMaxShiftedGenerators) {
    throw Error(ErrorKind::Unsupported, "at most 20 generators are supported");
  }
}

ShiftedSieve::ShiftedSieve(const ShiftedTemplate& t, std::int64_t limit, SearchBudget& budget)
    : limit_(limit), bits_(limit < 0 ? 0 : static_cast<std::size_t>(limit) + 1) {
  if (limit < 0) return;
  bits_.set(0);
  const auto gens = t.gens.values();
  const std::size_t k = gens.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::int64_t> subset;
    std::int64_t base = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        subset.push_back(gens[i]);
        base += gens[i] * t.shift;
      }
    }
    if (base > limit) continue;
    const SemigroupSieve sub(GeneratorList(std::move(subset)), limit - base, budget);
    bits_.shift_or_from(sub.bits(), static_cast<std::size_t>(base));
  }
}

bool ShiftedSieve::contains(std::int64_t x) const noexcept {
  return x >= 0 && x <= limit_ && bits_.test(static_cast<std::size_t>(x));
}

bool is_member_shifted(std::int64_t x, const ShiftedTemplate& t) {
  if (x < 0) return false;
  return ShiftedSieve(t, x).contains(x);
}

std::int64_t shifted_ray_bound(const ShiftedTemplate& t) {
  std::int64_t sum = 0;
  for (std::int64_t g : t.gens.values()) sum += g;
  return sum * t.shift + conductor(t.gens).value;
}

Conductor conductor_shifted(const ShiftedTemplate& t) {
  if (t.shift == 1) return conductor(t.gens);
  // Everything at or above the bound is a member, so the conductor is one past
  // the last gap below it.
  const std::int64_t bound = shifted_ray_bound(t);
  if (bound == 0) return {0};
  const ShiftedSieve sieve(t, bound - 1);
  const auto gap = sieve.bits().last_clear();
  return {gap ? static_cast<std::int64_t>(*gap) + 1 : 0};
}

std::optional<Conductor> conductor_shifted_formula(std::int64_t a, std::int64_t b, std::int64_t shift) {
  if (a < 1 || b < 1 || shift < 1) {
    throw Error(ErrorKind::InvalidArgument, "a, b and shift must all be >= 1");
  }
  if (std::gcd(a, b) != 1) {
    throw Error(ErrorKind::NotCoprime,
                "gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
  const std::int64_t n1 = shift - 1;
  if (n1 % a == 0 || n1 % b == 0) return std::nullopt;
  return Conductor{(a + b) * shift + (a - 1) * (b - 1)};
}

}  // namespace frob
