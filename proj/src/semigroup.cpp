#include "frobring/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "frobring/error.hpp"

namespace frob {

GeneratorList::GeneratorList(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw Error(ErrorKind::InvalidArgument, "generator list is empty");
  for (std::int64_t g : gens_) {
    if (g < 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "generators must be >= 1, got " + std::to_string(g));
    }
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

bool GeneratorList::contains(std::int64_t g) const noexcept {
  return std::binary_search(gens_.begin(), gens_.end(), g);
}

std::int64_t gcd_list(std::span<const std::int64_t> values) noexcept {
  std::int64_t g = 0;
  for (std::int64_t v : values) g = std::gcd(g, v);
  return g;
}

std::int64_t gcd_list(const GeneratorList& gens) noexcept { return gcd_list(gens.values()); }

SemigroupSieve::SemigroupSieve(const GeneratorList& gens, std::int64_t limit, SearchBudget& budget)
    : limit_(limit), bits_(limit < 0 ? 0 : static_cast<std::size_t>(limit) + 1) {
  if (limit < 0) return;
  budget.charge(static_cast<std::uint64_t>(limit) + 1);
  bits_.set(0);
  for (std::int64_t g : gens.values()) {
    if (g > limit) break;
    bits_.close_under(static_cast<std::size_t>(g));
  }
}

bool SemigroupSieve::contains(std::int64_t x) const noexcept {
  return x >= 0 && x <= limit_ && bits_.test(static_cast<std::size_t>(x));
}

bool is_member_numerical(std::int64_t x, const GeneratorList& gens) {
  if (x < 0) return false;
  if (x == 0) return true;
  return SemigroupSieve(gens, x).contains(x);
}

namespace {

void require_coprime(const GeneratorList& gens) {
  const std::int64_t g = gcd_list(gens);
  if (g != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd of generators is " + std::to_string(g));
  }
}

}  // namespace

std::vector<std::int64_t> apery_set(const GeneratorList& gens, std::int64_t modulus) {
  if (!gens.contains(modulus)) {
    throw Error(ErrorKind::InvalidArgument,
                "Apery modulus " + std::to_string(modulus) + " is not a generator");
  }
  require_coprime(gens);

  // Round-robin relaxation: for each generator g, walk every cycle of
  // r -> r + g (mod modulus) starting from its smallest entry.
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  const auto n = static_cast<std::size_t>(modulus);
  std::vector<std::int64_t> least(n, kInf);
  least[0] = 0;
  for (std::int64_t g : gens.values()) {
    if (g == modulus) continue;
    const std::int64_t d = std::gcd(modulus, g);
    const std::int64_t cycle_len = modulus / d;
    const std::int64_t step = g % modulus;
    for (std::int64_t p = 0; p < d; ++p) {
      std::int64_t start = p;
      std::int64_t r = p;
      for (std::int64_t k = 0; k < cycle_len; ++k) {
        if (least[static_cast<std::size_t>(r)] < least[static_cast<std::size_t>(start)]) start = r;
        r = (r + step) % modulus;
      }
      if (least[static_cast<std::size_t>(start)] == kInf) continue;
      r = start;
      for (std::int64_t k = 1; k < cycle_len; ++k) {
        const std::int64_t next = (r + step) % modulus;
        const std::int64_t cand = least[static_cast<std::size_t>(r)] + g;
        if (cand < least[static_cast<std::size_t>(next)]) least[static_cast<std::size_t>(next)] = cand;
        r = next;
      }
    }
  }
  return least;
}

Conductor conductor(const GeneratorList& gens) {
  require_coprime(gens);
  const std::int64_t m = gens.smallest();
  if (m == 1) return {0};
  const auto apery = apery_set(gens, m);
  return {*std::max_element(apery.begin(), apery.end()) - m + 1};
}

Conductor conductor_by_scan(const GeneratorList& gens) {
  require_coprime(gens);
  const std::int64_t run = gens.smallest();
  for (std::int64_t limit = 4 * gens.largest();; limit *= 2) {
    SemigroupSieve sieve(gens, limit);
    std::int64_t streak = 0;
    for (std::int64_t x = 0; x <= limit; ++x) {
      streak = sieve.contains(x) ? streak + 1 : 0;
      if (streak == run) return {x - run + 1};
    }
  }
}

std::optional<UpwardRay> scaled_ideal_frob(std::span<const std::int64_t> gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "generator list is empty");
  std::vector<std::int64_t> halves;
  halves.reserve(gens.size());
  for (std::int64_t g : gens) {
    if (g == 0 || g % 2 != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "generators must be nonzero and even, got " + std::to_string(g));
    }
    halves.push_back(g < 0 ? -g / 2 : g / 2);
  }
  const GeneratorList half_list(std::move(halves));
  if (gcd_list(half_list) != 1) return std::nullopt;
  return UpwardRay{2 * conductor(half_list).value, 2};
}

ProductRay product_frob(const std::optional<UpwardRay>& a, const std::optional<UpwardRay>& b) {
  if (!a || !b) {
    throw Error(ErrorKind::EmptyFactor, "a factor Frobenius set is empty, so the product is empty");
  }
  return {*a, *b};
}

}  // namespace frob
