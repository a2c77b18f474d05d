#include "frobring/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "frobring/error.hpp"

namespace frob {

std::uint64_t SearchBudget::limit_from_env() {
  const char* raw = std::getenv("FROBRING_MAX_SEARCH");
  if (raw == nullptr || *raw == '\0') return kDefaultLimit;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw Error(ErrorKind::InvalidArgument,
                "FROBRING_MAX_SEARCH must be a positive integer, got '" + std::string(raw) + "'");
  }
  return value;
}

SearchBudget& SearchBudget::unlimited() {
  static SearchBudget budget;
  return budget;
}

void SearchBudget::charge(std::uint64_t units) {
  if (limit_ == std::numeric_limits<std::uint64_t>::max()) return;
  const std::uint64_t before = used_.fetch_add(units, std::memory_order_relaxed);
  if (units > limit_ || before > limit_ - units) {
    throw Error(ErrorKind::BudgetExceeded, "search budget exceeded (limit " +
                                               std::to_string(limit_) + " membership checks)");
  }
}

}  // namespace frob
