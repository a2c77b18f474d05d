#pragma once

#include <atomic>
#include <cstdint>
#include <limits>

namespace frob {

// Caps the work done by table builders and exhaustive oracles. One unit is one
// elementary membership cell (a table bit or a search node).
class SearchBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit SearchBudget(std::uint64_t limit = std::numeric_limits<std::uint64_t>::max())
      : limit_(limit) {}

  SearchBudget(const SearchBudget&) = delete;
  SearchBudget& operator=(const SearchBudget&) = delete;

  // Reads FROBRING_MAX_SEARCH; falls back to kDefaultLimit when unset.
  // Throws InvalidArgument when the variable is set but not a positive integer.
  static std::uint64_t limit_from_env();

  // Shared budget with no limit; the default for library callers.
  static SearchBudget& unlimited();

  // Throws Error(BudgetExceeded) once the cumulative charge passes the limit.
  void charge(std::uint64_t units);

  std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace frob
