#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobring/budget.hpp"

namespace frob {

// Fixed-length bitset over [0, size()).
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t nbits);

  std::size_t size() const noexcept { return nbits_; }
  bool test(std::size_t i) const noexcept { return i < nbits_ && ((words_[i / 64] >> (i % 64)) & 1U); }
  void set(std::size_t i) noexcept;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  // *this |= src << shift (bits pushed past size() are dropped).
  void shift_or_from(const BitRow& src, std::size_t shift);

  // Closes the set under adding `step` (within the row). step must be > 0.
  void close_under(std::size_t step);

  bool all_set(std::size_t begin, std::size_t end) const;

  // Largest clear index, if any.
  std::optional<std::size_t> last_clear() const;

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Finite window [0, cols) x [0, rows) of the additive monoid in N^2 generated by
// a list of steps. Row r holds the points (c, r); bit c of the row is set when
// (c, r) is in the monoid.
class MonoidGrid {
 public:
  struct Step {
    std::size_t col;
    std::size_t row;
  };

  // Unbounded nonnegative multiples of every step.
  static MonoidGrid unbounded(std::span<const Step> steps, std::size_t cols, std::size_t rows,
                              SearchBudget& budget = SearchBudget::unlimited());

  // Each step used at most max_multiplicity times.
  static MonoidGrid bounded(std::span<const Step> steps, std::uint64_t max_multiplicity,
                            std::size_t cols, std::size_t rows,
                            SearchBudget& budget = SearchBudget::unlimited());

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rows() const noexcept { return rows_.size(); }

  bool contains(std::size_t col, std::size_t row) const noexcept {
    return row < rows_.size() && rows_[row].test(col);
  }

  const BitRow& row(std::size_t r) const { return rows_.at(r); }

  // True iff every point of [col, col + width) x [row, row + height) is present.
  // The block must lie inside the window.
  bool block_all(std::size_t col, std::size_t row, std::size_t width, std::size_t height) const;

 private:
  MonoidGrid(std::size_t cols, std::size_t rows);

  std::size_t cols_ = 0;
  std::vector<BitRow> rows_;
};

}  // namespace frob
