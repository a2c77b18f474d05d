#include "frobring/bitmap.hpp"

#include <bit>

#include "frobring/error.hpp"
#include "frobring/simd/bit_kernels.hpp"

namespace frob {

BitRow::BitRow(std::size_t nbits) : nbits_(nbits), words_(simd::words_for(nbits), 0) {}

void BitRow::set(std::size_t i) noexcept {
  if (i < nbits_) words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void BitRow::shift_or_from(const BitRow& src, std::size_t shift) {
  if (shift >= nbits_) return;
  simd::shift_or(words_, src.words_, shift, nbits_);
}

void BitRow::close_under(std::size_t step) {
  // Doubling: after shifts step, 2 step, ..., 2^k step every j * step with
  // j < 2^(k+1) has been added.
  for (std::size_t s = step; s < nbits_; s *= 2) {
    simd::shift_or(words_, words_, s, nbits_);
    if (s > nbits_ / 2) break;
  }
}

bool BitRow::all_set(std::size_t begin, std::size_t end) const {
  if (end > nbits_) return false;
  return simd::all_ones(words_, begin, end);
}

std::optional<std::size_t> BitRow::last_clear() const {
  for (std::size_t w = words_.size(); w-- > 0;) {
    std::uint64_t clear = ~words_[w];
    if (w + 1 == words_.size()) clear &= simd::tail_mask(nbits_);
    if (clear != 0) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(clear));
  }
  return std::nullopt;
}

MonoidGrid::MonoidGrid(std::size_t cols, std::size_t rows) : cols_(cols), rows_(rows, BitRow(cols)) {}

MonoidGrid MonoidGrid::unbounded(std::span<const Step> steps, std::size_t cols, std::size_t rows,
                                 SearchBudget& budget) {
  budget.charge(static_cast<std::uint64_t>(cols) * rows);
  MonoidGrid grid(cols, rows);
  if (cols == 0 || rows == 0) return grid;
  grid.rows_[0].set(0);
  for (std::size_t r = 0; r < rows; ++r) {
    BitRow& cur = grid.rows_[r];
    for (const Step& s : steps) {
      if (s.row == 0 || s.row > r) continue;
      cur.shift_or_from(grid.rows_[r - s.row], s.col);
    }
    for (const Step& s : steps) {
      if (s.row == 0 && s.col != 0) cur.close_under(s.col);
    }
  }
  return grid;
}

MonoidGrid MonoidGrid::bounded(std::span<const Step> steps, std::uint64_t max_multiplicity,
                               std::size_t cols, std::size_t rows, SearchBudget& budget) {
  MonoidGrid grid(cols, rows);
  if (cols == 0 || rows == 0) return grid;
  grid.rows_[0].set(0);
  for (const Step& s : steps) {
    if (s.col == 0 && s.row == 0) continue;
    // Binary splitting into 0/1 items: 1, 2, 4, ..., remainder.
    // Nonzero steps cannot be used more than max(cols, rows) times inside the window.
    const std::uint64_t useful = cols > rows ? cols : rows;
    std::uint64_t left = max_multiplicity < useful ? max_multiplicity : useful;
    for (std::uint64_t chunk = 1; left > 0; chunk *= 2) {
      const std::uint64_t take = chunk < left ? chunk : left;
      left -= take;
      const std::uint64_t dc = s.col * take;
      const std::uint64_t dr = s.row * take;
      if (dc >= cols || dr >= rows) continue;
      budget.charge(static_cast<std::uint64_t>(cols) * rows);
      // High rows first, so each item is applied to pre-item rows only.
      for (std::size_t r = rows; r-- > dr;) {
        grid.rows_[r].shift_or_from(grid.rows_[r - dr], dc);
      }
    }
  }
  return grid;
}

bool MonoidGrid::block_all(std::size_t col, std::size_t row, std::size_t width,
                           std::size_t height) const {
  if (row + height > rows_.size() || col + width > cols_) {
    throw Error(ErrorKind::InvalidArgument, "block lies outside the monoid window");
  }
  for (std::size_t k = 0; k < height; ++k) {
    if (!rows_[row + k].all_set(col, col + width)) return false;
  }
  return true;
}

}  // namespace frob
