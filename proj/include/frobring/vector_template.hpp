#pragma once

// Column vectors in N^m with upper-triangular N-matrix coefficients.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobring/budget.hpp"

namespace frob {

struct VecGen {
  std::vector<std::int64_t> entries;
  friend bool operator==(const VecGen&, const VecGen&) = default;
};

/// Denotes entries + N^m.
struct CornerVec {
  std::vector<std::int64_t> entries;
  friend bool operator==(const CornerVec&, const CornerVec&) = default;
};

/// Entry i is the conductor of all positive generator entries in rows i..m-1.
/// nullopt when the last-row entries are not coprime (including all zero).
/// Throws DimensionMismatch when a generator does not have `dim` entries and
/// InvalidArgument for an empty list, dim 0 or negative entries.
std::optional<CornerVec> frob_vector_corner(std::span<const VecGen> gens, std::size_t dim);

/// Exhaustive search for target = sum_j M_j gens_j over upper-triangular
/// N-matrices M_j. Row i of the product only involves row i of each M_j, so
/// rows are searched independently; entries meeting a zero generator entry are
/// fixed to 0 and the rest are bounded by target[i] / entry.
bool is_member_vector(const VecGen& target, std::span<const VecGen> gens,
                      SearchBudget& budget = SearchBudget::unlimited());

}  // namespace frob
