#include "frobring/vector_template.hpp"

#include <string>

#include "frobring/error.hpp"
#include "frobring/semigroup.hpp"

namespace frob {

namespace {

void check_shape(std::span<const VecGen> gens, std::size_t dim) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "generator list is empty");
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  for (const VecGen& g : gens) {
    if (g.entries.size() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "generator has " + std::to_string(g.entries.size()) +
                                                    " entries, expected " + std::to_string(dim));
    }
    for (std::int64_t e : g.entries) {
      if (e < 0) throw Error(ErrorKind::InvalidArgument, "vector entries must be >= 0");
    }
  }
}

// Can `value` be written as sum x_k * items[k] with x_k in N? Depth-first over
// the multiplicity of each item, remembering (item, remainder) states that failed.
class RowSearch {
 public:
  RowSearch(std::vector<std::int64_t> items, std::int64_t value, SearchBudget& budget)
      : items_(std::move(items)),
        value_(value),
        failed_(items_.size() * static_cast<std::size_t>(value + 1), false),
        budget_(budget) {}

  bool run() { return reach(0, value_); }

 private:
  bool reach(std::size_t k, std::int64_t rest) {
    if (rest == 0) return true;
    if (k == items_.size()) return false;
    const std::size_t key = k * static_cast<std::size_t>(value_ + 1) + static_cast<std::size_t>(rest);
    if (failed_[key]) return false;
    budget_.charge(1);
    const std::int64_t item = items_[k];
    for (std::int64_t x = rest / item; x >= 0; --x) {
      if (reach(k + 1, rest - x * item)) return true;
    }
    failed_[key] = true;
    return false;
  }

  std::vector<std::int64_t> items_;
  std::int64_t value_;
  std::vector<bool> failed_;
  SearchBudget& budget_;
};

}  // namespace

std::optional<CornerVec> frob_vector_corner(std::span<const VecGen> gens, std::size_t dim) {
  check_shape(gens, dim);
  CornerVec corner;
  corner.entries.resize(dim);
  for (std::size_t i = dim; i-- > 0;) {
    std::vector<std::int64_t> suffix;
    for (const VecGen& g : gens) {
      for (std::size_t s = i; s < dim; ++s) {
        if (g.entries[s] > 0) suffix.push_back(g.entries[s]);
      }
    }
    if (suffix.empty() || gcd_list(suffix) != 1) return std::nullopt;
    corner.entries[i] = conductor(GeneratorList(std::move(suffix))).value;
  }
  return corner;
}

bool is_member_vector(const VecGen& target, std::span<const VecGen> gens, SearchBudget& budget) {
  const std::size_t dim = target.entries.size();
  check_shape(gens, dim);
  for (std::int64_t e : target.entries) {
    if (e < 0) return false;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (target.entries[i] == 0) continue;
    // Free entries of row i: M_j[i][s] for s >= i with gens_j[s] > 0.
    std::vector<std::int64_t> items;
    for (const VecGen& g : gens) {
      for (std::size_t s = i; s < dim; ++s) {
        if (g.entries[s] > 0) items.push_back(g.entries[s]);
      }
    }
    if (!RowSearch(std::move(items), target.entries[i], budget).run()) return false;
  }
  return true;
}

}  // namespace frob
