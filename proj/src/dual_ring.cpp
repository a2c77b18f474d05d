#include "frobring/dual_ring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "frobring/error.hpp"
#include "frobring/semigroup.hpp"

namespace frob {

DualNumber dual_mul(DualNumber x, DualNumber y) noexcept {
  return {x.a * y.a, x.a * y.b + x.b * y.a};
}

DualGenerator::DualGenerator(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
  if (a < 1 || b < 0) {
    throw Error(ErrorKind::InvalidArgument, "dual generator (" + std::to_string(a) + ", " +
                                                std::to_string(b) + ") needs a >= 1 and b >= 0");
  }
}

Staircase Staircase::from_points(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  Staircase s;
  std::int64_t best_u = std::numeric_limits<std::int64_t>::max();
  for (const Point2& p : points) {
    if (p.u < best_u) {
      s.corners_.push_back(p);
      best_u = p.u;
    }
  }
  return s;
}

bool Staircase::contains(Point2 p) const noexcept {
  return std::any_of(corners_.begin(), corners_.end(),
                     [&](const Point2& c) { return c.t <= p.t && c.u <= p.u; });
}

namespace {

void require_generators(std::span<const DualGenerator> gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "generator list is empty");
}

void require_point(Point2 p) {
  if (p.t < 0 || p.u < 0) throw Error(ErrorKind::InvalidArgument, "point coordinates must be >= 0");
}

// Grid rows are indexed by u, columns by t.
std::vector<MonoidGrid::Step> monoid_steps(std::span<const DualGenerator> gens) {
  std::vector<MonoidGrid::Step> steps;
  for (const auto& g : gens) {
    steps.push_back({static_cast<std::size_t>(g.a), static_cast<std::size_t>(g.b)});
    steps.push_back({0, static_cast<std::size_t>(g.a)});
  }
  return steps;
}

MonoidGrid build_grid(std::span<const DualGenerator> gens, std::int64_t cols, std::int64_t rows,
                      SearchBudget& budget) {
  const auto steps = monoid_steps(gens);
  return MonoidGrid::unbounded(steps, static_cast<std::size_t>(cols),
                               static_cast<std::size_t>(rows), budget);
}

GeneratorList first_coordinates(std::span<const DualGenerator> gens) {
  std::vector<std::int64_t> as;
  for (const auto& g : gens) as.push_back(g.a);
  return GeneratorList(std::move(as));
}

std::int64_t smallest_free_a(std::span<const DualGenerator> gens) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& g : gens) {
    if (g.b == 0) best = std::min(best, g.a);
  }
  return best;
}

// Exact thresholds of rows 0..umax.
//
// Fix a row u. Besides the b = 0 generators (set A0, gcd g0), a point of the
// row uses multiples c_i of the b > 0 generators with beta = sum b_i c_i <= u
// and u - beta in <a>, contributing t-offset sum a_i c_i. From an offset o the
// row contains o + <A0>, which holds every o + g0 * (chi(A0 / g0) + k). So the
// row is eventually full iff the offsets hit every residue mod g0, and
// max over residues of (least offset) + g0 * chi(A0 / g0) bounds the threshold;
// the exact value is read off a membership grid below that bound.
std::vector<std::optional<std::int64_t>> row_thresholds(std::span<const DualGenerator> gens,
                                                        std::int64_t umax, SearchBudget& budget) {
  std::vector<std::optional<std::int64_t>> out(static_cast<std::size_t>(umax + 1));
  std::vector<std::int64_t> free_as;
  std::vector<const DualGenerator*> tied;
  for (const auto& g : gens) {
    if (g.b == 0) {
      free_as.push_back(g.a);
    } else {
      tied.push_back(&g);
    }
  }
  if (free_as.empty()) return out;

  const std::int64_t g0 = gcd_list(free_as);
  std::vector<std::int64_t> reduced;
  for (std::int64_t a : free_as) reduced.push_back(a / g0);
  const std::int64_t chi0 = conductor(GeneratorList(std::move(reduced))).value;
  const SemigroupSieve a_sieve(first_coordinates(gens), umax, budget);

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  const auto mod = static_cast<std::size_t>(g0);
  const auto rows = static_cast<std::size_t>(umax + 1);
  budget.charge(static_cast<std::uint64_t>(rows) * mod * (tied.size() + rows));

  // least[beta * mod + r]: least sum a_i c_i over b > 0 generators with
  // sum b_i c_i = beta and that sum congruent to r.
  std::vector<std::int64_t> least(rows * mod, kInf);
  least[0] = 0;
  for (std::size_t beta = 1; beta < rows; ++beta) {
    for (const DualGenerator* g : tied) {
      const auto b = static_cast<std::size_t>(g->b);
      if (b > beta) continue;
      for (std::size_t r = 0; r < mod; ++r) {
        const std::int64_t prev = least[(beta - b) * mod + r];
        if (prev == kInf) continue;
        const std::size_t nr = (r + static_cast<std::size_t>(g->a)) % mod;
        least[beta * mod + nr] = std::min(least[beta * mod + nr], prev + g->a);
      }
    }
  }

  std::vector<std::int64_t> upper(rows, -1);
  std::int64_t widest = 0;
  std::vector<std::int64_t> offset(mod);
  for (std::size_t u = 0; u < rows; ++u) {
    std::fill(offset.begin(), offset.end(), kInf);
    for (std::size_t beta = 0; beta <= u; ++beta) {
      if (!a_sieve.contains(static_cast<std::int64_t>(u - beta))) continue;
      for (std::size_t r = 0; r < mod; ++r) offset[r] = std::min(offset[r], least[beta * mod + r]);
    }
    const std::int64_t worst = *std::max_element(offset.begin(), offset.end());
    if (worst == kInf) continue;
    upper[u] = worst + g0 * chi0;
    widest = std::max(widest, upper[u]);
  }

  const MonoidGrid grid = build_grid(gens, widest, umax + 1, budget);
  for (std::size_t u = 0; u < rows; ++u) {
    if (upper[u] < 0) continue;
    // Columns at or past upper[u] are members, so the last gap is below it.
    const auto gap = grid.row(u).last_clear();
    out[u] = gap ? static_cast<std::int64_t>(*gap) + 1 : 0;
  }
  return out;
}

}  // namespace

bool is_member_dual(Point2 p, std::span<const DualGenerator> gens, SearchBudget& budget) {
  require_point(p);
  if (p.t == 0 && p.u == 0) return true;
  return build_grid(gens, p.t + 1, p.u + 1, budget).contains(static_cast<std::size_t>(p.t),
                                                             static_cast<std::size_t>(p.u));
}

bool frob_nonempty_dual(std::span<const DualGenerator> gens) {
  require_generators(gens);
  const bool has_free = std::any_of(gens.begin(), gens.end(), [](const auto& g) { return g.b == 0; });
  return has_free && gcd_list(first_coordinates(gens)) == 1;
}

Point2 frob_corner_pair(const DualGenerator& g1, const DualGenerator& g2) {
  if (g1.b != 0) throw Error(ErrorKind::BadForm, "first generator must have b = 0");
  if (std::gcd(g1.a, g2.a) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(g1.a) + ", " +
                                           std::to_string(g2.a) + ") != 1");
  }
  const std::int64_t chi = conductor(GeneratorList{g1.a, g2.a}).value;
  return {chi, chi + g2.b * (g1.a - 1)};
}

bool frob_membership_dual(Point2 p, std::span<const DualGenerator> gens, SearchBudget& budget) {
  require_point(p);
  if (!frob_nonempty_dual(gens)) return false;
  const std::int64_t width = smallest_free_a(gens);
  const std::int64_t height = std::max<std::int64_t>(conductor(first_coordinates(gens)).value, 1);
  const MonoidGrid grid = build_grid(gens, p.t + width, p.u + height, budget);
  return grid.block_all(static_cast<std::size_t>(p.t), static_cast<std::size_t>(p.u),
                        static_cast<std::size_t>(width), static_cast<std::size_t>(height));
}

std::optional<std::int64_t> row_threshold(std::int64_t u_row, std::span<const DualGenerator> gens,
                                          SearchBudget& budget) {
  require_generators(gens);
  if (u_row < 0) throw Error(ErrorKind::InvalidArgument, "row index must be >= 0");
  return row_thresholds(gens, u_row, budget).back();
}

std::optional<Staircase> frob_staircase(std::span<const DualGenerator> gens, SearchBudget& budget) {
  if (!frob_nonempty_dual(gens)) return std::nullopt;
  if (std::any_of(gens.begin(), gens.end(), [](const auto& g) { return g.a == 1 && g.b == 0; })) {
    return Staircase::from_points({{0, 0}});
  }

  const GeneratorList as = first_coordinates(gens);
  const std::int64_t chi_a = conductor(as).value;
  const std::int64_t height = std::max<std::int64_t>(chi_a, 1);
  const std::int64_t width = smallest_free_a(gens);

  // Every corner has u >= chi(a's and nonzero b's) and u <= the known corner row.
  std::vector<std::int64_t> coords(as.values().begin(), as.values().end());
  std::int64_t sum_b = 0;
  for (const auto& g : gens) {
    if (g.b > 0) coords.push_back(g.b);
    sum_b += g.b;
  }
  const std::int64_t u_low = conductor(GeneratorList(std::move(coords))).value;
  std::int64_t u_high = std::numeric_limits<std::int64_t>::max();
  for (const auto& g : gens) {
    if (g.b == 0) u_high = std::min(u_high, chi_a + (g.a - 1) * sum_b);
  }

  const auto thresholds = row_thresholds(gens, u_high + height - 1, budget);
  std::int64_t t_stop = chi_a;
  for (std::int64_t u = u_low; u < u_high + height; ++u) {
    if (const auto& th = thresholds[static_cast<std::size_t>(u)]) t_stop = std::max(t_stop, *th);
  }

  const MonoidGrid grid = build_grid(gens, t_stop + width, u_high + height, budget);
  std::vector<Point2> points;
  // Least passing t never decreases as u decreases.
  std::int64_t t = chi_a;
  for (std::int64_t u = u_high; u >= u_low; --u) {
    while (t <= t_stop &&
           !grid.block_all(static_cast<std::size_t>(t), static_cast<std::size_t>(u),
                           static_cast<std::size_t>(width), static_cast<std::size_t>(height))) {
      ++t;
    }
    if (t > t_stop) break;
    points.push_back({t, u});
  }
  return Staircase::from_points(std::move(points));
}

}  // namespace frob
