#include "frobring/quadratic_ring.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "frobring/bitmap.hpp"
#include "frobring/error.hpp"
#include "frobring/semigroup.hpp"

namespace frob {

bool is_perfect_square(std::int64_t n) noexcept {
  if (n < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

QuadraticInt::QuadraticInt(std::int64_t x, std::int64_t y, std::int64_t m) : x_(x), y_(y), m_(m) {
  if (m < 2 || is_perfect_square(m)) {
    throw Error(ErrorKind::InvalidArgument, "m must be a non-square integer >= 2, got " + std::to_string(m));
  }
}

namespace {

std::int64_t shared_m(const QuadraticInt& p, const QuadraticInt& q) {
  if (p.m() != q.m()) {
    throw Error(ErrorKind::MixedM, "sqrt(" + std::to_string(p.m()) + ") vs sqrt(" +
                                       std::to_string(q.m()) + ")");
  }
  return p.m();
}

std::int64_t shared_m(std::span<const QuadraticInt> alphas) {
  if (alphas.empty()) throw Error(ErrorKind::InvalidArgument, "list is empty");
  for (const auto& a : alphas) shared_m(alphas.front(), a);
  return alphas.front().m();
}

using Wide = __int128;

struct Column {
  Wide x;
  Wide y;
};

// Returns g = gcd(a, b) >= 0 with s a + t b = g.
Wide ext_gcd(Wide a, Wide b, Wide& s, Wide& t) {
  Wide s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  while (b != 0) {
    const Wide q = a / b;
    Wide tmp = a - q * b;
    a = b;
    b = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorKind::InvalidArgument, "lattice entry overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

QuadraticInt operator+(const QuadraticInt& p, const QuadraticInt& q) {
  return {p.x() + q.x(), p.y() + q.y(), shared_m(p, q)};
}

QuadraticInt operator-(const QuadraticInt& p, const QuadraticInt& q) {
  return {p.x() - q.x(), p.y() - q.y(), shared_m(p, q)};
}

QuadraticInt operator*(const QuadraticInt& p, const QuadraticInt& q) {
  const std::int64_t m = shared_m(p, q);
  return {p.x() * q.x() + m * p.y() * q.y(), p.x() * q.y() + p.y() * q.x(), m};
}

bool IdealLattice::contains(std::int64_t x, std::int64_t y) const noexcept {
  // (x, y) = k (first, mixed) + l (0, second)
  if (first == 0) {
    if (x != 0) return false;
  } else if (x % first != 0) {
    return false;
  }
  const std::int64_t k = first == 0 ? 0 : x / first;
  const std::int64_t rest = y - k * mixed;
  return second == 0 ? rest == 0 : rest % second == 0;
}

IdealLattice ideal_lattice(std::span<const QuadraticInt> alphas) {
  const std::int64_t m = shared_m(alphas);
  std::vector<Column> cols;
  for (const auto& a : alphas) {
    cols.push_back({a.x(), a.y()});
    cols.push_back({static_cast<Wide>(m) * a.y(), a.x()});  // sqrt(m) * alpha
  }
  // Column operations: gather the gcd of the first row into the pivot and
  // leave columns whose first entry is 0.
  Column pivot{0, 0};
  Wide second = 0;
  for (const Column& c : cols) {
    if (c.x == 0) {
      second = wide_gcd(second, c.y);
      continue;
    }
    if (pivot.x == 0) {
      // Swap the pivot out; its first entry is 0.
      second = wide_gcd(second, pivot.y);
      pivot = c;
      continue;
    }
    Wide s = 0, t = 0;
    const Wide g = ext_gcd(pivot.x, c.x, s, t);
    const Column next{g, s * pivot.y + t * c.y};
    const Wide zero_y = (c.x / g) * pivot.y - (pivot.x / g) * c.y;
    pivot = next;
    second = wide_gcd(second, zero_y);
    if (second != 0) pivot.y %= second;
  }
  if (pivot.x < 0) {
    pivot.x = -pivot.x;
    pivot.y = -pivot.y;
  }
  if (second != 0) {
    pivot.y %= second;
    if (pivot.y < 0) pivot.y += second;
  }
  return {narrow(pivot.x), narrow(pivot.y), narrow(second)};
}

bool spans_unity(std::span<const QuadraticInt> alphas) {
  return ideal_lattice(alphas).contains(1, 0);
}

bool looper_nonempty(std::span<const QuadraticInt> alphas) {
  shared_m(alphas);
  bool has_zero = false;
  for (const auto& a : alphas) {
    if (a.x() < 0 || a.y() < 0) {
      throw Error(ErrorKind::InvalidArgument, "coordinates must be >= 0");
    }
    has_zero = has_zero || a.x() == 0 || a.y() == 0;
  }
  return has_zero && spans_unity(alphas);
}

std::optional<QuadraticCorner> frob_corner_axis_list(std::span<const std::int64_t> as,
                                                     std::span<const std::int64_t> bs,
                                                     std::int64_t m) {
  if (as.empty() && bs.empty()) throw Error(ErrorKind::InvalidArgument, "list is empty");
  const QuadraticInt zero(0, 0, m);  // validates m
  std::vector<std::int64_t> scaled;
  std::vector<std::int64_t> plain;
  for (std::int64_t a : as) {
    if (a < 0) throw Error(ErrorKind::InvalidArgument, "coefficients must be >= 0");
    if (a > 0) {
      scaled.push_back(a);
      plain.push_back(a);
    }
  }
  for (std::int64_t b : bs) {
    if (b < 0) throw Error(ErrorKind::InvalidArgument, "coefficients must be >= 0");
    if (b > 0) {
      scaled.push_back(b * m);
      plain.push_back(b);
    }
  }
  if (scaled.empty() || gcd_list(scaled) != 1) return std::nullopt;
  const std::int64_t x = conductor(GeneratorList(std::move(scaled))).value;
  const std::int64_t y = conductor(GeneratorList(std::move(plain))).value;
  return QuadraticCorner{QuadraticInt(x, y, m)};
}

std::optional<QuadraticCorner> frob_corner_pair_sqrt(const QuadraticInt& alpha, const QuadraticInt& beta) {
  const std::int64_t m = shared_m(alpha, beta);
  if (alpha.x() < 0 || alpha.y() < 0 || beta.x() < 0 || beta.y() < 0) {
    throw Error(ErrorKind::InvalidArgument, "coordinates must be >= 0");
  }
  if (alpha.x() + alpha.y() == 0 || beta.x() + beta.y() == 0) {
    throw Error(ErrorKind::InvalidArgument, "generators must be nonzero");
  }
  const bool some_zero = alpha.x() == 0 || alpha.y() == 0 || beta.x() == 0 || beta.y() == 0;
  const QuadraticInt pair[] = {alpha, beta};
  if (!some_zero || !spans_unity(pair)) return std::nullopt;
  const QuadraticInt one(1, 0, m);
  const QuadraticInt corner = (alpha - one) * (beta - one) * QuadraticInt(1, 1, m);
  if (corner.x() < 0 || corner.y() < 0) {
    throw std::logic_error("pair corner has a negative coordinate");
  }
  return QuadraticCorner{corner};
}

bool is_member_nsqrtm(const QuadraticInt& target, std::span<const QuadraticInt> alphas,
                      std::int64_t coeff_bound, SearchBudget& budget) {
  if (!alphas.empty()) {
    shared_m(alphas);
    shared_m(target, alphas.front());
  }
  if (coeff_bound < 0) throw Error(ErrorKind::InvalidArgument, "coefficient bound must be >= 0");
  for (const auto& a : alphas) {
    if (a.x() < 0 || a.y() < 0) throw Error(ErrorKind::InvalidArgument, "coordinates must be >= 0");
  }
  if (target.x() < 0 || target.y() < 0) return false;
  if (target.x() == 0 && target.y() == 0) return true;

  // lambda * alpha = p (x, y) + q (m y, x): an N^2 monoid with columns for the
  // rational part and rows for the sqrt(m) part.
  const std::int64_t m = target.m();
  std::vector<MonoidGrid::Step> steps;
  for (const auto& a : alphas) {
    if (a.x() == 0 && a.y() == 0) continue;
    steps.push_back({static_cast<std::size_t>(a.x()), static_cast<std::size_t>(a.y())});
    steps.push_back({static_cast<std::size_t>(m * a.y()), static_cast<std::size_t>(a.x())});
  }
  const auto cols = static_cast<std::size_t>(target.x()) + 1;
  const auto rows = static_cast<std::size_t>(target.y()) + 1;
  const std::int64_t widest = std::max(target.x(), target.y());
  const MonoidGrid grid = coeff_bound >= widest
                              ? MonoidGrid::unbounded(steps, cols, rows, budget)
                              : MonoidGrid::bounded(steps, static_cast<std::uint64_t>(coeff_bound),
                                                    cols, rows, budget);
  return grid.contains(cols - 1, rows - 1);
}

}  // namespace frob
