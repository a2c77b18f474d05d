#pragma once

// Formula-versus-oracle checks for the vector template and the Z[sqrt m]
// templates, shared by the unit suites and the acceptance binary. Each check
// returns an empty string on success, otherwise a description.

#include <sstream>
#include <string>
#include <vector>

#include "frobring/bitmap.hpp"
#include "frobring/quadratic_ring.hpp"
#include "frobring/vector_template.hpp"
#include "oracles.hpp"

namespace protocols {

using oracle::i64;

inline std::string describe(const std::vector<frob::VecGen>& gens) {
  std::ostringstream os;
  for (const auto& g : gens) {
    os << '(';
    for (std::size_t i = 0; i < g.entries.size(); ++i) os << (i ? "," : "") << g.entries[i];
    os << ')';
  }
  return os.str();
}

// Random vector instance with coprime last-row entries.
inline std::vector<frob::VecGen> random_vector_instance(std::mt19937_64& rng, std::size_t dim, std::size_t k) {
  for (;;) {
    std::vector<frob::VecGen> gens(k);
    std::vector<i64> last;
    for (auto& g : gens) {
      for (std::size_t i = 0; i < dim; ++i) g.entries.push_back(oracle::uniform(rng, 0, 6));
      last.push_back(g.entries.back());
    }
    if (oracle::gcd_all(last) == 1) return gens;
  }
}

inline std::string check_vector_instance(const std::vector<frob::VecGen>& gens, std::size_t dim) {
  std::vector<std::vector<i64>> raw;
  for (const auto& g : gens) raw.push_back(g.entries);
  const auto corner = frob::frob_vector_corner(gens, dim);
  if (!corner) return describe(gens) + ": no corner despite coprime last row";
  const auto& c = corner->entries;

  // Each entry is the conductor of the positive suffix entries.
  i64 chi_max = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<i64> suffix;
    for (const auto& g : raw) {
      for (std::size_t s = i; s < dim; ++s) {
        if (g[s] > 0) suffix.push_back(g[s]);
      }
    }
    if (c[i] != oracle::conductor(suffix)) return describe(gens) + ": entry " + std::to_string(i) + " is not the suffix conductor";
    chi_max = std::max(chi_max, c[i]);
  }

  // corner + [0, 4]^dim inside MN, by the search and by the row oracle.
  std::vector<i64> off(dim, 0);
  for (;;) {
    frob::VecGen p;
    for (std::size_t i = 0; i < dim; ++i) p.entries.push_back(c[i] + off[i]);
    if (!frob::is_member_vector(p, gens) || !oracle::member_vector(p.entries, raw)) {
      return describe(gens) + ": box point above the corner is not a member";
    }
    std::size_t i = 0;
    while (i < dim && ++off[i] > 4) off[i++] = 0;
    if (i == dim) break;
  }

  // Lowering any positive entry leaves Frob: some point of the box of side
  // chi_max + 5 above corner - e_i is not a member.
  for (std::size_t i = 0; i < dim; ++i) {
    if (c[i] == 0) continue;
    std::vector<i64> base = c;
    --base[i];
    bool found = false;
    std::vector<i64> o(dim, 0);
    while (!found) {
      frob::VecGen p;
      for (std::size_t j = 0; j < dim; ++j) p.entries.push_back(base[j] + o[j]);
      if (!frob::is_member_vector(p, gens)) found = true;
      std::size_t j = 0;
      while (j < dim && ++o[j] > chi_max + 5) o[j++] = 0;
      if (j == dim) break;
    }
    if (!found) return describe(gens) + ": corner - e_" + std::to_string(i) + " still looks inside Frob";
  }
  return {};
}

// MN membership in N[sqrt m] with a coefficient bound that makes it exact.
inline bool quad_member(i64 x, i64 y, const std::vector<frob::QuadraticInt>& alphas, i64 m) {
  return frob::is_member_nsqrtm(frob::QuadraticInt(x, y, m), alphas, std::max(x, y) + 1);
}

// A window [0, cols) x [0, rows) of MN for the minimality searches.
inline frob::MonoidGrid quad_window(const std::vector<frob::QuadraticInt>& alphas, i64 m, i64 cols, i64 rows) {
  std::vector<frob::MonoidGrid::Step> steps;
  for (const auto& a : alphas) {
    steps.push_back({static_cast<std::size_t>(a.x()), static_cast<std::size_t>(a.y())});
    steps.push_back({static_cast<std::size_t>(m * a.y()), static_cast<std::size_t>(a.x())});
  }
  return frob::MonoidGrid::unbounded(steps, static_cast<std::size_t>(cols), static_cast<std::size_t>(rows));
}

// corner + [0,4]^2 inside MN; each of (cx - 1, cy), (cx, cy - 1) has a
// non-member above it inside a box of side `reach`.
inline std::string check_quad_corner(const frob::QuadraticCorner& corner, const std::vector<frob::QuadraticInt>& alphas,
                                     i64 m, i64 reach, const std::string& label) {
  const i64 cx = corner.corner.x(), cy = corner.corner.y();
  if (cx < 0 || cy < 0) return label + ": negative corner coordinate";
  for (i64 x = 0; x <= 4; ++x) {
    for (i64 y = 0; y <= 4; ++y) {
      if (!quad_member(cx + x, cy + y, alphas, m)) {
        return label + ": " + std::to_string(cx + x) + "+" + std::to_string(cy + y) + "sqrt" + std::to_string(m) +
               " not representable";
      }
    }
  }
  const auto grid = quad_window(alphas, m, cx + reach + 1, cy + reach + 1);
  auto has_gap = [&](i64 bx, i64 by) {
    for (i64 x = bx; x <= bx + reach; ++x) {
      for (i64 y = by; y <= by + reach; ++y) {
        if (!grid.contains(static_cast<std::size_t>(x), static_cast<std::size_t>(y))) return true;
      }
    }
    return false;
  };
  if (cx > 0 && !has_gap(cx - 1, cy)) return label + ": corner - 1 shows no gap";
  if (cy > 0 && !has_gap(cx, cy - 1)) return label + ": corner - sqrt m shows no gap";
  return {};
}

}  // namespace protocols
