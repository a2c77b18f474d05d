#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobring/dual_ring.hpp"
#include "frobring/dual_ring_real.hpp"

namespace frob::cli {

enum class Subcommand { Classical, Shifted, Dual, DualReal, Vector, Quad };
enum class OutputFormat { Json, Text };

// Parsed command line. Generators are raw tokens ("3,0"); each subcommand
// interprets them.
struct RunRequest {
  Subcommand subcommand = Subcommand::Classical;
  std::vector<std::string> gens;
  std::int64_t shift = 1;
  std::size_t dim = 0;
  std::int64_t m = 0;
  std::optional<std::string> point;
  std::optional<std::int64_t> apery_modulus;
  std::optional<std::string> viewport;
  OutputFormat output = OutputFormat::Json;
  std::optional<std::string> svg_path;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes: 0 success, 1 internal error, 2 usage or precondition violation,
// 3 search budget exceeded.
RunResult run(const std::vector<std::string>& args);

// Axis-aligned box [0, width] x [0, height] in template coordinates.
struct Viewport {
  Rational width;
  Rational height;
};

// Smallest integer box holding every corner with a margin of 5 units.
Viewport default_viewport(const std::vector<std::pair<Rational, Rational>>& corners);

// Shaded union of corner + [0, inf)^2 clipped to the viewport, with one marker
// per corner. Deterministic: equal inputs give byte-identical documents.
// Throws EmptySet for no corners, InvalidArgument when a corner lies outside.
std::string render_svg(const Staircase& stairs, const Viewport& view);
std::string render_svg(const QuadrantRegion& region, const Viewport& view);
std::string render_svg(std::vector<std::pair<Rational, Rational>> corners, const Viewport& view);

}  // namespace frob::cli
