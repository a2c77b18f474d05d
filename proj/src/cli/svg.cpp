#include <algorithm>
#include <cstdio>
#include <sstream>

#include "frobring/cli.hpp"
#include "frobring/error.hpp"

namespace frob::cli {

namespace {

constexpr double kScale = 20.0;
constexpr double kMargin = 10.0;

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::vector<std::pair<Rational, Rational>> integer_corners(const Staircase& stairs) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const Point2& p : stairs.corners()) out.emplace_back(Rational(p.t), Rational(p.u));
  return out;
}

}  // namespace

Viewport default_viewport(const std::vector<std::pair<Rational, Rational>>& corners) {
  Rational w = 0;
  Rational h = 0;
  for (const auto& [x, y] : corners) {
    w = std::max(w, x);
    h = std::max(h, y);
  }
  // floor + 5
  mpz_class wf, hf;
  mpz_fdiv_q(wf.get_mpz_t(), w.get_num_mpz_t(), w.get_den_mpz_t());
  mpz_fdiv_q(hf.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return {Rational(wf + 5), Rational(hf + 5)};
}

std::string render_svg(const Staircase& stairs, const Viewport& view) {
  return render_svg(integer_corners(stairs), view);
}

std::string render_svg(const QuadrantRegion& region, const Viewport& view) {
  std::vector<std::pair<Rational, Rational>> corners;
  for (const QPoint& q : region.corners()) corners.emplace_back(q.f, q.g);
  return render_svg(std::move(corners), view);
}

std::string render_svg(std::vector<std::pair<Rational, Rational>> corners, const Viewport& view) {
  if (corners.empty()) throw Error(ErrorKind::EmptySet, "nothing to render: the set is empty");
  if (sgn(view.width) <= 0 || sgn(view.height) <= 0) {
    throw Error(ErrorKind::InvalidArgument, "viewport must have positive size");
  }
  for (const auto& [x, y] : corners) {
    if (sgn(x) < 0 || sgn(y) < 0 || x > view.width || y > view.height) {
      throw Error(ErrorKind::InvalidArgument,
                  "corner (" + to_string(x) + ", " + to_string(y) + ") lies outside the viewport");
    }
  }
  std::sort(corners.begin(), corners.end());

  const double w = view.width.get_d();
  const double h = view.height.get_d();
  auto px = [&](const Rational& x) { return fixed3(kMargin + x.get_d() * kScale); };
  auto py = [&](const Rational& y) { return fixed3(kMargin + (h - y.get_d()) * kScale); };

  // Staircase outline: down the left edge of the first quadrant, along each
  // step, then out along the right and top edges of the viewport.
  std::ostringstream d;
  d << "M " << px(corners.front().first) << ' ' << py(view.height);
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const auto& [x, y] = corners[i];
    d << " L " << px(x) << ' ' << py(y);
    const Rational& next_x = i + 1 < corners.size() ? corners[i + 1].first : view.width;
    d << " L " << px(next_x) << ' ' << py(y);
  }
  d << " L " << px(view.width) << ' ' << py(view.height) << " Z";

  const std::string total_w = fixed3(2 * kMargin + w * kScale);
  const std::string total_h = fixed3(2 * kMargin + h * kScale);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w << "\" height=\"" << total_h
      << "\" viewBox=\"0 0 " << total_w << ' ' << total_h << "\">\n";
  svg << "  <rect class=\"viewport\" x=\"" << fixed3(kMargin) << "\" y=\"" << fixed3(kMargin)
      << "\" width=\"" << fixed3(w * kScale) << "\" height=\"" << fixed3(h * kScale)
      << "\" fill=\"none\" stroke=\"#444444\"/>\n";
  svg << "  <path class=\"frob\" d=\"" << d.str()
      << "\" fill=\"#9ecae1\" fill-opacity=\"0.8\" stroke=\"#08519c\"/>\n";
  for (const auto& [x, y] : corners) {
    svg << "  <circle class=\"corner\" cx=\"" << px(x) << "\" cy=\"" << py(y)
        << "\" r=\"3\" fill=\"#cb181d\"><title>(" << to_string(x) << ", " << to_string(y)
        << ")</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace frob::cli
