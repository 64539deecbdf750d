// Frequency partition of S0 = [-pi,pi)^2 into the central square S1 and six
// directional trapezoid pairs C_1..C_6, with a deterministic half-open
// boundary assignment.
//
// Channel labeling (slope s = xi2/xi1 of the ring sector):
//   j=0 : S1 = [-pi/2,pi/2)^2            j=4 : s in [1/3,1]
//   j=1 : s in [-3,-1]                   j=5 : |s| <= 1/3  (horizontal pair)
//   j=2 : |s| >= 3    (vertical pair)    j=6 : s in [-1,-1/3]
//   j=3 : s in [1,3]
// Consecutive indices are angularly adjacent; this is the labeling under
// which the ten regular boundary triples come out right.
//
// The boundary assignment below is one concrete realization of a half-open
// partition: it is symmetric under xi -> -xi and never assigns a channel to
// both endpoints of a shift-related boundary pair. Sixteen lattice-special
// points (multiples of pi/2 and the odd multiples of pi/4 on the radial
// lines) are owned here lexicographically; the M-function evaluator overrides
// them with split values.
#pragma once

#include <functional>

#include "qshear/common.hpp"

namespace qshear {

namespace detail {
inline bool near(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) < tol;
}
}  // namespace detail

// Half-open owner of a frequency point; total on the torus.
inline int locate(const Vec2& xi_raw) {
  using detail::near;
  const Vec2 p = wrap_pi(xi_raw);
  const double x = p.x, y = p.y;
  const double ax = std::abs(x), ay = std::abs(y);
  const bool seam_x = near(ax, pi), seam_y = near(ay, pi);

  if (seam_x && seam_y) return 4;  // S0 corner point
  if (seam_x) {                    // vertical seam, C5 crosses |t|<pi/3
    const double t = ay;
    if (t < pi / 3 - 1e-9) return 5;
    if (near(t, pi / 3)) return 5;
    if (t < pi / 2 - 1e-9) return 4;
    if (near(t, pi / 2)) return 4;
    if (t < 2 * pi / 3 - 1e-9) return 6;
    return 4;  // breakpoint 2pi/3 and the corner-adjacent piece
  }
  if (seam_y) {  // horizontal seam, C2 crosses
    const double t = ax;
    if (t < pi / 3 - 1e-9) return 2;
    if (near(t, pi / 3)) return 2;
    if (t < pi / 2 - 1e-9) return 3;
    if (near(t, pi / 2)) return 1;
    if (t < 2 * pi / 3 - 1e-9) return 1;
    return 3;
  }

  const bool ex = near(ax, pi / 2), ey = near(ay, pi / 2);
  if (ex && ey) return (x > 0) == (y > 0) ? 0 : 1;  // S1 corners
  if (ex && ay < pi / 2) {                          // vertical S1 edges
    if (ay < pi / 6 - 1e-9) {                       // middle third
      if (near(y, 0.0)) return 0;
      return (x > 0) == (y > 0) ? 0 : 5;
    }
    return (x > 0) == (y > 0) ? 0 : 6;  // outer thirds incl. +-pi/6 vertices
  }
  if (ey && ax < pi / 2) {  // horizontal S1 edges
    if (ax < pi / 6 - 1e-9) {
      if (near(x, 0.0)) return 0;
      return (x > 0) == (y > 0) ? 0 : 2;
    }
    return (x > 0) == (y > 0) ? 0 : 1;
  }
  if (ax < pi / 2 && ay < pi / 2) return 0;

  // Ring sectors. Radial boundary lines are split at their midpoints
  // (|xi1| or |xi2| = 3pi/4) so that shift partners get distinct owners.
  const double tol = 3e-9;
  const bool diag = x * y > 0;
  const double g = 3 * ay - ax;  // slope +-1/3 line
  if (std::abs(g) < tol) {
    if (diag) return ax < 3 * pi / 4 + tol ? 4 : 5;  // {4,5}
    return ax < 3 * pi / 4 + tol ? 5 : 6;            // {5,6}
  }
  if (g < 0) return 5;
  const double v = 3 * ax - ay;  // slope +-3 line
  if (std::abs(v) < tol) {
    if (diag) return ay < 3 * pi / 4 + tol ? 2 : 3;  // {2,3}
    return ay < 3 * pi / 4 + tol ? 1 : 2;            // {1,2}
  }
  if (v < 0) return 2;
  const double w = ay - ax;  // slope +-1 line
  if (std::abs(w) < tol) {
    if (diag) return ax < 3 * pi / 4 + tol ? 3 : 4;  // {3,4}
    return ax < 3 * pi / 4 + tol ? 1 : 6;            // {1,6}
  }
  if (diag) return w > 0 ? 3 : 4;
  return w > 0 ? 1 : 6;
}

// A region of the frequency square: one of the seven canonical pieces or a
// derived set given by a membership predicate.
struct Region {
  enum class Kind { central_square, trapezoid_pair, derived };
  Kind kind = Kind::derived;
  int index = -1;  // 0..6 for canonical regions
  // Convex components, vertices in radians (rational multiples of pi).
  std::vector<std::vector<Vec2>> polygon;
  std::function<bool(const Vec2&)> membership;

  bool contains(const Vec2& xi) const { return membership(xi); }
};

namespace detail {

inline std::vector<std::vector<Vec2>> canonical_polygon(int j) {
  auto P = [](double a, double b) { return Vec2{a * pi, b * pi}; };
  std::vector<Vec2> comp;
  switch (j) {
    case 0:
      return {{P(-.5, -.5), P(.5, -.5), P(.5, .5), P(-.5, .5)}};
    case 1:
      comp = {P(-.5, .5), P(-1. / 6, .5), P(-1. / 3, 1), P(-1, 1)};
      break;
    case 2:
      comp = {P(-1. / 6, .5), P(1. / 6, .5), P(1. / 3, 1), P(-1. / 3, 1)};
      break;
    case 3:
      comp = {P(1. / 6, .5), P(.5, .5), P(1, 1), P(1. / 3, 1)};
      break;
    case 4:
      comp = {P(.5, 1. / 6), P(1, 1. / 3), P(1, 1), P(.5, .5)};
      break;
    case 5:
      comp = {P(.5, -1. / 6), P(1, -1. / 3), P(1, 1. / 3), P(.5, 1. / 6)};
      break;
    case 6:
      comp = {P(.5, -1. / 6), P(.5, -.5), P(1, -1), P(1, -1. / 3)};
      break;
    default:
      throw std::invalid_argument("bad region index");
  }
  std::vector<Vec2> mirrored;
  for (const auto& v : comp) mirrored.push_back(-v);
  return {comp, mirrored};
}

// Inclusive point-in-convex-polygon test (vertices in either orientation).
inline bool in_convex_poly(const std::vector<Vec2>& poly, const Vec2& p,
                           double tol = 1e-9) {
  int pos = 0, neg = 0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    double cr = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cr > tol) ++pos;
    if (cr < -tol) ++neg;
  }
  return pos == 0 || neg == 0;
}

inline double point_segment_dist(const Vec2& p, const Vec2& a, const Vec2& b) {
  Vec2 ab = b - a;
  double t = (p - a).dot(ab) / ab.dot(ab);
  t = std::clamp(t, 0.0, 1.0);
  Vec2 q = a + ab * t;
  Vec2 d = p - q;
  return std::sqrt(d.dot(d));
}

}  // namespace detail

// Closed-support membership of cl(C_j) on the torus (inclusive boundaries).
inline bool closed_contains(int j, const Vec2& xi_raw) {
  if (j < 0 || j > 6) throw std::invalid_argument("bad region index");
  auto polys = detail::canonical_polygon(j);
  // Torus: test the wrapped point and its seam copies.
  const Vec2 p = wrap_pi(xi_raw);
  for (double sx : {0.0, two_pi})
    for (double sy : {0.0, two_pi}) {
      Vec2 q{p.x + sx, p.y + sy};
      for (const auto& poly : polys)
        if (detail::in_convex_poly(poly, q)) return true;
    }
  return false;
}

// Distance from a (wrapped) point to cl(C_j) on the torus; 0 inside.
inline double region_distance(int j, const Vec2& xi_raw) {
  if (closed_contains(j, xi_raw)) return 0.0;
  auto polys = detail::canonical_polygon(j);
  const Vec2 p = wrap_pi(xi_raw);
  double best = 1e30;
  for (double sx : {-two_pi, 0.0, two_pi})
    for (double sy : {-two_pi, 0.0, two_pi}) {
      Vec2 q{p.x + sx, p.y + sy};
      for (const auto& poly : polys)
        for (size_t i = 0; i < poly.size(); ++i)
          best = std::min(best, detail::point_segment_dist(
                                    q, poly[i], poly[(i + 1) % poly.size()]));
    }
  return best;
}

inline std::vector<Region> canonical_partition() {
  std::vector<Region> out(7);
  for (int j = 0; j < 7; ++j) {
    out[j].kind = j == 0 ? Region::Kind::central_square
                         : Region::Kind::trapezoid_pair;
    out[j].index = j;
    out[j].polygon = detail::canonical_polygon(j);
    out[j].membership = [j](const Vec2& xi) { return locate(xi) == j; };
  }
  return out;
}

inline double polygon_area(const std::vector<std::vector<Vec2>>& polys) {
  double total = 0.0;
  for (const auto& poly : polys) {
    double a = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
      const Vec2& u = poly[i];
      const Vec2& v = poly[(i + 1) % poly.size()];
      a += u.x * v.y - v.x * u.y;
    }
    total += std::abs(a) / 2.0;
  }
  return total;
}

}  // namespace qshear
