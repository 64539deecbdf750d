// Basic 2-vector / torus helpers shared by all qshear headers.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qshear {

using cplx = std::complex<double>;
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

struct Vec2 {
  double x = 0.0, y = 0.0;
  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
};

struct Vec2i {
  long long x = 0, y = 0;
  Vec2i() = default;
  Vec2i(long long x_, long long y_) : x(x_), y(y_) {}
  bool operator==(const Vec2i& o) const { return x == o.x && y == o.y; }
  bool operator<(const Vec2i& o) const { return x != o.x ? x < o.x : y < o.y; }
};

// Wrap a coordinate into [-pi, pi).
inline double wrap_pi(double t) {
  double w = t - two_pi * std::floor((t + pi) / two_pi);
  if (w >= pi) w -= two_pi;  // guard against rounding at the seam
  if (w < -pi) w += two_pi;
  return w;
}

inline Vec2 wrap_pi(const Vec2& v) { return {wrap_pi(v.x), wrap_pi(v.y)}; }

// Meyer polynomial ramp: beta(0)=0, beta(1)=1, beta(t)+beta(1-t)=1, C^3 joins.
inline double meyer_beta(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * t * (35.0 - 84.0 * t + (70.0 - 20.0 * t) * t * t);
}

// cos/sin transition pair; x in [0,1] runs across a transition strip.
inline double ramp_cos(double x) { return std::cos(0.5 * pi * meyer_beta(x)); }
inline double ramp_sin(double x) { return std::sin(0.5 * pi * meyer_beta(x)); }

}  // namespace qshear
