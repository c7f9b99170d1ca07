#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace swarmfire {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 &operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2 &operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2 &operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline double bearing(Vec2 v) { return std::atan2(v.y, v.x); }
inline Vec2 unit_from_angle(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double angle) {
  double w = std::remainder(angle, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  return w;
}

/// Axis-aligned search region.
struct Rect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double diagonal() const { return std::hypot(width(), height()); }
  bool contains(Vec2 p) const { return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max; }
  Vec2 clamp(Vec2 p) const { return {std::clamp(p.x, x_min, x_max), std::clamp(p.y, y_min, y_max)}; }
  friend bool operator==(const Rect &, const Rect &) = default;
};

/// Projects `p` onto the closed disk of `radius` about `center`.
inline Vec2 project_to_disk(Vec2 p, Vec2 center, double radius) {
  const Vec2 d = p - center;
  const double r = norm(d);
  if (r <= radius) return p;
  return center + d * (radius / r);
}

}  // namespace swarmfire
