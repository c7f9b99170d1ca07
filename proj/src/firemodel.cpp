#include "swarmfire/firemodel.hpp"

#include <stdexcept>

namespace swarmfire {

double fireline_intensity(double flame_length, double alpha, double beta) {
  return alpha * std::pow(flame_length, beta);
}

double spread_rate(double intensity, double heat_of_combustion, double fuel_load) {
  return intensity / (heat_of_combustion * fuel_load);
}

FireFront grow(FireFront fire, double dt) {
  if (!fire.active()) return fire;
  fire.a += fire.spread_rate * dt;
  fire.b += fire.spread_rate * dt;
  return fire;
}

double area(const FireFront &fire) { return kPi * fire.a * fire.b; }

double polar_to_parametric(double a, double b, double polar) {
  // Polar and parametric angles always share a quadrant, so the principal
  // atan2 value is off by a whole number of turns at most.
  const double principal = std::atan2(a * std::sin(polar), b * std::cos(polar));
  return principal + kTwoPi * std::round((polar - principal) / kTwoPi);
}

double parametric_to_polar(double a, double b, double parametric) {
  const double principal = std::atan2(b * std::sin(parametric), a * std::cos(parametric));
  return principal + kTwoPi * std::round((parametric - principal) / kTwoPi);
}

double sector_area(const FireFront &fire, double lo, double hi) {
  if (!(lo >= 0.0 && lo < hi && hi <= kTwoPi)) throw std::invalid_argument("sector_area: need 0 <= lo < hi <= 2pi");
  return 0.5 * fire.a * fire.b * (polar_to_parametric(fire.a, fire.b, hi) - polar_to_parametric(fire.a, fire.b, lo));
}

std::vector<double> partition_sectors(const FireFront &fire, int n) {
  if (n < 1) throw std::invalid_argument("partition_sectors: need at least one sector");
  // Equal areas are equal parametric spans; map each back to a polar angle.
  std::vector<double> bounds(n + 1);
  bounds.front() = 0.0;
  for (int m = 1; m < n; ++m) bounds[m] = parametric_to_polar(fire.a, fire.b, kTwoPi * m / n);
  bounds.back() = kTwoPi;
  return bounds;
}

double growth_area(const FireFront &fire, double dt) {
  const double step = fire.spread_rate * dt;
  return kPi * ((fire.a + step) * (fire.b + step) - fire.a * fire.b);
}

FireFront apply_quench(FireFront fire, int n_active, double quench_rate, double dt) {
  if (!fire.active()) return fire;
  if (n_active <= 0) return grow(fire, dt);

  const double removed = n_active * quench_rate * dt;
  const double net = std::max(0.0, area(fire) + growth_area(fire, dt) - removed);
  const double gap = fire.a - fire.b;
  // pi * b' * (b' + gap) = net, positive root.
  const double b_new = 0.5 * (-gap + std::sqrt(gap * gap + 4.0 * net / kPi));
  fire.b = b_new;
  fire.a = b_new + gap;
  fire.quenched_area_total += removed;
  if (net <= kExtinguishedArea) fire.state = FireState::Extinguished;
  return fire;
}

Vec2 point_on_front(const FireFront &fire, double theta) {
  return fire.center + Vec2{fire.a * std::cos(theta), fire.b * std::sin(theta)};
}

double parametric_angle_of(const FireFront &fire, Vec2 p) {
  const Vec2 d = p - fire.center;
  double t = std::atan2(d.y / fire.b, d.x / fire.a);
  if (t < 0.0) t += kTwoPi;
  return t;
}

bool contains(const FireFront &fire, Vec2 p) {
  const Vec2 d = p - fire.center;
  const double u = d.x / fire.a;
  const double v = d.y / fire.b;
  return u * u + v * v <= 1.0;
}

FrontProjection nearest_on_front(const FireFront &fire, Vec2 p) {
  if (contains(fire, p)) return {p, 0.0};

  // Work in the first quadrant with the longer axis on x.
  const Vec2 d = p - fire.center;
  const bool swap = fire.b > fire.a;
  const double e0 = swap ? fire.b : fire.a;
  const double e1 = swap ? fire.a : fire.b;
  const double y0 = std::abs(swap ? d.y : d.x);
  const double y1 = std::abs(swap ? d.x : d.y);

  // The nearest point is (e0^2 y0 / (t + e0^2), e1^2 y1 / (t + e1^2)) where t
  // is the root of the convex, decreasing g(t) = r0^2 + r1^2 - 1. g(0) > 0 outside, so
  // Newton from t = 0 climbs monotonically to the root; the bracket guards
  // against round-off.
  const double e0sq = e0 * e0;
  const double e1sq = e1 * e1;
  double lo = 0.0;
  double hi = e0 * std::hypot(y0, y1);  // g(hi) <= 0
  double t = 0.0;
  for (int iter = 0; iter < 100; ++iter) {
    const double r0 = e0 * y0 / (t + e0sq);
    const double r1 = e1 * y1 / (t + e1sq);
    const double value = r0 * r0 + r1 * r1 - 1.0;
    if (value == 0.0) break;
    if (value > 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    const double slope = -2.0 * (r0 * r0 / (t + e0sq) + r1 * r1 / (t + e1sq));
    double next = slope < 0.0 ? t - value / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 1e-12 * std::max(1.0, t)) {
      t = next;
      break;
    }
    t = next;
  }
  const double x0 = e0sq * y0 / (t + e0sq);
  const double x1 = e1sq * y1 / (t + e1sq);
  Vec2 local = swap ? Vec2{x1, x0} : Vec2{x0, x1};
  if (d.x < 0.0) local.x = -local.x;
  if (d.y < 0.0) local.y = -local.y;
  const Vec2 point = fire.center + local;
  return {point, distance(point, p)};
}

double distance_to_front(const FireFront &fire, Vec2 p) { return nearest_on_front(fire, p).distance; }

}  // namespace swarmfire
