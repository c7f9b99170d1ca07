#pragma once

#include <span>
#include <vector>

#include "swarmfire/geometry.hpp"

namespace swarmfire {

enum class FireState { Burning, UnderMitigation, Extinguished };

/// Area below which a fire under mitigation counts as extinguished, m^2.
inline constexpr double kExtinguishedArea = 1.0;

struct JoinRecord {
  int uav = -1;
  double time = 0.0;
};

/// One axis-aligned elliptical fire. Both semi-axes grow at the spread rate,
/// so a - b stays fixed for the lifetime of the fire.
struct FireFront {
  int id = 0;
  Vec2 center;
  double a = 0.0;            ///< semi-axis along x, m
  double b = 0.0;            ///< semi-axis along y, m
  double spread_rate = 0.0;  ///< m/s
  FireState state = FireState::Burning;
  std::vector<JoinRecord> joined_uavs;
  double quenched_area_total = 0.0;

  bool active() const { return state != FireState::Extinguished; }
};

/// Fireline intensity alpha * L_f^beta, kW/m.
double fireline_intensity(double flame_length, double alpha, double beta);

/// Rate of spread I_l / (H_c * F_m), m/s.
double spread_rate(double intensity, double heat_of_combustion, double fuel_load);

FireFront grow(FireFront fire, double dt);

double area(const FireFront &fire);

/// Continuous, strictly increasing map from polar angle to the parametric
/// ellipse angle: F(G) = arctan((a/b) tan G) on the branch that keeps F(0) = 0
/// and F(2 pi) = 2 pi.
double polar_to_parametric(double a, double b, double polar);

/// Inverse of polar_to_parametric.
double parametric_to_polar(double a, double b, double parametric);

/// Area of the sector between polar angles lo and hi (0 <= lo < hi <= 2 pi).
/// Throws std::invalid_argument for out-of-range angles.
double sector_area(const FireFront &fire, double lo, double hi);

/// Polar boundaries [G_1 .. G_{N+1}] of N equal-area sectors, G_1 = 0 and
/// G_{N+1} = 2 pi. Throws std::invalid_argument for N = 0.
std::vector<double> partition_sectors(const FireFront &fire, int n);

/// Area grown by one spread step of length dt.
double growth_area(const FireFront &fire, double dt);

/// Net-area update of a fire being quenched by `n_active` UAVs. Growth is
/// included; the axes are resized keeping a - b fixed.
FireFront apply_quench(FireFront fire, int n_active, double quench_rate, double dt);

Vec2 point_on_front(const FireFront &fire, double theta);

/// Parametric angle of p about the fire center in [0, 2 pi).
double parametric_angle_of(const FireFront &fire, Vec2 p);

struct FrontProjection {
  Vec2 point;       ///< nearest boundary point (p itself when inside)
  double distance;  ///< 0 when p is inside or on the boundary
};

/// Euclidean distance from p to the nearest point of the fire boundary.
FrontProjection nearest_on_front(const FireFront &fire, Vec2 p);
double distance_to_front(const FireFront &fire, Vec2 p);

bool contains(const FireFront &fire, Vec2 p);

}  // namespace swarmfire
