#pragma once

#include <optional>
#include <span>

#include "swarmfire/firemodel.hpp"
#include "swarmfire/scenario.hpp"
#include "swarmfire/vehicle.hpp"

namespace swarmfire {

struct DetectedFire {
  int fire = -1;
  Vec2 center;
  double a = 0.0;
  double b = 0.0;
};

struct SensorReading {
  int uav = -1;
  double time = 0.0;
  double temperature = 0.0;       ///< K
  double temperature_rate = 0.0;  ///< K/s
  int candidate = -1;             ///< nearest active fire within R_sen, -1 if none
  double candidate_distance = 0.0;
  double probability = 0.0;       ///< detection probability for the candidate
  double heading_to_fire = 0.0;   ///< rad, meaningful when probability > 0
  std::optional<DetectedFire> detected;  ///< present iff probability >= gamma
};

/// Temperature of the synthetic field: ambient plus a Gaussian shoulder around
/// each active fire, combined by max. Equals t_fire inside a fire.
double temperature_at(std::span<const FireFront> fires, Vec2 p, double t_ambient, double t_fire, double sigma_t);

/// Gaussian detection model, zero beyond the sensing radius.
double detection_probability(double dist, double sigma, double sensing_radius);

/// One sensor sample. The temperature rate is the backward difference
/// against `prev` (0 on the first sample). `temperature_noise` is added to
/// the field value; it is zero unless sensor noise is configured.
SensorReading sample(const UavState &uav, std::span<const FireFront> fires, const std::optional<SensorReading> &prev,
                     double time, double dt, const SensingParams &params, double temperature_noise = 0.0);

}  // namespace swarmfire
