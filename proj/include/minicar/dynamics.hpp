#pragma once

#include "minicar/geometry.hpp"

namespace minicar {

struct VehicleParams {
    double wheelbase = 0.26;
    double max_steer_left = 0.0;   // radians, set from the turning radii
    double max_steer_right = 0.0;
    double max_speed = 2.5;
    double body_length = 0.40;
    double body_width = 0.18;
    double rear_overhang = 0.06;  // rear axle to rear bumper
    double steer_rate = 0.0;      // rad/s
    double accel_rate = 0.0;      // m/s^2

    /// Defaults for the 1/10-scale car: 0.7 m minimum turning radius both
    /// sides, full steering sweep in 0.4 s, 0 to top speed in 1.0 s.
    static VehicleParams defaults();

    double front_overhang() const { return body_length - wheelbase - rear_overhang; }
    /// Body rectangle in world frame; the state pose sits on the rear axle.
    Obb footprint(const Pose& pose) const;
};

struct ControlCommand {
    double steering = 0.0;  // radians, positive steers left
    double speed = 0.0;     // m/s, negative reverses
};

struct VehicleState {
    Vec2 position;          // rear axle center
    double heading = 0.0;   // normalized to (-pi, pi]
    double speed = 0.0;
    double steering = 0.0;
    double odometer = 0.0;  // accumulates |v| dt, never decreases
    double yaw_rate = 0.0;

    Pose pose() const { return {position, heading}; }
};

/// Kinematic bicycle step with first-order slew on steering and speed.
VehicleState step(const VehicleState& state, const ControlCommand& cmd,
                  const VehicleParams& params, double dt);

/// L / |tan(steer)|; infinity for straight wheels.
double turning_radius(const VehicleParams& params, double steer);

}  // namespace minicar
