#pragma once

#include <optional>

#include "minicar/dynamics.hpp"
#include "minicar/perception.hpp"

namespace minicar {

struct ControllerConfig {
    double kp = 2.5;
    double ki = 8.5;
    double i_max = 0.0;        // accumulator clamp; 0 = derive from steering range
    double hold_time = 0.5;    // seconds to reuse the last valid error
    double decay = 0.9;        // per-tick decay of the held error afterwards
    double output_scale = 0.0; // radians per error unit; 0 = derive (40 px = half lock)
    double cruise_speed = 1.0;
    double curve_kappa_ref = 1.0 / 150.0;  // |curvature| that reaches the slowdown floor
    double min_speed_frac = 0.55;
    // Degraded-perception caution: slow down while the error is invalid and
    // for a few frames after the markings come back.
    double caution_speed_frac = 0.6;
    int caution_recovery_frames = 3;

    /// Fills the derived fields from the vehicle's steering range.
    void derive(const VehicleParams& params);
};

struct PiState {
    double acc = 0.0;     // integral of e, error-units * seconds
    double held_e = 0.0;  // last valid error
    double held_age = 0.0;
    bool has_held = false;
};

struct PiOutput {
    double steering = 0.0;  // radians, clamped to the vehicle limits
    double y = 0.0;         // controller output before scaling/clamping
    double e_used = 0.0;
};

/// y = kp*e + ki*integral(e); the held error bridges perception dropouts.
PiOutput pi_step(PiState& state, const LateralError& e, double dt,
                 const ControllerConfig& cfg, const VehicleParams& params);

/// Behavior override wins; otherwise cruise speed, reduced linearly with
/// |curvature| down to a floor.
double speed_policy(std::optional<double> curvature, std::optional<double> override_speed,
                    const ControllerConfig& cfg);

}  // namespace minicar
