#pragma once

#include <string_view>
#include <vector>

#include "minicar/control.hpp"
#include "minicar/dynamics.hpp"
#include "minicar/sensors.hpp"

namespace minicar {

// ---------------------------------------------------------------------------
// Lane-following with overtaking, ticked at 10 Hz.

enum class OvertakePhase {
    MoveForward,
    CheckObjectPlausible,
    ToLeftLaneLeftTurn,
    AlignRightTurn,
    PassObstacle,
    ReturnRightTurn,
    ReturnLeftTurn,
};

std::string_view phase_name(OvertakePhase p);

/// Lane commands pass through unmodified exactly in these phases.
bool lane_following_active(OvertakePhase p);

struct OvertakeConfig {
    double engage_distance = 0.9;    // front distance that arms the maneuver
    double align_threshold = 0.01;   // |ir_front - ir_rear| for parallel
    int plausibility_window = 5;     // samples, 0.5 s at 10 Hz
    double closing_tolerance = 0.05; // m/s slack around "not receding"
    double maneuver_speed = 0.5;     // during the forced-steering phases
    int pass_clear_samples = 3;      // consecutive fresh -1 samples to end the pass
};

struct OvertakeState {
    OvertakePhase phase = OvertakePhase::MoveForward;
    int counter_left = 0;
    int counter_right = 0;
    std::vector<SensorReading> window;  // recent front readings
    int clear_count = 0;
    double last_clear_ts = -1.0;
};

enum class Plausibility { Accept, Reject, Pending };

/// Linear-fit closing speed over the window. Accepts obstacles that are not
/// receding (stationary or slower, same direction) once close enough.
Plausibility plausibility_check(std::span<const SensorReading> window, int required_samples,
                                double engage_distance, double closing_tolerance);

struct OvertakeResult {
    ControlCommand cmd;
    bool phase_changed = false;
    OvertakePhase from = OvertakePhase::MoveForward;
};

OvertakeResult overtake_tick(OvertakeState& s, const SensorReading& us_front,
                             const SensorReading& us_front_right,
                             const SensorReading& ir_side_front,
                             const SensorReading& ir_side_rear, const ControlCommand& lane_cmd,
                             const OvertakeConfig& cfg, const VehicleParams& params);

// ---------------------------------------------------------------------------
// Sideways parking, ticked at 40 Hz.

enum class ParkPhase {
    TriggerMeasurements,
    FindBeginningOfGap,
    FindEndOfGap,
    ReturnToGap,     // best-fit only
    AdvanceToStart,  // Tr-0 .. Tr-1
    ReverseRight,    // Tr-1 .. Tr-2
    ReverseLeft,     // Tr-2 .. Tr-3
    Done,
    Failed,
};

std::string_view phase_name(ParkPhase p);

struct GapSearchConfig {
    double acting_margin_frac = 0.25;  // min gap = (1 + frac) * body length
    double min_gap = 0.0;              // derived from the margin when 0
    enum class Strategy { FirstFit, BestFit } strategy = Strategy::FirstFit;
    enum class Termination { TotalDistance, CurveBegin } termination = Termination::TotalDistance;
    double total_distance = 10.0;  // D_total
    double short_advance = 0.05;   // lower bound on the Tr-0..Tr-1 move
    double park_depth = 0.30;      // lateral offset from the drive line when parked
    double approach_speed = 0.4;
    double advance_speed = 0.3;
    double reverse_speed = 0.3;
    double stop_tolerance = 0.004;     // odometer slack at the Tr marks
    double crawl_speed = 0.04;         // taper floor near a mark
    double brake_time_const = 0.25;    // speed taper: v = remaining / tau
    int settle_ticks = 24;             // wait for steering slew while stopped
    double sensor_forward_offset = 0;  // gap sensor x offset; derived when 0
    double curve_kappa = 1.0 / 80.0;   // fitted |curvature| that counts as a curve
    int curve_frames = 10;             // consecutive curved frames = curve begin

    void derive(const VehicleParams& params);
};

struct GapRecord {
    double start_odo = 0.0;  // odometer at the d_U>0 -> d_U<0 edge
    double width = 0.0;
};

/// Narrowest gap still >= min_gap; ties broken by the earliest start.
/// Returns -1 when none qualifies.
int best_fit_select(std::span<const GapRecord> gaps, double min_gap);

struct ParkState {
    ParkPhase phase = ParkPhase::TriggerMeasurements;
    double odo_mark_1 = 0.0;
    double odo_mark_2 = 0.0;
    bool measuring = false;
    double last_du = SensorReading::kOutOfRange;
    double last_du_ts = -1.0;
    bool have_sample = false;
    double measured_gap = 0.0;
    std::vector<GapRecord> gaps;
    // Odometer marks of the static trajectory.
    double tr1_odo = 0.0;
    double tr2_odo = 0.0;
    double tr3_odo = 0.0;
    int settle = 0;
    // Signed along-strip travel, used by the best-fit return leg.
    double signed_pos = 0.0;
    double last_odometer = 0.0;
    double last_cmd_speed = 0.0;
    double confirm_odo = -1.0;
};

struct ParkResult {
    ControlCommand cmd;
    bool phase_changed = false;
    ParkPhase from = ParkPhase::TriggerMeasurements;
    bool gap_found = false;
    double gap_width = 0.0;
};

ParkResult park_tick(ParkState& s, const SensorReading& d_u, double odometer,
                     const ControlCommand& lane_cmd, bool curve_begin,
                     const GapSearchConfig& cfg, const VehicleParams& params);

}  // namespace minicar
