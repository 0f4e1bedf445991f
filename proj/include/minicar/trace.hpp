#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minicar/behavior.hpp"
#include "minicar/dynamics.hpp"
#include "minicar/track.hpp"

namespace minicar {

enum class BehaviorMode { Lane, Overtake, Park };

// Phase column encoding: 0 = plain lane following, 1.. = overtaking phases,
// 10.. = parking phases.
int phase_code(OvertakePhase p);
int phase_code(ParkPhase p);
std::string_view phase_code_name(int code);
int phase_code_from_name(std::string_view name);  // -1 if unknown

struct TraceRecord {
    double t = 0.0;
    double x = 0.0, y = 0.0, psi = 0.0;
    double v = 0.0, delta = 0.0, odometer = 0.0;
    double e = 0.0, acc = 0.0, y_cmd = 0.0;
    int phase = 0;
};

struct TraceEvent {
    std::int64_t tick = 0;
    double t = 0.0;
    std::string text;
};

struct Trace {
    std::vector<std::string> sensor_ids;
    std::vector<TraceRecord> records;
    std::vector<double> readings;  // records.size() x sensor_ids.size(), row-major
    std::vector<TraceEvent> events;

    double reading(std::size_t record, std::size_t sensor) const {
        return readings[record * sensor_ids.size() + sensor];
    }
    int sensor_index(std::string_view id) const;
};

bool export_trace(const Trace& trace, const std::string& path);

struct TraceLoadResult {
    bool ok = false;
    std::string error;
    Trace trace;
};
TraceLoadResult load_trace(const std::string& path);

struct ParkingMetrics {
    bool attempted = false;
    bool done = false;
    bool failed = false;
    double gap_width = 0.0;
    double confirm_time = -1.0;
    double stop_time = -1.0;
    double duration = 0.0;  // gap confirmation to full stop
    double final_heading_err_deg = 0.0;
    double front_clearance = 0.0;
    double rear_clearance = 0.0;

    bool operator==(const ParkingMetrics&) const = default;
};

struct PhaseDuration {
    int phase = 0;
    double seconds = 0.0;
    bool operator==(const PhaseDuration&) const = default;
};

struct OvertakeMetrics {
    int maneuvers = 0;  // completed full cycles
    std::vector<PhaseDuration> phase_durations;
    bool operator==(const OvertakeMetrics&) const = default;
};

struct Metrics {
    double duration = 0.0;
    double distance = 0.0;
    double mean_abs_deviation = 0.0;
    double max_abs_deviation = 0.0;
    double max_dev_s = 0.0;       // right-lane arc length at the maximum
    double max_dev_t = 0.0;
    bool max_dev_in_gap = false;  // foot point inside an intersection gap
    int collisions = 0;
    int off_track = 0;
    ParkingMetrics parking;
    OvertakeMetrics overtake;

    bool operator==(const Metrics&) const = default;
};

/// Everything here derives from the trace plus static scene data, so metrics
/// recomputed from an exported trace match the live values exactly.
Metrics compute_metrics(const Trace& trace, const TrackModel& track, const VehicleParams& params,
                        double gap_margin = 0.0);

std::string metrics_to_json(const Metrics& m);

}  // namespace minicar
