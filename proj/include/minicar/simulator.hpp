#pragma once

#include <span>
#include <string>

#include "minicar/scenario.hpp"
#include "minicar/trace.hpp"
#include "minicar/track.hpp"

namespace minicar {

/// Oriented-rectangle overlap between the vehicle body and any obstacle.
bool check_collision(const Obb& footprint, std::span<const Obb> obstacles);

/// Flags an off-track episode once the deviation stays beyond
/// lane_width/2 + body_width/2 for the dwell time.
class OffTrackMonitor {
public:
    OffTrackMonitor(double lane_width, double body_width, double dwell = 0.2)
        : threshold_(lane_width / 2.0 + body_width / 2.0), dwell_(dwell) {}

    /// Returns true exactly once per episode, at the tick the dwell elapses.
    bool update(double deviation, double dt);
    double threshold() const { return threshold_; }

private:
    double threshold_;
    double dwell_;
    double over_time_ = 0.0;
    bool fired_ = false;
};

struct RunResult {
    Trace trace;
    Metrics metrics;
    bool scenario_failed = false;  // collision or parking failure
};

/// Fixed-step closed loop: sensors (if due) -> perception (if due) ->
/// control -> behavior (if due) -> dynamics. Identical config and seed give
/// a byte-identical trace.
RunResult run_scenario(const ScenarioConfig& cfg, const TrackModel& track);

}  // namespace minicar
