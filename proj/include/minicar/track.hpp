#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minicar/geometry.hpp"

namespace minicar {

enum class SegmentKind { Straight, Arc, IntersectionGap };

/// One piece of the road reference line (the center marking).
struct Segment {
    SegmentKind kind = SegmentKind::Straight;
    Pose start;
    double length = 0.0;  // reference-line arc length
    double radius = 0.0;  // arcs only; signed, >0 turns left
    double sweep = 0.0;   // arcs only; >0

    bool is_arc() const { return kind == SegmentKind::Arc; }
    /// Pose on a lateral offset curve, d > 0 to the right of the reference line.
    Pose pose_at(double s_offset_curve, double d) const;
    /// Arc length of the offset curve at lateral offset d.
    double offset_length(double d) const;
    Vec2 arc_center() const;
};

struct ObstacleBox {
    Vec2 center;
    Vec2 half;  // x along heading, y across
    double heading = 0.0;

    Obb obb() const { return {center, half, heading}; }
};

/// Box on the sideways parking strip, placed along the anchor segment.
struct ParkBox {
    double start_s = 0.0;     // strip-axis offset of the box's near end
    double gap_before = 0.0;  // clear distance to the previous box (or strip start)
    double width = 0.0;       // across the strip axis
    double length = 0.0;      // along the strip axis
    double lateral = 0.0;     // clearance between right lane marking and box edge
};

struct ParkingStrip {
    int anchor_segment = 0;
    std::vector<ParkBox> boxes;
};

enum class LaneId { Right, Left };

struct Deviation {
    double value = 0.0;  // signed, positive = right of the skeleton
    bool off_track = false;
};

enum class MarkingKind { Left, Center, Right };

struct MarkingPolyline {
    MarkingKind kind;
    std::vector<Vec2> pts;
};

struct TrackModel {
    std::vector<Segment> segments;
    double lane_width = 0.4;
    double scale = 1.0;
    bool closed = false;
    double dash_emit = 0.2;
    double dash_skip = 0.2;
    std::vector<ObstacleBox> obstacles;
    std::optional<ParkingStrip> parking_strip;

    /// Lateral offset of a lane skeleton from the reference line.
    double lane_offset(LaneId lane) const {
        return lane == LaneId::Right ? lane_width / 2.0 : -lane_width / 2.0;
    }

    double lane_length(LaneId lane) const;
    Pose skeleton_pose(LaneId lane, double s) const;

    /// Signed distance to the nearest lane skeleton (right or left lane).
    Deviation deviation_from_skeleton(Vec2 p) const;
    /// Same, restricted to one lane; also reports the skeleton arc length of the foot point.
    Deviation deviation_from_lane(Vec2 p, LaneId lane, double* s_at_foot = nullptr) const;

    /// All marking polylines in world frame; cached after finalize().
    const std::vector<MarkingPolyline>& markings() const { return markings_; }

    /// Obstacles plus parking-strip boxes as world-frame rectangles.
    std::vector<ObstacleBox> all_boxes() const;
    std::vector<ObstacleBox> parking_boxes() const;

    /// World pose of a point on the parking strip axis (along the right lane marking).
    Pose strip_pose(double s) const;

    /// Recomputes caches (lane lengths, markings). Must be called after direct edits.
    void finalize();

private:
    std::vector<MarkingPolyline> markings_;
    std::vector<double> cum_len_right_;
    std::vector<double> cum_len_left_;

    const std::vector<double>& cum_len(LaneId lane) const {
        return lane == LaneId::Right ? cum_len_right_ : cum_len_left_;
    }
};

struct Diagnostic {
    int line = 0;
    int col = 0;
    std::string message;
};

std::string format_diagnostics(std::string_view file, std::span<const Diagnostic> diags);

struct TrackParseResult {
    std::optional<TrackModel> model;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return model.has_value(); }
};

/// Parses the track description language. All lengths are multiplied by the
/// header's scale factor, so downstream users never see the scale.
TrackParseResult parse_track(std::string_view text);
TrackParseResult parse_track_file(const std::string& path);

/// Canonical text form; parse(serialize(parse(x))) == parse(x).
std::string serialize_track(const TrackModel& track);

std::vector<MarkingPolyline> build_markings(const TrackModel& track);

}  // namespace minicar
