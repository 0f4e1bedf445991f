#pragma once

#include <optional>
#include <span>
#include <vector>

#include "minicar/geometry.hpp"
#include "minicar/sensors.hpp"

namespace minicar {

struct ScanLineResult {
    int row = 0;
    // Pixels from the vertical center line to the first marking pixel on
    // each side; absent when the row has none on that side.
    std::optional<double> left;
    std::optional<double> right;
};

std::vector<ScanLineResult> scan_rows(const CameraImage& img, std::span<const int> rows);

enum class LateralMode { Calibrated, Balanced };

struct LateralError {
    double e = 0.0;  // positive when the vehicle sits right of the desired line
    bool valid = false;
    int rows = 0;
};

/// Calibrated mode compares the right-hand distance against a per-row target;
/// balanced mode equalizes both sides. Targets align index-wise with `scans`.
LateralError lateral_error(std::span<const ScanLineResult> scans, LateralMode mode,
                           std::span<const double> targets, int min_rows = 2);

struct ArcFit {
    double curvature = 0.0;  // 1/pixels, positive bends left
    int inliers = 0;
    double rms = 0.0;
    bool degenerate = false;
};

/// Least-squares circle through (center-offset, row) points with one
/// outlier-rejection refit pass.
ArcFit fit_arc(std::span<const Vec2> centers);

/// Evenly spaced scan rows through the lower region of interest.
std::vector<int> default_scan_rows(const CameraConfig& cfg, int count = 8);

/// Per-row right-hand distance targets measured from a synthetic frame of a
/// straight road with the vehicle centered on the right lane.
std::vector<double> calibrate_targets(const CameraConfig& cfg, double lane_width,
                                      std::span<const int> rows);

/// Row midpoints usable for arc fitting: rows with both sides present.
std::vector<Vec2> center_points(std::span<const ScanLineResult> scans);

}  // namespace minicar
