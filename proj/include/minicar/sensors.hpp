#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minicar/dynamics.hpp"
#include "minicar/geometry.hpp"
#include "minicar/raycast.hpp"
#include "minicar/track.hpp"

namespace minicar {

struct NoiseModel {
    enum class Kind { None, Gaussian, Dropout, StuckAt };
    Kind kind = Kind::None;
    double sigma = 0.0;       // gaussian
    double p = 0.0;           // dropout
    double stuck_value = 0.0; // stuck-at
    double stuck_from = 0.0;
    double stuck_duration = 0.0;
};

struct DistanceSensorConfig {
    std::string id;
    Pose mount;                 // relative to the rear axle
    double opening_angle = 0.0; // radians, full cone
    double max_range = 0.0;
    int ray_count = 1;
    double period = 0.0;        // seconds between samples
    NoiseModel noise;
};

struct SensorReading {
    static constexpr double kOutOfRange = -1.0;
    int sensor = 0;
    double timestamp = 0.0;
    double d = kOutOfRange;

    bool valid() const { return d >= 0.0; }
};

struct RayHitSet {
    std::vector<RayHit> hits;
};

/// Fans `ray_count` rays across the opening angle from the world-frame
/// mount pose and intersects them with the box soup.
RayHitSet cast_sensor_rays(const DistanceSensorConfig& cfg, const Pose& vehicle,
                           std::span<const Obb> world);

/// Nearest hit across the fan, or the -1 sentinel.
SensorReading ray_distance(const DistanceSensorConfig& cfg, const Pose& vehicle,
                           std::span<const Obb> world, double timestamp);

/// Noise application is a pure function of (seed, stream, sample index), so
/// sensors may be evaluated in any order.
SensorReading apply_noise(const SensorReading& r, const NoiseModel& m, double max_range,
                          std::uint64_t seed, std::uint64_t stream, std::uint64_t sample);

struct CameraConfig {
    double mount_x = 0.30;   // forward of the rear axle
    double mount_y = 0.0;
    double height = 0.20;
    double pitch = -20.0 * kPi / 180.0;  // negative looks down
    double hfov = 90.0 * kPi / 180.0;
    double vfov = 0.0;       // 0 derives square pixels from hfov
    int width = 752;
    int height_px = 480;
    double period = 0.05;
    double thickness_px = 1.5;   // capsule radius
    double view_distance = 6.0;  // marking cull radius
    double near_plane = 0.05;
    double roi_fraction = 0.4;   // perception reads the lower fraction of rows

    double focal_x() const;
    double focal_y() const;
    int roi_first_row() const;
};

struct CameraImage {
    int width = 0;
    int height = 0;
    double timestamp = 0.0;
    std::vector<std::uint8_t> pixels;  // row-major, 1 = marking

    std::uint8_t at(int col, int row) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
};

/// Projects the track's marking polylines through a pinhole model onto a
/// binary image. Ground is the z=0 plane; the camera yaws with the vehicle.
CameraImage render_camera(const CameraConfig& cfg, const Pose& vehicle,
                          const TrackModel& track, double timestamp);

/// Encoder readout, optionally floor-quantized to a tick size.
double read_odometer(const VehicleState& state, double tick_size = 0.0);
double read_heading(const VehicleState& state);

bool write_pgm(const CameraImage& img, const std::string& path);

/// The paper's sensor suite: ultrasonic front + front/right, two side
/// infrareds on the right, two rear infrareds.
std::vector<DistanceSensorConfig> default_sensor_suite(const VehicleParams& params);

}  // namespace minicar
