#pragma once

#include <cmath>
#include <numbers>
#include <span>

namespace minicar {

inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }

    double norm() const { return std::hypot(x, y); }
    double norm_sq() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline Vec2 unit_vec(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Wraps an angle into (-pi, pi].
inline double normalize_angle(double a) {
    a = std::remainder(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

struct Pose {
    Vec2 pos;
    double heading = 0.0;

    Vec2 forward() const { return unit_vec(heading); }
    // Right-hand side of the travel direction.
    Vec2 right() const { return {std::sin(heading), -std::cos(heading)}; }

    Vec2 to_world(Vec2 local) const {
        const double c = std::cos(heading), s = std::sin(heading);
        return {pos.x + c * local.x - s * local.y, pos.y + s * local.x + c * local.y};
    }
    Vec2 to_local(Vec2 world) const {
        const double c = std::cos(heading), s = std::sin(heading);
        const Vec2 d = world - pos;
        return {c * d.x + s * d.y, -s * d.x + c * d.y};
    }
};

/// Oriented rectangle. half.x extends along the heading, half.y across it.
struct Obb {
    Vec2 center;
    Vec2 half;
    double heading = 0.0;

    void corners(Vec2 out[4]) const;
};

/// Separating-axis overlap test for two oriented rectangles.
bool obb_overlap(const Obb& a, const Obb& b);

/// Closest distance from point to segment [a, b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

}  // namespace minicar
