#pragma once

#include <span>
#include <vector>

#include "minicar/geometry.hpp"

namespace minicar {

struct Ray {
    Vec2 origin;
    Vec2 dir;  // unit length
};

struct RayHit {
    bool hit = false;
    double distance = 0.0;
    Vec2 point;
};

/// Entry distance of a ray into an oriented rectangle, or +inf on miss.
/// A ray starting inside reports distance 0.
double ray_obb_distance(const Ray& ray, const Obb& box);

/// Nearest hit per ray against a box soup, capped at max_range.
/// The serial version is the reference; the parallel one must match it
/// bit for bit (a min-reduction has no ordering sensitivity).
void raycast_boxes_serial(std::span<const Ray> rays, std::span<const Obb> boxes,
                          double max_range, std::span<RayHit> out);
void raycast_boxes_parallel(std::span<const Ray> rays, std::span<const Obb> boxes,
                            double max_range, std::span<RayHit> out);

/// Dispatches on the process-wide kernel mode (see set_parallel_kernels).
void raycast_boxes(std::span<const Ray> rays, std::span<const Obb> boxes,
                   double max_range, std::span<RayHit> out);

/// Enables the OpenMP kernel variants process-wide. Defaults to on.
void set_parallel_kernels(bool enabled);
bool parallel_kernels_enabled();

}  // namespace minicar
