#pragma once

#include <cstdint>
#include <span>

namespace minicar {

/// Image-space capsule (segment with round caps). x coordinates are offsets
/// from the vertical image center line so that a mirrored scene produces an
/// exactly negated geometry; y is the usual row coordinate.
struct ThickSegment {
    double ax, ay;
    double bx, by;
    double radius;  // half thickness, pixels
};

/// Marks every pixel whose center lies within a capsule. Row-partitioned:
/// each row is written by exactly one iteration, so the parallel variant is
/// bit-identical to the serial reference for any thread count.
void fill_capsules_serial(std::span<const ThickSegment> segs, int width, int height,
                          std::uint8_t* pixels);
void fill_capsules_parallel(std::span<const ThickSegment> segs, int width, int height,
                            std::uint8_t* pixels);

/// Dispatches on the process-wide kernel mode (see set_parallel_kernels).
void fill_capsules(std::span<const ThickSegment> segs, int width, int height,
                   std::uint8_t* pixels);

}  // namespace minicar
