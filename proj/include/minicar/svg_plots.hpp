#pragma once

#include <optional>
#include <string>

#include "minicar/trace.hpp"
#include "minicar/track.hpp"

namespace minicar {

/// Writes deviation_vs_distance.svg (needs the track), sensors_vs_time.svg,
/// and parking_du.svg into the directory. Returns the files written.
std::vector<std::string> export_plots(const Trace& trace, const TrackModel* track,
                                      const std::string& dir, std::string* error = nullptr);

}  // namespace minicar
