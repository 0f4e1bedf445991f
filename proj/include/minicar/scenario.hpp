#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minicar/behavior.hpp"
#include "minicar/control.hpp"
#include "minicar/sensors.hpp"
#include "minicar/trace.hpp"

namespace minicar {

/// Flat sectioned key-value file: `[section]` lines followed by `key = value`.
struct RawConfig {
    std::map<std::string, std::map<std::string, std::string>> sections;

    const std::string* find(const std::string& section, const std::string& key) const;
    void set(const std::string& section, const std::string& key, const std::string& value);
};

struct ConfigParseResult {
    RawConfig raw;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

ConfigParseResult parse_config(std::string_view text);
ConfigParseResult parse_config_file(const std::string& path);

/// Applies `section.key=value` overrides (the CLI's --param).
bool apply_override(RawConfig& raw, const std::string& spec, std::string* error);

struct PerceptionConfig {
    int row_count = 8;
    LateralMode mode = LateralMode::Calibrated;
    int min_rows = 2;
    double rate = 20.0;  // Hz
};

struct ScenarioConfig {
    std::string track_path;
    BehaviorMode mode = BehaviorMode::Lane;
    double duration = 180.0;
    double dt = 0.005;
    std::uint64_t seed = 1;
    double behavior_rate = 10.0;  // Hz; parking runs at 40
    double odometer_tick = 0.0;

    VehicleParams vehicle = VehicleParams::defaults();
    CameraConfig camera;
    PerceptionConfig perception;
    ControllerConfig controller;
    OvertakeConfig overtake;
    GapSearchConfig gap_search;
    std::vector<DistanceSensorConfig> sensors;

    std::string camera_dump_dir;  // PGM frames when non-empty
};

struct ScenarioBuildResult {
    std::optional<ScenarioConfig> config;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return config.has_value(); }
};

/// Typed view over the raw config; rates are validated against dt.
ScenarioBuildResult build_scenario(const RawConfig& raw);

/// Convenience: parse file, apply overrides, build. Relative track paths are
/// resolved against the scenario file's directory.
ScenarioBuildResult load_scenario(const std::string& path,
                                  std::span<const std::string> overrides);

}  // namespace minicar
