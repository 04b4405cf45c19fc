// config.hpp — INI configuration with one-to-one dotted keys (system.h_z1, sweep.points, ...)

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fsb/sweep.hpp"

namespace fsb {

struct RunConfig {
    SystemParams system;
    BathParams bath;
    RunOptions options;
    Axis axis1{"h_z1_over_omega", 0.0, 6.0, 600};
    std::optional<Axis> axis2;
    double p0_threshold{0.01};
    double ratio_threshold{0.02};

    SweepSpec sweep_spec() const;
};

/// Every accepted key, "section.name".
const std::vector<std::string>& config_keys();

/// Numbers with an optional "pi" suffix: "0.25pi", "pi", "40".
double parse_quantity(const std::string& text);

void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Reads an INI file ([system], [bath], [numerics], [sweep]) on top of `base`.
/// Unknown sections or keys are a ConfigError.
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

} // namespace fsb
