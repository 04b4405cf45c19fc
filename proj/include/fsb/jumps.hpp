// jumps.hpp — Discontinuity detection on ordered series

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fsb {

struct JumpRecord {
    std::string observable;
    double location{0.0}; // midpoint of the flagged interval
    double left_value{0.0};
    double right_value{0.0};
    double magnitude{0.0};
    std::size_t index{0}; // left sample of the interval
    double row{0.0};      // axis2 coordinate for grid sweeps
    int root_index{0};    // nearest zero of J_0, 0 when not annotated
    double nearest_root{0.0}; // z_k * root_scale
    double relative_distance{0.0};
};

/// Flags interval i when |y_{i+1} - y_i| > threshold + 5 * median of the six
/// nearest unflagged gaps. Needs x ascending and at least 8 points. With a
/// root_scale the nearest z_k * root_scale is attached to every record.
std::vector<JumpRecord> detect_jumps(const std::vector<double>& x, const std::vector<double>& y,
                                     double threshold, const std::string& observable = "y",
                                     std::optional<double> root_scale = std::nullopt);

} // namespace fsb
