// output.hpp — CSV tables and key=value run metadata

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fsb/sweep.hpp"

namespace fsb {

inline constexpr const char* kToolVersion = "1.0.0";

/// Column names of the point table, in order.
std::vector<std::string> csv_columns(bool analytic);

void write_points_csv(std::ostream& out, const std::vector<PointResult>& points, bool analytic);
void write_jumps_csv(std::ostream& out, const std::vector<JumpRecord>& jumps);
void write_metadata(std::ostream& out, const SweepResult& result);

struct OutputFiles {
    std::filesystem::path points;
    std::filesystem::path jumps;
    std::filesystem::path metadata;
};

/// <prefix>.csv, <prefix>_jumps.csv and <prefix>.meta.
OutputFiles write_sweep(const SweepResult& result, const std::filesystem::path& prefix);

/// 17 significant digits, "nan" for non-finite values.
std::string format_number(double value);

} // namespace fsb
