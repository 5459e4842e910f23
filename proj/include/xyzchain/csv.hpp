#pragma once

#include <filesystem>
#include <string>

#include "xyzchain/sweep.hpp"

namespace xyzchain {

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

inline constexpr const char* kSweepCsvHeader =
    "n,j,gamma,jz,b,t,pair_a,pair_b,concurrence,"
    "lambda1,lambda2,lambda3,lambda4,log_z";

std::string sweep_record_csv_row(const SweepRecord& r);

/// Writes the sweep as CSV (LF line endings, UTF-8). The file is written to
/// a temporary sibling and renamed into place, so a failed run leaves no
/// partial output.
void write_sweep_csv(const SweepResult& result, const std::filesystem::path& out);

/// Two-column scan output used by the critical-point command.
void write_scan_csv(const std::string& x_name,
                    const std::vector<std::pair<double, double>>& rows,
                    const std::filesystem::path& out);

}  // namespace xyzchain
