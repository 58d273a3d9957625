#pragma once

#include <string>
#include <vector>

namespace xgd {

/// Parameter sweep over one family parameter, rendered as CSV.
///   family    : "ghz", "w" (parameter "p") or "bell" (parameter "c1".."c3")
///   outputs   : columns among discord_1_23, d12, d13, residual, k1, k2, k3
///   c1,c2,c3  : base Bell parameters; the swept one is overwritten per row
/// Requires from <= to and steps >= 2.
struct SweepSpec {
    std::string family;
    std::string parameter;
    double from = 0.0;
    double to = 1.0;
    int steps = 2;
    std::vector<std::string> outputs = {"discord_1_23", "d12", "d13", "residual"};
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
};

/// Run the sweep and return CSV text: a header row naming the parameter and
/// the output columns, then one row per parameter value with 12 significant
/// digits, '.' decimal point, newline-terminated. Throws
/// std::invalid_argument for unknown families, parameters or column names.
std::string run_sweep(const SweepSpec& spec);

}  // namespace xgd
