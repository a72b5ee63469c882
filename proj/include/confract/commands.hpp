#pragma once

#include <string>
#include <vector>

#include "confract/config.hpp"
#include "confract/report.hpp"

namespace confract {

struct CommandOutput {
    Table table;
    std::vector<std::string> warnings;
};

/// Rows (t, x, y, A, B, C, D), t outermost.
CommandOutput eval_kernel_table(const RunConfig& cfg);
/// Rows (x, t, u, v, error_estimate), t outermost.
CommandOutput solve_table(const RunConfig& cfg);
/// Rows (x, t, h, f1, g1, g2, f2) at transformed points, or pushforward kernel rows when cfg.pushforward.
CommandOutput transform_table(const RunConfig& cfg);

}  // namespace confract
