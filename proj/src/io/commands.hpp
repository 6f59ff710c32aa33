#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "io/json_io.hpp"
#include "resolution/resolution.hpp"

namespace folres {

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<int> max_depth;  // overrides the input document
    bool timing = false;
};

struct RunOutput {
    Json report;
    std::string dot;  // divisor graph, only for resolve / cs-sum
    int exit_code = 0;
};

const std::vector<std::string>& command_names();

/// Never throws for bad input: errors are serialized into the report and
/// mapped to exit codes 1 (input), 2 (internal), 3 (budget or cap).
RunOutput run_command(const std::string& command, const Json& input, const RunOptions& opts);

std::string divisor_dot(const ResolutionTree& tree);

}  // namespace folres
