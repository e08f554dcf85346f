#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "phinewton/valuation.hpp"

namespace phinewton::cli {

enum class OutputFormat { Text, Json, Svg };

struct CliConfig {
    std::string input;  // expression, or a path when input_is_file
    bool input_is_file = false;
    BigInt prime = 0;
    std::optional<std::string> phi;
    OutputFormat format = OutputFormat::Text;
    std::uint64_t seed = 0;
    bool check_only = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInapplicable = 2;

struct RunResult {
    int exit_code = kExitOk;
    std::string output;
    std::string error;
};

/// Parses, analyzes and renders; never throws.
RunResult run(const CliConfig& config);

/// Configuration embedded in a JSON report, for replaying it.
CliConfig config_from_report(const nlohmann::ordered_json& report);

/// Full command-line entry point (flag parsing, env, output file).
int main(int argc, char** argv);

}  // namespace phinewton::cli
