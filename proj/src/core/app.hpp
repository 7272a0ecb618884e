#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartan.hpp"
#include "errors.hpp"
#include "scalar.hpp"

namespace preproj::app {

struct RunConfig {
    cartan::CartanData data;
    Field field = Field::rationals();
    size_t cap = 1'000'000;
    uint64_t seed = 0;
};

/// Parses and validates a JSON config.  Throws ParseError, or ValidationError
/// whose message starts with the offending field path.
RunConfig load_config(const std::string& json_text);
RunConfig load_config_file(const std::string& path);
/// "rational" or "fp:<p>".
Field parse_field(const std::string& spec);

struct OutputOptions {
    bool json = false;
    bool dot = false;
    bool basis = false;
};

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// check, algebra, weyl, stt, mutation-graph or verify.
CommandResult run_command(const RunConfig& cfg, const std::string& command, const OutputOptions& opts);

const std::vector<std::string>& command_names();

struct CheckLine {
    std::string name;
    bool ok = true;
    std::string detail;
};

/// Every check that `verify` runs, in order.
std::vector<CheckLine> verify_suite(const RunConfig& cfg);

/// Exit status for an error code: 1 for failed verification, 2 for bad input.
int exit_code_for(ErrorCode code);

}  // namespace preproj::app
