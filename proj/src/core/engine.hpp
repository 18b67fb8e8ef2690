#pragma once

#include <json.hpp>

#include "problem.hpp"

namespace duality {

inline constexpr const char* kEngineVersion = "0.1.0";

struct EngineOptions {
    std::string order = "grevlex"; // grevlex | lex
    std::string phi;               // membership queries
    std::string split;             // overrides the problem's split line
    std::string section;           // overrides the problem's section line
    std::uint64_t seed = 2026;
    int trials = 100;
};

EngineOptions parse_options(const std::string& options_json);

// Runs one command and wraps the result in the standard report envelope
// {command, engine_version, input_digest, result}. Output is fully
// deterministic: keys sorted, canonical polynomial printing.
nlohmann::json run_command(const Problem& prob, const std::string& command,
                           const EngineOptions& opts = {});

std::string input_digest(const std::string& text); // FNV-1a 64, hex

} // namespace duality
