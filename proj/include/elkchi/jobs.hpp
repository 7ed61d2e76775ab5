#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace elkchi {

using Json = nlohmann::ordered_json;

struct JobOptions {
    bool oracle = false;                    // cross-check degrees geometrically (n <= 3)
    std::optional<std::string> debug_order; // "local" | "global": dump the standard basis
};

struct JobOutcome {
    Json report;
    int exit_code = 0; // 0 ok, 1 malformed input, 2 engine error
};

// Runs a parsed job object and produces the deterministic report. Never
// throws; failures are encoded in the report and exit code.
JobOutcome run_job(const Json& job, const JobOptions& options = {});

// Convenience wrapper: parses `text` as JSON first (malformed -> exit 1).
JobOutcome run_job_text(const std::string& text, const JobOptions& options = {});

extern const char* const kEngineVersion;

} // namespace elkchi
