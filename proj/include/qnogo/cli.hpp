#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace qnogo::cli {

enum class Verdict { confirmed, refuted, error };

std::string to_string(Verdict v);

using Json = nlohmann::ordered_json;

/// Outcome of one subcommand run. `elapsed_ms` is diagnostic only and is
/// written to stderr, never into the rendered report, so reports with fixed
/// seeds stay byte-identical across runs.
struct RunReport {
    std::string command;
    Json inputs;
    Json result;
    Verdict verdict = Verdict::error;
    double elapsed_ms = 0.0;
};

enum class Format { json, text };

/// Renders the report for stdout. JSON and text carry the same data.
std::string render_report(const RunReport& report, Format format);

// Exit codes: 0 confirmed, 1 check ran but the predicted outcome is absent,
// 2 usage error, 3 unreadable or invalid input.
inline constexpr int kExitConfirmed = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

/// Parses argv, dispatches the subcommand, prints the rendered report to
/// stdout and diagnostics to stderr. Returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace qnogo::cli
