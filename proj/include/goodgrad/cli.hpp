#pragma once

#include <string>

namespace goodgrad::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode { kOk = 0, kVerificationFailure = 1, kInvalidInput = 2 };

struct CliRequest {
    std::string subcommand;
    /// A, B, C, D or GL.
    std::string family;
    std::string partition;
    std::string composition;
    int q = 0;
    /// Comma-separated diagonal of H for `verify` (fractions allowed).
    std::string diagonal;
    /// Comma-separated pyramid shifts for `render`; empty means the base pyramid.
    std::string shifts;
    std::string algebra;
    std::string orbit;
    bool mirrors = false;
    /// `richardson`: also run the sampling oracle with this many samples (0 = off).
    int samples = 0;
    std::string format = "text";
    int order = 20;
};

struct CliResult {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

/// Validates the flags required by the subcommand, dispatches, and renders
/// the report. Never throws.
CliResult run(const CliRequest& request);

}  // namespace goodgrad::cli
