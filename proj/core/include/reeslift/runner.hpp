#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "reeslift/report.hpp"

namespace reeslift {

inline constexpr const char* kToolName = "reeslift";
inline constexpr const char* kToolVersion = "0.1.0";

// Unknown check name or malformed parameters (CLI exit code 2).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CheckRequest {
    std::string check;  // lift|cayley|annihilator|hilbert|pairing|schur|identities|all
    int m = 0;          // 0 means "derive" (n + 1 where a rectangular shape is required)
    int n = 3;
    int t = 3;
    int r_max = 4;
    std::uint64_t seed = 0;
    int trials = 50;
};

struct ReportEnvelope {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::string check;
    Json params;
    std::string status;  // pass | fail | skipped
    std::vector<CheckDetail> details;
    double elapsed_ms = 0.0;

    Json to_json() const;
    std::string to_text() const;
    // 0 pass, 1 verification failure, 3 skipped-only
    int exit_code() const;
};

const std::vector<std::string>& known_checks();

// Dispatches one named check suite. Deterministic for a fixed request and
// seed up to the elapsed_ms field.
ReportEnvelope run(const CheckRequest& request);

}  // namespace reeslift
