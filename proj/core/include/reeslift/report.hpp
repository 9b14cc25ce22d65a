#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace reeslift {

using Json = nlohmann::ordered_json;

// One sub-check outcome with an arbitrary (exact) payload.
struct CheckDetail {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    Json payload;
};

// Structured pass/fail record of one verification, carrying parameters and
// counterexample payloads on failure.
struct VerificationReport {
    std::string check;
    Json params = Json::object();
    std::vector<CheckDetail> details;

    void add_pass(const std::string& name, Json payload = Json::object()) {
        details.push_back({name, "pass", std::move(payload)});
    }
    void add_fail(const std::string& name, Json payload = Json::object()) {
        details.push_back({name, "fail", std::move(payload)});
    }
    void add_skip(const std::string& name, Json payload = Json::object()) {
        details.push_back({name, "skipped", std::move(payload)});
    }
    void add(const std::string& name, bool ok, Json payload = Json::object()) {
        details.push_back({name, ok ? "pass" : "fail", std::move(payload)});
    }
    // Absorbs sub-report details under "prefix.".
    void merge(const VerificationReport& sub, const std::string& prefix) {
        for (const auto& d : sub.details)
            details.push_back({prefix + "." + d.name, d.status, d.payload});
    }

    bool passed() const {
        for (const auto& d : details)
            if (d.status == "fail") return false;
        return true;
    }
    bool skipped_only() const {
        for (const auto& d : details)
            if (d.status != "skipped") return false;
        return !details.empty();
    }
    std::size_t failure_count() const {
        std::size_t k = 0;
        for (const auto& d : details)
            if (d.status == "fail") ++k;
        return k;
    }

    Json to_json() const {
        Json out;
        out["check"] = check;
        out["params"] = params;
        out["status"] = skipped_only() ? "skipped" : (passed() ? "pass" : "fail");
        Json list = Json::array();
        for (const auto& d : details)
            list.push_back({{"name", d.name}, {"status", d.status}, {"payload", d.payload}});
        out["details"] = list;
        return out;
    }
};

}  // namespace reeslift
