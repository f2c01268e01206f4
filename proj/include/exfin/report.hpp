#pragma once

// Machine-readable run reports with a stable, versioned schema, plus a plain
// text rendering.  A report is a flat list of named checks, each pass, fail,
// or skip; the overall verdict is "pass" exactly when no check failed.  For
// a fixed command line (including the seed) the JSON bytes are identical
// across runs.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "exfin/finset.hpp"

namespace exfin {

inline constexpr const char* kReportSchema = "exfin-report/1";

class ReportBuilder {
public:
    ReportBuilder(std::string command, std::string strategy, std::uint64_t seed, int max_size) {
        j_["schema"] = kReportSchema;
        j_["command"] = std::move(command);
        j_["strategy"] = std::move(strategy);
        j_["seed"] = seed;
        j_["max_size"] = max_size;
        j_["checks"] = nlohmann::ordered_json::array();
    }

    // Top-level context fields (document statistics, cap counters, ...).
    void note(const std::string& key, nlohmann::ordered_json value) {
        j_[key] = std::move(value);
    }

    void add(const std::string& name, const std::string& status, const std::string& detail,
             nlohmann::ordered_json extra = nlohmann::ordered_json::object()) {
        if (status != "pass" && status != "fail" && status != "skip")
            throw error("check status must be pass, fail, or skip");
        nlohmann::ordered_json c;
        c["name"] = name;
        c["status"] = status;
        c["detail"] = detail;
        for (auto& [k, v] : extra.items()) c[k] = v;
        j_["checks"].push_back(std::move(c));
        if (status == "fail") ++failed_;
        if (status == "skip") ++skipped_;
    }

    bool all_ok() const { return failed_ == 0; }
    int exit_code() const { return failed_ == 0 ? 0 : 1; }

    nlohmann::ordered_json finish() {
        j_["verdict"] = all_ok() ? "pass" : "fail";
        j_["failed"] = failed_;
        j_["skipped"] = skipped_;
        return j_;
    }

private:
    nlohmann::ordered_json j_;
    int failed_ = 0;
    int skipped_ = 0;
};

inline std::string render_json(const nlohmann::ordered_json& rep) { return rep.dump(2) + "\n"; }

inline std::string render_text(const nlohmann::ordered_json& rep) {
    std::string out = "exfin " + rep.value("command", std::string("?")) + " (strategy " +
                      rep.value("strategy", std::string("?")) + ", seed " +
                      std::to_string(rep.value("seed", std::uint64_t{0})) + ", max size " +
                      std::to_string(rep.value("max_size", 0)) + ")\n";
    for (const auto& [key, val] : rep.items()) {
        if (key == "schema" || key == "command" || key == "strategy" || key == "seed" ||
            key == "max_size" || key == "checks" || key == "verdict" || key == "failed" ||
            key == "skipped")
            continue;
        out += "  " + key + ": " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
    }
    if (rep.contains("checks"))
        for (const auto& c : rep["checks"]) {
            std::string status = c.value("status", std::string("?"));
            std::string tag = status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "SKIP";
            out += "[" + tag + "] " + c.value("name", std::string("?"));
            std::string detail = c.value("detail", std::string());
            if (!detail.empty()) out += ": " + detail;
            out += "\n";
            for (const auto& [k, v] : c.items()) {
                if (k == "name" || k == "status" || k == "detail") continue;
                out += "       " + k + " = " + (v.is_string() ? v.get<std::string>() : v.dump()) +
                       "\n";
            }
        }
    out += "verdict: " + rep.value("verdict", std::string("?"));
    if (rep.contains("failed"))
        out += " (" + std::to_string(rep["checks"].size()) + " checks, " +
               std::to_string(rep.value("failed", 0)) + " failed, " +
               std::to_string(rep.value("skipped", 0)) + " skipped)";
    out += "\n";
    return out;
}

} // namespace exfin
