#ifndef EXCALG_REPORT_HPP
#define EXCALG_REPORT_HPP

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace excalg {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kReportSchema = "excalg-report-v1";

/*
 * Machine-readable check records. A report serializes to JSON that is
 * byte-identical across runs with the same configuration; the only
 * run-dependent data lives under the "timing" key, which consumers strip
 * before golden comparisons (see report_without_timing).
 */
struct Check {
    std::string name;
    bool pass = true;
    nlohmann::ordered_json witness; // null unless the check failed or carries data
    std::string note;
};

struct RunConfig {
    std::string field = "q"; // "q" or "fp:<p>"
    std::uint64_t seed = 1;
    std::size_t samples = 0; // 0 = per-suite defaults
    bool exhaustive = false;
};

struct Report {
    std::string suite;
    RunConfig config;
    std::vector<Check> checks;
    long wall_ms = 0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failed() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }

    Check& add(const std::string& name, bool ok) {
        checks.push_back(Check{name, ok, nullptr, ""});
        return checks.back();
    }
    Check& add(const std::string& name, bool ok, nlohmann::ordered_json witness) {
        checks.push_back(Check{name, ok, std::move(witness), ""});
        return checks.back();
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = kReportSchema;
        j["version"] = kVersion;
        j["suite"] = suite;
        j["config"] = {{"field", config.field},
                       {"seed", config.seed},
                       {"samples", config.samples},
                       {"exhaustive", config.exhaustive}};
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json e;
            e["name"] = c.name;
            e["status"] = c.pass ? "pass" : "fail";
            if (!c.witness.is_null()) e["witness"] = c.witness;
            if (!c.note.empty()) e["note"] = c.note;
            j["checks"].push_back(std::move(e));
        }
        j["summary"] = {{"total", checks.size()}, {"failed", failed()}};
        j["timing"] = {{"wall_ms", wall_ms}};
        return j;
    }
};

// Serialization with the run-dependent timing data removed; this is the
// form used for determinism comparisons and golden files.
inline std::string report_without_timing(const Report& r) {
    auto j = r.to_json();
    j.erase("timing");
    return j.dump(2) + "\n";
}

} // namespace excalg

#endif // EXCALG_REPORT_HPP
