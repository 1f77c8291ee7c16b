#pragma once

#include <json.hpp>

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

namespace qhopf {

enum class CheckStatus { pass, fail, finding, inconclusive };
const char* status_name(CheckStatus s);

struct Check {
    std::string id;
    std::string description;
    std::string paper_ref;
    CheckStatus status = CheckStatus::pass;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

struct Report {
    std::string version = "1";
    std::string scenario;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<Check> checks;
    std::int64_t timing_ms = 0;

    int count(CheckStatus s) const;
    bool all_passed() const { return count(CheckStatus::fail) == 0; }

    nlohmann::ordered_json to_json() const;
    /// Stable rendering; byte-identical for identical inputs.
    std::string to_json_string() const;
    void to_text(std::ostream& os) const;
};

enum class ReportFormat { json, text };

/// Writes to path ("" or "-" = standard output).  Throws domain_error on an
/// unwritable path.
void emit_report(const Report& r, ReportFormat format, const std::string& path);

/// Collects checks while timing the run; used by the scenario drivers.
class ReportBuilder {
public:
    explicit ReportBuilder(std::string scenario);
    void param(const std::string& key, const nlohmann::ordered_json& value);
    Check& add(std::string id, std::string description, std::string paper_ref, CheckStatus status,
               nlohmann::ordered_json data = nlohmann::ordered_json::object());
    Report finish();

private:
    Report report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qhopf
