#include "qhopf/report.hpp"

#include <fstream>
#include <iostream>

#include "qhopf/errors.hpp"

namespace qhopf {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::finding: return "finding";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

int Report::count(CheckStatus s) const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = version;
    j["scenario"] = scenario;
    j["parameters"] = parameters;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["description"] = c.description;
        cj["paper_ref"] = c.paper_ref;
        cj["status"] = status_name(c.status);
        cj["data"] = c.data;
        j["checks"].push_back(std::move(cj));
    }
    j["summary"] = {{"pass", count(CheckStatus::pass)},
                    {"fail", count(CheckStatus::fail)},
                    {"finding", count(CheckStatus::finding)},
                    {"inconclusive", count(CheckStatus::inconclusive)}};
    j["timing_ms"] = timing_ms;
    return j;
}

std::string Report::to_json_string() const { return to_json().dump(2) + "\n"; }

void Report::to_text(std::ostream& os) const {
    os << "scenario " << scenario << "  (schema " << version << ")\n";
    if (!parameters.empty()) os << "parameters: " << parameters.dump() << "\n";
    for (const auto& c : checks) {
        os << "[" << status_name(c.status) << "] " << c.id << " — " << c.description << "  (" << c.paper_ref
           << ")\n";
        if (!c.data.empty()) os << "        data: " << c.data.dump() << "\n";
    }
    os << "summary: pass=" << count(CheckStatus::pass) << " fail=" << count(CheckStatus::fail)
       << " finding=" << count(CheckStatus::finding) << " inconclusive=" << count(CheckStatus::inconclusive)
       << "  (" << timing_ms << " ms)\n";
}

void emit_report(const Report& r, ReportFormat format, const std::string& path) {
    auto write = [&](std::ostream& os) {
        if (format == ReportFormat::json)
            os << r.to_json_string();
        else
            r.to_text(os);
    };
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw domain_error("cannot open report path: " + path);
    write(out);
    if (!out) throw domain_error("failed writing report to: " + path);
}

ReportBuilder::ReportBuilder(std::string scenario) : start_(std::chrono::steady_clock::now()) {
    report_.scenario = std::move(scenario);
}

void ReportBuilder::param(const std::string& key, const nlohmann::ordered_json& value) {
    report_.parameters[key] = value;
}

Check& ReportBuilder::add(std::string id, std::string description, std::string paper_ref,
                          CheckStatus status, nlohmann::ordered_json data) {
    report_.checks.push_back(
        Check{std::move(id), std::move(description), std::move(paper_ref), status, std::move(data)});
    return report_.checks.back();
}

Report ReportBuilder::finish() {
    report_.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
    return report_;
}

}  // namespace qhopf
