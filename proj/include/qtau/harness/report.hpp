#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qtau/harness/suite.hpp"

namespace qtau {

inline constexpr const char* kReportSchema = "qtau-report/1";

enum class ReportFormat { Json, Text };

inline ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "text") return ReportFormat::Text;
    throw ConfigError("unknown report format: " + s);
}

inline nlohmann::ordered_json scenario_json(const Scenario& sc) {
    nlohmann::ordered_json j;
    j["suite"] = suite_name(sc.suite);
    j["N"] = sc.N;
    j["levels"] = sc.levels;
    j["parametrization"] = std::string(1, parametrization_name(sc.param));
    j["checks"] = sc.checks;
    j["seed"] = sc.seed;
    j["symbolic_g"] = sc.symbolic_g;
    j["unsafe_large"] = sc.unsafe_large;
    return j;
}

// with_runtime = false zeroes the runtime fields, which is the form compared for determinism.
inline nlohmann::ordered_json report_json(const Report& rep, bool with_runtime = true) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["scenario"] = scenario_json(rep.scenario);
    auto checks = nlohmann::ordered_json::array();
    for (const auto& r : rep.checks) {
        nlohmann::ordered_json c;
        c["name"] = r.name;
        c["status"] = status_name(r.status);
        c["residual_terms"] = r.residual_terms;
        c["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
        c["runtime_ms"] = with_runtime ? r.runtime_ms : 0;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"pass", rep.count(Status::Pass)},
                    {"fail", rep.count(Status::Fail)},
                    {"error", rep.count(Status::Error)}};
    return j;
}

inline std::string report_text(const Report& rep) {
    std::ostringstream os;
    const auto& sc = rep.scenario;
    os << suite_name(sc.suite) << " suite, N=" << sc.N << ", seed " << sc.seed << "\n";
    for (const auto& r : rep.checks) {
        os << "  [" << status_name(r.status) << "] " << r.name;
        if (r.status != Status::Pass) os << "  (" << r.residual_terms << " terms)";
        os << "  " << r.runtime_ms << " ms\n";
        if (r.witness) os << "      witness: " << *r.witness << "\n";
    }
    os << "pass " << rep.count(Status::Pass) << ", fail " << rep.count(Status::Fail) << ", error "
       << rep.count(Status::Error) << "\n";
    return os.str();
}

inline std::string render_report(const Report& rep, ReportFormat fmt) {
    return fmt == ReportFormat::Json ? report_json(rep).dump(2) + "\n" : report_text(rep);
}

// Empty path writes to stdout.
inline void emit_report(const Report& rep, ReportFormat fmt, const std::string& path) {
    std::string body = render_report(rep, fmt);
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open report file: " + path);
    f << body;
    if (!f.flush()) throw IoError("cannot write report file: " + path);
}

inline int exit_code(const Report& rep) { return rep.all_pass() ? 0 : 1; }
inline constexpr int kConfigExit = 2;

}  // namespace qtau
