#include "flipmatch/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace flipmatch {

double round_sig(double x, int digits) {
    if (!std::isfinite(x)) return x;
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, x);
    return std::strtod(buffer, nullptr);
}

namespace {

std::string format_value(const std::optional<double>& v) {
    if (!v) return "";
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", *v);
    return buffer;
}

nlohmann::json json_value(const std::optional<double>& v) {
    if (!v || !std::isfinite(*v)) return nullptr;
    return round_sig(*v);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

int VerificationReport::failed() const {
    int count = 0;
    for (const auto& r : records)
        if (!r.pass) ++count;
    return count;
}

int VerificationReport::hard_failures() const {
    int count = 0;
    for (const auto& r : records)
        if (!r.pass && !r.advisory) ++count;
    return count;
}

int VerificationReport::advisory_failures() const {
    int count = 0;
    for (const auto& r : records)
        if (!r.pass && r.advisory) ++count;
    return count;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json out;
    out["suite"] = report.suite;
    out["seed"] = report.seed;
    out["config"] = report.config;
    out["records"] = nlohmann::json::array();
    for (const auto& r : report.records) {
        nlohmann::json rec;
        rec["check"] = r.check;
        rec["graph"] = r.graph;
        rec["params"] = r.params;
        rec["lhs"] = json_value(r.lhs);
        rec["rhs"] = json_value(r.rhs);
        rec["pass"] = r.pass;
        rec["advisory"] = r.advisory;
        if (!r.witness.empty()) rec["witness"] = r.witness;
        out["records"].push_back(std::move(rec));
    }
    out["summary"] = {
        {"total", report.total()},
        {"failed", report.failed()},
        {"hard_failures", report.hard_failures()},
        {"advisory_failures", report.advisory_failures()},
    };
    return out;
}

std::string report_to_csv(const VerificationReport& report) {
    std::ostringstream out;
    out << "suite,check,graph,params,lhs,rhs,pass,advisory,witness\n";
    for (const auto& r : report.records) {
        std::string params;
        for (const auto& [k, v] : r.params) {
            if (!params.empty()) params += ';';
            params += k + "=" + v;
        }
        out << csv_escape(report.suite) << ',' << csv_escape(r.check) << ','
            << csv_escape(r.graph) << ',' << csv_escape(params) << ','
            << format_value(r.lhs ? std::optional(round_sig(*r.lhs)) : r.lhs) << ','
            << format_value(r.rhs ? std::optional(round_sig(*r.rhs)) : r.rhs) << ','
            << (r.pass ? "true" : "false") << ',' << (r.advisory ? "true" : "false")
            << ',' << csv_escape(r.witness) << '\n';
    }
    return out.str();
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "suite: " << report.suite << "\n";
    out << "checks: " << report.total() << ", failed: " << report.failed()
        << " (hard: " << report.hard_failures()
        << ", advisory: " << report.advisory_failures() << ")\n";
    out << (report.hard_failures() == 0 ? "result: PASS (exit 0)\n"
                                        : "result: FAIL (exit nonzero)\n");
    int shown = 0;
    for (const auto& r : report.records) {
        if (r.pass || shown >= 10) continue;
        ++shown;
        out << "  FAIL" << (r.advisory ? " (advisory)" : "") << " " << r.check << " on "
            << r.graph;
        if (r.lhs || r.rhs)
            out << " [lhs=" << format_value(r.lhs ? std::optional(round_sig(*r.lhs)) : r.lhs)
                << " rhs=" << format_value(r.rhs ? std::optional(round_sig(*r.rhs)) : r.rhs)
                << "]";
        out << "\n";
    }
    return out.str();
}

void emit_report(const VerificationReport& report, const std::string& format,
                 const std::string& destination) {
    std::string payload;
    if (format == "json") {
        payload = report_to_json(report).dump(2) + "\n";
    } else if (format == "csv") {
        payload = report_to_csv(report);
    } else if (format == "text") {
        payload = report_to_text(report);
    } else {
        throw std::invalid_argument("emit report: unknown format '" + format + "'");
    }
    if (destination.empty() || destination == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw std::runtime_error("emit report: cannot write '" + destination + "'");
    out << payload;
}

} // namespace flipmatch
