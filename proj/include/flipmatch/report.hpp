#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace flipmatch {

/// Round to 12 significant digits. All floating-point values in emitted
/// reports pass through this so serialization is byte-stable.
double round_sig(double x, int digits = 12);

struct CheckRecord {
    std::string check;
    std::string graph;
    std::map<std::string, std::string> params;
    std::optional<double> lhs;
    std::optional<double> rhs;
    bool pass = false;
    bool advisory = false; ///< advisory records never affect the exit status
    std::string witness;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> config;
    std::vector<CheckRecord> records;

    int total() const { return static_cast<int>(records.size()); }
    int failed() const;
    int hard_failures() const;
    int advisory_failures() const;
};

nlohmann::json report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

/// format is one of "json", "csv", "text"; destination "" or "-" means stdout.
void emit_report(const VerificationReport& report, const std::string& format,
                 const std::string& destination);

} // namespace flipmatch
