#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pkv {

enum class CheckStatus { Pass, Fail, Skipped, NotApplicable, Indeterminate };

std::string status_str(CheckStatus s);
CheckStatus status_from_str(const std::string& s);

// Structured outcome of one verification step. `anchor` names the verified
// claim (or "plumbing" for infrastructure checks) and `witness` carries the
// first offending component on failure.
struct CheckReport {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string anchor;
    std::string witness;
    std::int64_t ms = 0;

    bool operator==(const CheckReport& o) const {
        return name == o.name && status == o.status && anchor == o.anchor &&
               witness == o.witness && ms == o.ms;
    }
};

struct ReportSummary {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
};

ReportSummary summarize(const std::vector<CheckReport>& checks);
// 0 iff no check failed.
int exit_code(const std::vector<CheckReport>& checks);

struct RunConfig;  // config.hpp

std::string report_to_json(const RunConfig& cfg, const std::vector<CheckReport>& checks);
std::string report_to_text(const std::vector<CheckReport>& checks);

// Inverse of report_to_json, for round-trips and the `report` subcommand.
struct ParsedReport {
    int version = 0;
    std::vector<std::pair<std::string, std::string>> config;  // key, printed value
    std::vector<CheckReport> checks;
    ReportSummary summary;
};
ParsedReport report_from_json(const std::string& json_text);

}  // namespace pkv
