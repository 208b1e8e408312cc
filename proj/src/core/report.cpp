#include "report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "config.hpp"

namespace pkv {

using nlohmann::json;

std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::NotApplicable: return "not-applicable";
        case CheckStatus::Indeterminate: return "indeterminate";
    }
    return "?";
}

CheckStatus status_from_str(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "skipped") return CheckStatus::Skipped;
    if (s == "not-applicable") return CheckStatus::NotApplicable;
    if (s == "indeterminate") return CheckStatus::Indeterminate;
    throw std::invalid_argument("unknown check status '" + s + "'");
}

ReportSummary summarize(const std::vector<CheckReport>& checks) {
    ReportSummary s;
    for (const CheckReport& c : checks) {
        if (c.status == CheckStatus::Pass) ++s.pass;
        else if (c.status == CheckStatus::Fail) ++s.fail;
        else ++s.skipped;
    }
    return s;
}

int exit_code(const std::vector<CheckReport>& checks) {
    return summarize(checks).fail == 0 ? 0 : 1;
}

std::string report_to_json(const RunConfig& cfg, const std::vector<CheckReport>& checks) {
    json root;
    root["version"] = 1;
    json jc;
    jc["model"] = cfg.model;
    jc["n"] = cfg.n;
    jc["sigma"] = cfg.sigma_text;
    jc["suites"] = cfg.suites;
    jc["seed"] = cfg.seed;
    jc["tol"] = cfg.tol;
    jc["product_k"] = cfg.product_k;
    jc["product_l"] = cfg.product_l;
    jc["base"] = cfg.product_base;
    jc["a"] = cfg.quotient_a;
    jc["b"] = cfg.quotient_b;
    root["config"] = jc;
    json arr = json::array();
    for (const CheckReport& c : checks) {
        json jcheck;
        jcheck["name"] = c.name;
        jcheck["status"] = status_str(c.status);
        jcheck["anchor"] = c.anchor;
        jcheck["witness"] = c.witness;
        jcheck["ms"] = c.ms;
        arr.push_back(jcheck);
    }
    root["checks"] = arr;
    ReportSummary s = summarize(checks);
    root["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
    return root.dump(2) + "\n";
}

std::string report_to_text(const std::vector<CheckReport>& checks) {
    std::ostringstream out;
    for (const CheckReport& c : checks) {
        out << "[" << status_str(c.status) << "] " << c.name << " (" << c.anchor << ")";
        if (!c.witness.empty()) out << " -- " << c.witness;
        out << "\n";
    }
    ReportSummary s = summarize(checks);
    out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped
        << " other\n";
    return out.str();
}

ParsedReport report_from_json(const std::string& json_text) {
    json root = json::parse(json_text);
    ParsedReport rep;
    rep.version = root.at("version").get<int>();
    for (const auto& [key, value] : root.at("config").items())
        rep.config.emplace_back(key, value.dump());
    for (const auto& jcheck : root.at("checks")) {
        CheckReport c;
        c.name = jcheck.at("name").get<std::string>();
        c.status = status_from_str(jcheck.at("status").get<std::string>());
        c.anchor = jcheck.at("anchor").get<std::string>();
        c.witness = jcheck.at("witness").get<std::string>();
        c.ms = jcheck.at("ms").get<std::int64_t>();
        rep.checks.push_back(std::move(c));
    }
    rep.summary.pass = root.at("summary").at("pass").get<int>();
    rep.summary.fail = root.at("summary").at("fail").get<int>();
    rep.summary.skipped = root.at("summary").at("skipped").get<int>();
    return rep;
}

}  // namespace pkv
