#include "pkv/pkv.h"

#include <cstring>
#include <new>
#include <string>

#include "config.hpp"
#include "conformal.hpp"
#include "geodesics.hpp"
#include "models.hpp"
#include "quotient.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace pkv;

struct pkv_config {
    RunConfig cfg;
};

struct pkv_report {
    RunConfig cfg;
    bool has_cfg = false;
    std::vector<CheckReport> checks;
    std::string json_cache;  // set when loaded from JSON (round-trip fidelity)
};

namespace {

void copy_err(char* err, size_t err_len, const std::string& msg) {
    if (!err || err_len == 0) return;
    std::size_t n = std::min(err_len - 1, msg.size());
    std::memcpy(err, msg.data(), n);
    err[n] = '\0';
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

// Builds the real-chart model described by the config.
MetricModel build_configured_model(const RunConfig& cfg) {
    SigmaMatrix sigma = cfg.exact_sigma();
    if (cfg.model == "complex") return realify(build_complex_model(sigma));
    if (cfg.model == "real") return build_real_model(sigma);
    if (cfg.model == "frances") return build_frances_model();
    if (cfg.model == "hessian-comparison") return build_hessian_comparison(sigma);
    if (cfg.model == "product") {
        MetricModel base = cfg.product_base == "complex"
                               ? realify(build_complex_model(sigma))
                               : build_real_model(sigma);
        return build_product_extension(base, cfg.product_k, cfg.product_l);
    }
    throw ConfigError("unknown model '" + cfg.model + "'");
}

BlockLayout configured_layout(const RunConfig& cfg, std::uint32_t dim) {
    if (cfg.model == "complex") return realified_layout(cfg.n);
    if (cfg.model == "real") return quarter_layout(cfg.n);
    if (cfg.model == "frances") return quarter_layout(1);
    throw ConfigError("quotient machinery applies to the complex, real and frances models");
    (void)dim;
}

std::vector<GaussianRational> parse_rational_list(const std::string& text, std::size_t expect) {
    std::vector<GaussianRational> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(GaussianRational::parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(GaussianRational::parse(cur));
    if (out.size() != expect)
        throw std::invalid_argument("expected " + std::to_string(expect) + " entries, got " +
                                    std::to_string(out.size()));
    return out;
}

}  // namespace

extern "C" {

const char* pkv_version(void) { return "1.0.0"; }

pkv_status pkv_config_create(pkv_config** out) {
    if (!out) return PKV_ERR_ARGUMENT;
    *out = new (std::nothrow) pkv_config{};
    return *out ? PKV_OK : PKV_ERR_INTERNAL;
}

pkv_status pkv_config_parse(const char* text, pkv_config** out, char* err, size_t err_len) {
    if (!text || !out) return PKV_ERR_ARGUMENT;
    try {
        RunConfig cfg = parse_config(text);
        *out = new pkv_config{std::move(cfg)};
        return PKV_OK;
    } catch (const std::exception& e) {
        copy_err(err, err_len, e.what());
        return PKV_ERR_PARSE;
    }
}

pkv_status pkv_config_set(pkv_config* cfg, const char* key, const char* value, char* err,
                          size_t err_len) {
    if (!cfg || !key || !value) return PKV_ERR_ARGUMENT;
    try {
        apply_config_entry(cfg->cfg, key, value, 0);
        finalize_config(cfg->cfg);
        return PKV_OK;
    } catch (const std::exception& e) {
        copy_err(err, err_len, e.what());
        return PKV_ERR_PARSE;
    }
}

void pkv_config_free(pkv_config* cfg) { delete cfg; }

pkv_status pkv_model_dim(const pkv_config* cfg, size_t* dim_out, char* err, size_t err_len) {
    if (!cfg || !dim_out) return PKV_ERR_ARGUMENT;
    const RunConfig& c = cfg->cfg;
    if (c.model == "complex") *dim_out = 8u * c.n;
    else if (c.model == "real" || c.model == "hessian-comparison") *dim_out = 4u * c.n;
    else if (c.model == "frances") *dim_out = 4;
    else if (c.model == "product")
        *dim_out = (c.product_base == "complex" ? 8u : 4u) * c.n + c.product_k + c.product_l;
    else {
        copy_err(err, err_len, "unknown model");
        return PKV_ERR_ARGUMENT;
    }
    return PKV_OK;
}

pkv_status pkv_run_suites(const pkv_config* cfg, pkv_report** out) {
    if (!cfg || !out) return PKV_ERR_ARGUMENT;
    try {
        auto checks = run_suites(cfg->cfg);
        auto* rep = new pkv_report{};
        rep->cfg = cfg->cfg;
        rep->has_cfg = true;
        rep->checks = std::move(checks);
        *out = rep;
        return PKV_OK;
    } catch (const std::exception&) {
        return PKV_ERR_INTERNAL;
    }
}

size_t pkv_report_size(const pkv_report* rep) { return rep ? rep->checks.size() : 0; }

pkv_check_status pkv_report_check_status(const pkv_report* rep, size_t index) {
    if (!rep || index >= rep->checks.size()) return PKV_CHECK_FAIL;
    switch (rep->checks[index].status) {
        case CheckStatus::Pass: return PKV_CHECK_PASS;
        case CheckStatus::Fail: return PKV_CHECK_FAIL;
        case CheckStatus::Skipped: return PKV_CHECK_SKIPPED;
        case CheckStatus::NotApplicable: return PKV_CHECK_NOT_APPLICABLE;
        case CheckStatus::Indeterminate: return PKV_CHECK_INDETERMINATE;
    }
    return PKV_CHECK_FAIL;
}

const char* pkv_report_check_name(const pkv_report* rep, size_t index) {
    if (!rep || index >= rep->checks.size()) return "";
    return rep->checks[index].name.c_str();
}

const char* pkv_report_check_anchor(const pkv_report* rep, size_t index) {
    if (!rep || index >= rep->checks.size()) return "";
    return rep->checks[index].anchor.c_str();
}

const char* pkv_report_check_witness(const pkv_report* rep, size_t index) {
    if (!rep || index >= rep->checks.size()) return "";
    return rep->checks[index].witness.c_str();
}

int64_t pkv_report_check_ms(const pkv_report* rep, size_t index) {
    if (!rep || index >= rep->checks.size()) return 0;
    return rep->checks[index].ms;
}

int pkv_report_exit_code(const pkv_report* rep) {
    return rep ? exit_code(rep->checks) : 1;
}

pkv_status pkv_report_to_json(const pkv_report* rep, char** out) {
    if (!rep || !out) return PKV_ERR_ARGUMENT;
    try {
        std::string json = rep->has_cfg ? report_to_json(rep->cfg, rep->checks)
                                        : rep->json_cache;
        *out = dup_string(json);
        return *out ? PKV_OK : PKV_ERR_INTERNAL;
    } catch (const std::exception&) {
        return PKV_ERR_INTERNAL;
    }
}

pkv_status pkv_report_to_text(const pkv_report* rep, char** out) {
    if (!rep || !out) return PKV_ERR_ARGUMENT;
    *out = dup_string(report_to_text(rep->checks));
    return *out ? PKV_OK : PKV_ERR_INTERNAL;
}

pkv_status pkv_report_from_json(const char* json_text, pkv_report** out, char* err,
                                size_t err_len) {
    if (!json_text || !out) return PKV_ERR_ARGUMENT;
    try {
        ParsedReport parsed = report_from_json(json_text);
        auto* rep = new pkv_report{};
        rep->checks = std::move(parsed.checks);
        rep->json_cache = json_text;
        *out = rep;
        return PKV_OK;
    } catch (const std::exception& e) {
        copy_err(err, err_len, e.what());
        return PKV_ERR_PARSE;
    }
}

void pkv_report_free(pkv_report* rep) { delete rep; }

void pkv_string_free(char* s) { delete[] s; }

pkv_status pkv_geodesic_csv(const pkv_config* cfg, const char* p_csv, const char* q_csv,
                            const double* times, size_t n_times, char** out_csv, char* err,
                            size_t err_len) {
    if (!cfg || !p_csv || !q_csv || !out_csv || (n_times > 0 && !times))
        return PKV_ERR_ARGUMENT;
    try {
        MetricModel m = build_configured_model(cfg->cfg);
        TensorField gamma = levi_civita(m);
        std::vector<GaussianRational> p = parse_rational_list(p_csv, m.dim());
        std::vector<GaussianRational> q = parse_rational_list(q_csv, m.dim());
        GeodesicData geo = solve_geodesic(m, gamma, p, q);
        std::vector<double> ts(times, times + n_times);
        *out_csv = dup_string(geodesic_csv(geo, ts));
        return *out_csv ? PKV_OK : PKV_ERR_INTERNAL;
    } catch (const NoClosedFormError& e) {
        copy_err(err, err_len, e.what());
        return PKV_ERR_UNSUPPORTED;
    } catch (const std::exception& e) {
        copy_err(err, err_len, e.what());
        return PKV_ERR_PARSE;
    }
}

pkv_status pkv_quotient_query(const pkv_config* cfg, const double* x, size_t dim,
                              int* membership, long* k, double* rep, double* angle,
                              double* sphere_point, char* err, size_t err_len) {
    if (!cfg || !x) return PKV_ERR_ARGUMENT;
    try {
        const RunConfig& c = cfg->cfg;
        size_t want = 0;
        pkv_status st = pkv_model_dim(cfg, &want, err, err_len);
        if (st != PKV_OK) return st;
        if (dim != want) {
            copy_err(err, err_len, "point has dimension " + std::to_string(dim) +
                                       ", model needs " + std::to_string(want));
            return PKV_ERR_ARGUMENT;
        }
        BlockLayout layout = configured_layout(c, static_cast<std::uint32_t>(dim));
        FundamentalDomain dom = make_domain(c.quotient_a, c.quotient_b, layout,
                                            static_cast<std::uint32_t>(dim));
        std::vector<double> pt(x, x + dim);
        if (membership)
            *membership = static_cast<int>(domain_membership(dom, pt));
        QuotientChartPoint chart = quotient_chart(dom, pt);
        if (k) *k = chart.rep.k;
        if (rep)
            for (size_t i = 0; i < dim; ++i) rep[i] = chart.rep.y[i];
        if (angle) *angle = chart.angle;
        if (sphere_point)
            for (size_t i = 0; i < dim; ++i) sphere_point[i] = chart.sphere_point[i];
        return PKV_OK;
    } catch (const ConfigError& e) {
        copy_err(err, err_len, e.what());
        return PKV_ERR_UNSUPPORTED;
    } catch (const std::exception& e) {
        copy_err(err, err_len, e.what());
        return PKV_ERR_ARGUMENT;
    }
}

}  // extern "C"
