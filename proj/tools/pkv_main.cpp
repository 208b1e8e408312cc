// pkv command-line frontend. The binary talks to the engine exclusively
// through the C API in pkv/pkv.h.

#include <pkv/pkv.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct ConfigHandle {
    pkv_config* ptr = nullptr;
    ~ConfigHandle() { pkv_config_free(ptr); }
};

struct ReportHandle {
    pkv_report* ptr = nullptr;
    ~ReportHandle() { pkv_report_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { pkv_string_free(ptr); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

struct CommonFlags {
    std::string config_path;
    std::string model, sigma;
    int n = 0;
    std::vector<std::string> suites;
    long long seed = -1;
    double tol = 0;
    double a = 0, b = 0;
    std::string product;
    std::string base;
};

void add_common_flags(CLI::App* app, CommonFlags& fl) {
    app->add_option("--config", fl.config_path, "configuration file (key=value lines)");
    app->add_option("--model", fl.model,
                    "model family: complex|real|frances|hessian-comparison|product");
    app->add_option("--n", fl.n, "block size parameter n >= 1");
    app->add_option("--sigma", fl.sigma,
                    "symmetric matrix, rows ';'-separated, entries ','-separated");
    app->add_option("--suite", fl.suites, "suite name (repeatable)");
    app->add_option("--seed", fl.seed, "random seed for the sampled checks");
    app->add_option("--tol", fl.tol, "numeric tolerance for the sampled checks");
    app->add_option("--a", fl.a, "deck parameter a > 0");
    app->add_option("--b", fl.b, "deck parameter b > 0");
    app->add_option("--product", fl.product, "product extension 'k,l'");
    app->add_option("--base", fl.base, "product base family: real|complex");
}

// Builds a config handle from --config plus flag overrides.
ConfigHandle make_config(const CommonFlags& fl) {
    ConfigHandle cfg;
    char err[512] = {0};
    if (!fl.config_path.empty()) {
        std::string text = read_file(fl.config_path);
        if (pkv_config_parse(text.c_str(), &cfg.ptr, err, sizeof err) != PKV_OK)
            throw std::runtime_error(std::string("config error: ") + err);
    } else if (pkv_config_create(&cfg.ptr) != PKV_OK) {
        throw std::runtime_error("cannot allocate a configuration");
    }
    auto set = [&](const char* key, const std::string& value) {
        if (pkv_config_set(cfg.ptr, key, value.c_str(), err, sizeof err) != PKV_OK)
            throw std::runtime_error(std::string("config error: ") + err);
    };
    if (!fl.model.empty()) set("model", fl.model);
    if (fl.n > 0) set("n", std::to_string(fl.n));
    if (!fl.sigma.empty()) set("sigma", fl.sigma);
    if (!fl.suites.empty()) {
        std::string joined;
        for (const std::string& s : fl.suites) {
            if (!joined.empty()) joined += ",";
            joined += s;
        }
        set("suites", joined);
    }
    if (fl.seed >= 0) set("seed", std::to_string(fl.seed));
    if (fl.tol > 0) set("tol", std::to_string(fl.tol));
    if (fl.a > 0) set("a", std::to_string(fl.a));
    if (fl.b > 0) set("b", std::to_string(fl.b));
    if (!fl.product.empty()) set("product", fl.product);
    if (!fl.base.empty()) set("base", fl.base);
    return cfg;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) out.push_back(std::stod(cur));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for a family of Ricci-flat pseudo-Kaehler "
                 "symmetric models"};
    app.require_subcommand(1);

    // verify
    CommonFlags vfl;
    std::string json_path;
    bool quiet = false;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common_flags(verify, vfl);
    verify->add_option("--json", json_path, "write the JSON report to this path");
    verify->add_flag("--quiet", quiet, "suppress the per-check text output");

    // geodesic
    CommonFlags gfl;
    std::string p_text, q_text, times_text, csv_path;
    CLI::App* geod = app.add_subcommand("geodesic", "export a closed-form geodesic as CSV");
    add_common_flags(geod, gfl);
    geod->add_option("--p", p_text, "initial velocity, comma-separated rationals")
        ->required();
    geod->add_option("--q", q_text, "initial position, comma-separated rationals")
        ->required();
    geod->add_option("--times", times_text, "sample times, comma-separated")->required();
    geod->add_option("--out", csv_path, "output CSV path (stdout when omitted)");

    // quotient
    CommonFlags qfl;
    std::string point_text;
    CLI::App* quot = app.add_subcommand("quotient", "query the compact-quotient machinery");
    add_common_flags(quot, qfl);
    quot->add_option("--point", point_text, "point, comma-separated floats")->required();

    // report
    std::string report_path;
    CLI::App* reportc = app.add_subcommand("report", "re-read a JSON report and summarize");
    reportc->add_option("path", report_path, "JSON report file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            ConfigHandle cfg = make_config(vfl);
            ReportHandle rep;
            if (pkv_run_suites(cfg.ptr, &rep.ptr) != PKV_OK)
                throw std::runtime_error("verification run failed to start");
            if (!quiet) {
                StringHandle text;
                if (pkv_report_to_text(rep.ptr, &text.ptr) == PKV_OK)
                    std::cout << text.ptr;
            }
            if (!json_path.empty()) {
                StringHandle json;
                if (pkv_report_to_json(rep.ptr, &json.ptr) != PKV_OK)
                    throw std::runtime_error("cannot serialize the report");
                write_file(json_path, json.ptr);
            }
            return pkv_report_exit_code(rep.ptr);
        }
        if (*geod) {
            ConfigHandle cfg = make_config(gfl);
            std::vector<double> times = parse_double_list(times_text);
            char err[512] = {0};
            StringHandle csv;
            pkv_status st = pkv_geodesic_csv(cfg.ptr, p_text.c_str(), q_text.c_str(),
                                             times.data(), times.size(), &csv.ptr, err,
                                             sizeof err);
            if (st != PKV_OK) throw std::runtime_error(std::string("geodesic: ") + err);
            if (csv_path.empty()) std::cout << csv.ptr;
            else write_file(csv_path, csv.ptr);
            return 0;
        }
        if (*quot) {
            ConfigHandle cfg = make_config(qfl);
            std::vector<double> x = parse_double_list(point_text);
            size_t dim = 0;
            char err[512] = {0};
            if (pkv_model_dim(cfg.ptr, &dim, err, sizeof err) != PKV_OK)
                throw std::runtime_error(std::string("quotient: ") + err);
            std::vector<double> rep(dim), sphere(dim);
            int membership = 0;
            long k = 0;
            double angle = 0;
            pkv_status st = pkv_quotient_query(cfg.ptr, x.data(), x.size(), &membership, &k,
                                               rep.data(), &angle, sphere.data(), err,
                                               sizeof err);
            if (st != PKV_OK) throw std::runtime_error(std::string("quotient: ") + err);
            static const char* names[] = {"interior", "sphere-boundary",
                                          "ellipsoid-boundary", "outside"};
            std::cout << "membership: " << names[membership] << "\n";
            std::cout << "deck power k: " << k << "\n";
            std::printf("angle: %.12g\n", angle);
            std::cout << "representative:";
            for (double v : rep) std::printf(" %.12g", v);
            std::cout << "\nsphere-point:";
            for (double v : sphere) std::printf(" %.12g", v);
            std::cout << "\n";
            return 0;
        }
        if (*reportc) {
            std::string text = read_file(report_path);
            char err[512] = {0};
            ReportHandle rep;
            if (pkv_report_from_json(text.c_str(), &rep.ptr, err, sizeof err) != PKV_OK)
                throw std::runtime_error(std::string("report: ") + err);
            StringHandle out;
            if (pkv_report_to_text(rep.ptr, &out.ptr) == PKV_OK) std::cout << out.ptr;
            return pkv_report_exit_code(rep.ptr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
