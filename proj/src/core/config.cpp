#include "config.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace pkv {

const std::vector<std::string> kAllSuites = {
    "metric",     "curvature", "symmetry",  "holonomy",         "transvection",
    "geodesics",  "conformal", "quotient",  "complex-structure"};

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    if (line > 0) throw ConfigError(msg + " at line " + std::to_string(line));
    throw ConfigError(msg);
}

}  // namespace

bool sigma_text_is_float(const std::string& text) {
    return text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
           text.find('E') != std::string::npos;
}

ExactMatrix parse_sigma_exact(const std::string& text, int line) {
    std::vector<std::string> rows = split(text, ';');
    std::size_t n = rows.size();
    ExactMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::string> entries = split(rows[r], ',');
        if (entries.size() != n) fail(line, "sigma row length mismatch");
        for (std::size_t c = 0; c < n; ++c) {
            try {
                m.at(r, c) = GaussianRational::parse(trim(entries[c]));
            } catch (const std::exception& e) {
                fail(line, std::string("bad sigma entry: ") + e.what());
            }
        }
    }
    return m;
}

std::vector<std::complex<double>> parse_sigma_float(const std::string& text,
                                                    std::uint32_t& n_out, int line) {
    std::vector<std::string> rows = split(text, ';');
    std::size_t n = rows.size();
    std::vector<std::complex<double>> m(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::string> entries = split(rows[r], ',');
        if (entries.size() != n) fail(line, "sigma row length mismatch");
        for (std::size_t c = 0; c < n; ++c) {
            std::string s = trim(entries[c]);
            try {
                std::size_t used = 0;
                double re = std::stod(s, &used);
                double im = 0;
                std::string rest = trim(s.substr(used));
                if (!rest.empty()) {
                    if (rest.back() != 'i') throw std::invalid_argument("trailing garbage");
                    im = std::stod(rest.substr(0, rest.size() - 1));
                }
                m[r * n + c] = {re, im};
            } catch (const std::exception&) {
                fail(line, "bad float sigma entry '" + s + "'");
            }
        }
    }
    n_out = static_cast<std::uint32_t>(n);
    return m;
}

SigmaMatrix RunConfig::exact_sigma() const {
    if (sigma_is_float)
        throw ConfigError("exact suites require a rational sigma, got float entries");
    return SigmaMatrix::make(n, parse_sigma_exact(sigma_text, 0));
}

bool RunConfig::has_suite(const std::string& name) const {
    return std::find(suites.begin(), suites.end(), name) != suites.end();
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value,
                        int line) {
    if (key == "model") {
        static const std::vector<std::string> known = {"complex", "real", "frances",
                                                       "hessian-comparison", "product"};
        if (std::find(known.begin(), known.end(), value) == known.end())
            fail(line, "unknown model '" + value + "'");
        cfg.model = value;
    } else if (key == "n") {
        int v = 0;
        try {
            v = std::stoi(value);
        } catch (const std::exception&) {
            fail(line, "bad integer for key 'n'");
        }
        if (v < 1) fail(line, "n must be >= 1");
        cfg.n = static_cast<std::uint32_t>(v);
    } else if (key == "sigma") {
        cfg.sigma_text = value;
        cfg.sigma_is_float = sigma_text_is_float(value);
    } else if (key == "product") {
        std::vector<std::string> kl = split(value, ',');
        if (kl.size() != 2) fail(line, "product expects 'k,l'");
        try {
            cfg.product_k = static_cast<std::uint32_t>(std::stoi(kl[0]));
            cfg.product_l = static_cast<std::uint32_t>(std::stoi(kl[1]));
        } catch (const std::exception&) {
            fail(line, "bad integers for key 'product'");
        }
    } else if (key == "base") {
        if (value != "real" && value != "complex") fail(line, "base must be real or complex");
        cfg.product_base = value;
    } else if (key == "suites") {
        cfg.suites.clear();
        for (const std::string& s : split(value, ',')) {
            std::string name = trim(s);
            if (name.empty()) continue;
            if (std::find(kAllSuites.begin(), kAllSuites.end(), name) == kAllSuites.end())
                fail(line, "unknown suite '" + name + "'");
            cfg.suites.push_back(name);
        }
        if (cfg.suites.empty()) fail(line, "suites must be nonempty");
    } else if (key == "seed") {
        try {
            cfg.seed = std::stoull(value);
        } catch (const std::exception&) {
            fail(line, "bad integer for key 'seed'");
        }
    } else if (key == "tol") {
        try {
            cfg.tol = std::stod(value);
        } catch (const std::exception&) {
            fail(line, "bad float for key 'tol'");
        }
        if (!(cfg.tol > 0)) fail(line, "tol must be positive");
    } else if (key == "a" || key == "b") {
        double v = 0;
        try {
            v = std::stod(value);
        } catch (const std::exception&) {
            fail(line, "bad float for key '" + key + "'");
        }
        if (!(v > 0)) fail(line, key + " must be positive");
        (key == "a" ? cfg.quotient_a : cfg.quotient_b) = v;
    } else {
        fail(line, "unknown key '" + key + "'");
    }
}

void finalize_config(RunConfig& cfg) {
    if (const char* env = std::getenv("PKV_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw ConfigError("PKV_SEED is not an integer");
        }
    }
    if (cfg.suites.empty()) throw ConfigError("suites must be nonempty");
    if (!(cfg.tol > 0)) throw ConfigError("tol must be positive");
    // Validate sigma shape against n.
    if (cfg.sigma_is_float) {
        std::uint32_t n = 0;
        parse_sigma_float(cfg.sigma_text, n, 0);
        if (n != cfg.n)
            throw ConfigError("sigma size " + std::to_string(n) + " does not match n = " +
                              std::to_string(cfg.n));
    } else {
        ExactMatrix m = parse_sigma_exact(cfg.sigma_text, 0);
        if (m.rows() != cfg.n) {
            if (cfg.sigma_text == "1") {
                // default sigma grows with n
                cfg.sigma_text = SigmaMatrix::identity(cfg.n).str();
            } else {
                throw ConfigError("sigma size " + std::to_string(m.rows()) +
                                  " does not match n = " + std::to_string(cfg.n));
            }
        }
        // symmetry check
        SigmaMatrix::make(cfg.n, parse_sigma_exact(cfg.sigma_text, 0));
    }
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) fail(lineno, "expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        apply_config_entry(cfg, key, value, lineno);
    }
    finalize_config(cfg);
    return cfg;
}

}  // namespace pkv
