#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "models.hpp"

namespace pkv {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

extern const std::vector<std::string> kAllSuites;

// Validated run configuration. Defaults: complex model, n = 1, sigma = (1),
// all suites, seed 0.
struct RunConfig {
    std::string model = "complex";  // complex | real | frances | hessian-comparison | product
    std::uint32_t n = 1;
    std::string sigma_text = "1";
    bool sigma_is_float = false;
    std::vector<std::complex<double>> sigma_float;  // set when sigma_is_float
    std::uint32_t product_k = 1, product_l = 1;
    std::string product_base = "real";  // base family of the product model
    std::vector<std::string> suites = kAllSuites;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    double quotient_a = 1.0, quotient_b = 0.5;

    // Exact sigma (throws if the configured sigma is float).
    SigmaMatrix exact_sigma() const;
    bool has_suite(const std::string& name) const;
};

// Parses the line-oriented `key=value` format. Errors name the offending line
// and key. The environment variable PKV_SEED, when set, overrides the seed.
RunConfig parse_config(const std::string& text);

// Applies a single key=value assignment (used by both the file parser and the
// CLI flag handling). `line` is reported in errors, 0 for CLI-origin values.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value,
                        int line);

// Final validation + defaults (sigma size vs n, suite names, guardrails).
void finalize_config(RunConfig& cfg);

// Sigma literal grammar: rows ';'-separated, entries ','-separated, each entry
// either a Gaussian-rational literal `[-]a[/b][+|-c[/d]i]` or a float literal
// (contains '.', 'e' or 'E').
ExactMatrix parse_sigma_exact(const std::string& text, int line);
bool sigma_text_is_float(const std::string& text);
std::vector<std::complex<double>> parse_sigma_float(const std::string& text,
                                                    std::uint32_t& n_out, int line);

}  // namespace pkv
