#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace pkv {

// Exponent vector over a fixed variable universe (index-based; names live in Chart).
using Monomial = std::vector<std::uint8_t>;

// Sparse multivariate polynomial over GaussianRational. Every model polynomial in
// this project has degree <= 4, so the term maps stay tiny; correctness relies on
// the normal form: no stored term has a zero coefficient.
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(std::uint32_t nvars) : nvars_(nvars) {}

    static MultiPoly zero(std::uint32_t nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(std::uint32_t nvars, const GaussianRational& c);
    static MultiPoly variable(std::uint32_t nvars, std::uint32_t index);

    std::uint32_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero polynomial -> 0).
    GaussianRational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    int degree() const;

    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
    GaussianRational coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, const GaussianRational& c);
    void add_term(const Monomial& m, const GaussianRational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly scaled(const GaussianRational& c) const;

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Formal partial derivative with respect to variable `index`.
    MultiPoly partial(std::uint32_t index) const;

    // Antiderivative in variable `index` (used by the closed-form geodesic solver;
    // exact since coefficients form a field).
    MultiPoly integrate(std::uint32_t index) const;

    // Conjugates all coefficients, leaving monomials untouched.
    MultiPoly conj_coeffs() const;
    // Relabels variables: new exponent of perm[v] is the old exponent of v.
    MultiPoly permute_vars(const std::vector<std::uint32_t>& perm) const;
    // Embeds into a larger universe; map[v] gives the new index of old variable v.
    MultiPoly embed(std::uint32_t new_nvars, const std::vector<std::uint32_t>& map) const;

    // Substitutes images[v] for variable v; all images share the target universe.
    MultiPoly compose(const std::vector<MultiPoly>& images, std::uint32_t target_nvars) const;

    GaussianRational eval(const std::vector<GaussianRational>& point) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;
    double eval_real(const std::vector<double>& point) const;

    // True when every coefficient is real.
    bool has_real_coeffs() const;
    // Splits into (real part, imaginary part) coefficient-wise.
    std::pair<MultiPoly, MultiPoly> split_real_imag() const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::uint32_t nvars_;
    std::map<Monomial, GaussianRational> terms_;
};

}  // namespace pkv
