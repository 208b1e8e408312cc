#include "poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pkv {

namespace {

void check_same_universe(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("polynomials live in different variable universes");
}

}  // namespace

MultiPoly MultiPoly::constant(std::uint32_t nvars, const GaussianRational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::uint32_t nvars, std::uint32_t index) {
    if (index >= nvars) throw std::invalid_argument("variable index out of range");
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), GaussianRational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint8_t e) { return e == 0; });
}

GaussianRational MultiPoly::constant_value() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

int MultiPoly::degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (std::uint8_t e : m) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

GaussianRational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void MultiPoly::set_coeff(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

void MultiPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_universe(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_universe(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_universe(*this, o);
    MultiPoly r(nvars_);
    if (terms_.empty() || o.terms_.empty()) return r;
    Monomial prod(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::uint32_t v = 0; v < nvars_; ++v) prod[v] = ma[v] + mb[v];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly MultiPoly::partial(std::uint32_t index) const {
    if (index >= nvars_) throw std::invalid_argument("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[index] == 0) continue;
        Monomial d = m;
        long e = d[index]--;
        r.add_term(d, e * c);
    }
    return r;
}

MultiPoly MultiPoly::integrate(std::uint32_t index) const {
    if (index >= nvars_) throw std::invalid_argument("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        long e = ++d[index];
        r.add_term(d, c * GaussianRational::make(1, e));
    }
    return r;
}

MultiPoly MultiPoly::conj_coeffs() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
    return r;
}

MultiPoly MultiPoly::permute_vars(const std::vector<std::uint32_t>& perm) const {
    if (perm.size() != nvars_) throw std::invalid_argument("permutation size mismatch");
    MultiPoly r(nvars_);
    Monomial t(nvars_);
    for (const auto& [m, c] : terms_) {
        std::fill(t.begin(), t.end(), 0);
        for (std::uint32_t v = 0; v < nvars_; ++v) t[perm[v]] = m[v];
        r.add_term(t, c);
    }
    return r;
}

MultiPoly MultiPoly::embed(std::uint32_t new_nvars, const std::vector<std::uint32_t>& map) const {
    if (map.size() != nvars_) throw std::invalid_argument("embedding map size mismatch");
    MultiPoly r(new_nvars);
    Monomial t(new_nvars);
    for (const auto& [m, c] : terms_) {
        std::fill(t.begin(), t.end(), 0);
        for (std::uint32_t v = 0; v < nvars_; ++v) {
            if (map[v] >= new_nvars) throw std::invalid_argument("embedding target out of range");
            t[map[v]] = m[v];
        }
        r.add_term(t, c);
    }
    return r;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images,
                             std::uint32_t target_nvars) const {
    if (images.size() != nvars_) throw std::invalid_argument("substitution map size mismatch");
    MultiPoly result(target_nvars);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target_nvars, c);
        for (std::uint32_t v = 0; v < nvars_; ++v)
            for (std::uint8_t e = 0; e < m[v]; ++e) term = term * images[v];
        result += term;
    }
    return result;
}

GaussianRational MultiPoly::eval(const std::vector<GaussianRational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point size mismatch");
    GaussianRational acc(0);
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (std::uint32_t v = 0; v < nvars_; ++v)
            for (std::uint8_t e = 0; e < m[v]; ++e) t *= point[v];
        acc += t;
    }
    return acc;
}

std::complex<double> MultiPoly::eval(const std::vector<std::complex<double>>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point size mismatch");
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::uint32_t v = 0; v < nvars_; ++v)
            for (std::uint8_t e = 0; e < m[v]; ++e) t *= point[v];
        acc += t;
    }
    return acc;
}

double MultiPoly::eval_real(const std::vector<double>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point size mismatch");
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        if (!c.is_real())
            throw std::invalid_argument("real evaluation of a polynomial with complex coefficients");
        double t = c.re().get_d();
        for (std::uint32_t v = 0; v < nvars_; ++v)
            for (std::uint8_t e = 0; e < m[v]; ++e) t *= point[v];
        acc += t;
    }
    return acc;
}

bool MultiPoly::has_real_coeffs() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_real()) return false;
    return true;
}

std::pair<MultiPoly, MultiPoly> MultiPoly::split_real_imag() const {
    MultiPoly re(nvars_), im(nvars_);
    for (const auto& [m, c] : terms_) {
        if (c.re() != 0) re.terms_.emplace(m, GaussianRational(c.re()));
        if (c.im() != 0) im.terms_.emplace(m, GaussianRational(c.im()));
    }
    return {re, im};
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    if (names.size() != nvars_) throw std::invalid_argument("name list size mismatch");
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (std::uint32_t v = 0; v < nvars_; ++v) {
            if (m[v] == 0) continue;
            out << "*" << names[v];
            if (m[v] > 1) out << "^" << int(m[v]);
        }
    }
    return out.str();
}

}  // namespace pkv
