#include "chart.hpp"

#include <stdexcept>

namespace pkv {

std::shared_ptr<const Chart> Chart::real(std::vector<std::string> names) {
    std::uint32_t dim = static_cast<std::uint32_t>(names.size());
    return std::shared_ptr<const Chart>(new Chart(Kind::Real, dim, std::move(names)));
}

std::shared_ptr<const Chart> Chart::real(std::uint32_t dim, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (std::uint32_t a = 1; a <= dim; ++a) names.push_back(prefix + std::to_string(a));
    return real(std::move(names));
}

std::shared_ptr<const Chart> Chart::holomorphic_pair(std::uint32_t dim) {
    std::vector<std::string> names;
    names.reserve(2 * dim);
    for (std::uint32_t a = 1; a <= dim; ++a) names.push_back("z" + std::to_string(a));
    for (std::uint32_t a = 1; a <= dim; ++a) names.push_back("w" + std::to_string(a));
    return std::shared_ptr<const Chart>(
        new Chart(Kind::HolomorphicPair, dim, std::move(names)));
}

std::uint32_t Chart::conj_coord_var(std::uint32_t a) const {
    if (kind_ != Kind::HolomorphicPair)
        throw std::logic_error("conjugate variables exist only on holomorphic-pair charts");
    return dim_ + a;
}

std::uint32_t Chart::var_index(const std::string& name) const {
    for (std::uint32_t v = 0; v < names_.size(); ++v)
        if (names_[v] == name) return v;
    throw std::invalid_argument("unknown variable name '" + name + "'");
}

MultiPoly Chart::conjugate(const MultiPoly& p) const {
    if (p.nvars() != nvars())
        throw std::invalid_argument("polynomial does not live on this chart");
    if (kind_ == Kind::Real) return p.conj_coeffs();
    std::vector<std::uint32_t> perm(nvars());
    for (std::uint32_t a = 0; a < dim_; ++a) {
        perm[a] = dim_ + a;
        perm[dim_ + a] = a;
    }
    return p.conj_coeffs().permute_vars(perm);
}

}  // namespace pkv
