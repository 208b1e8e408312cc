#pragma once

#include <memory>
#include <string>
#include <vector>

#include "poly.hpp"

namespace pkv {

// Coordinate chart underlying every tensor field. A real chart has one formal
// variable per coordinate. A holomorphic-pair chart of dimension d carries 2d
// formal variables: z^1..z^d and their formal conjugates w^1..w^d, treated as
// independent symbols (Wirtinger calculus). Tensor indices always run over
// 1..dim; the conjugate variables only enter through the polynomial ring.
class Chart {
public:
    enum class Kind { Real, HolomorphicPair };

    static std::shared_ptr<const Chart> real(std::vector<std::string> names);
    static std::shared_ptr<const Chart> real(std::uint32_t dim, const std::string& prefix = "x");
    static std::shared_ptr<const Chart> holomorphic_pair(std::uint32_t dim);

    Kind kind() const { return kind_; }
    bool is_real() const { return kind_ == Kind::Real; }
    std::uint32_t dim() const { return dim_; }
    std::uint32_t nvars() const { return static_cast<std::uint32_t>(names_.size()); }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::string& var_name(std::uint32_t v) const { return names_[v]; }

    // Index of the polynomial variable attached to coordinate a (0-based).
    std::uint32_t coord_var(std::uint32_t a) const { return a; }
    // Holomorphic-pair charts: variable index of the conjugate w^a.
    std::uint32_t conj_coord_var(std::uint32_t a) const;

    std::uint32_t var_index(const std::string& name) const;

    // The conjugation involution: swaps z^a <-> w^a (identity on real charts)
    // and conjugates coefficients.
    MultiPoly conjugate(const MultiPoly& p) const;

    MultiPoly zero() const { return MultiPoly::zero(nvars()); }
    MultiPoly constant(const GaussianRational& c) const {
        return MultiPoly::constant(nvars(), c);
    }
    MultiPoly var(std::uint32_t v) const { return MultiPoly::variable(nvars(), v); }

    bool operator==(const Chart& o) const {
        return kind_ == o.kind_ && dim_ == o.dim_ && names_ == o.names_;
    }

private:
    Chart(Kind kind, std::uint32_t dim, std::vector<std::string> names)
        : kind_(kind), dim_(dim), names_(std::move(names)) {}

    Kind kind_;
    std::uint32_t dim_;
    std::vector<std::string> names_;
};

using ChartPtr = std::shared_ptr<const Chart>;

}  // namespace pkv
