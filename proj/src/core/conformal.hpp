#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensor.hpp"

namespace pkv {

// Partition of a chart's coordinates into the four scaling blocks of the
// diagonal homothety families, plus the flat extension block of a product
// model (scaled by s*t).
struct BlockLayout {
    std::array<std::vector<std::uint32_t>, 4> blocks;
    std::vector<std::uint32_t> extension;
};

// dim = 4n, blocks of size n (real model, holomorphic chart, frances with n=1).
BlockLayout quarter_layout(std::uint32_t n);
// dim = 8n realified chart (x1..x4n, y1..y4n): block i holds the x- and
// y-copies of the i-th quarter.
BlockLayout realified_layout(std::uint32_t n);
// Appends product-extension coordinates [base_dim, base_dim + ext) to a layout.
BlockLayout with_extension(BlockLayout layout, std::uint32_t base_dim, std::uint32_t ext);

enum class HomothetyFamily { Identity, PhiAB, PhiS, PsiT, Phi0T };

// Diagonal linear map whose entries are monomials in formal positive scale
// symbols. Inverse pairs (u, v) carry the relation u v = 1, handled by
// reduction to a Laurent normal form; this keeps e^{-t} exact without leaving
// polynomial arithmetic.
struct HomothetySpec {
    HomothetyFamily family = HomothetyFamily::Identity;
    std::string name;
    std::vector<std::string> symbols;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> inverse_pairs;
    std::vector<Monomial> coord_scales;  // per coordinate, exponents over `symbols`
    Monomial claimed_factor;             // lambda^2 as a monomial (empty exponents = 1)

    std::string scale_str(const Monomial& m) const;
    std::string claimed_factor_str() const { return scale_str(claimed_factor); }
    // Numeric diagonal for given symbol values.
    std::vector<double> numeric_scales(const std::vector<double>& symbol_values) const;
};

// Family constructors over a block layout on a chart of dimension dim.
HomothetySpec make_identity(const BlockLayout& layout, std::uint32_t dim);
// phi_{a,b}: block scales (s, t, s t^2, s^2 t), extension s t; factor (s t)^2.
HomothetySpec make_phi_ab(const BlockLayout& layout, std::uint32_t dim);
// phi_s: scales (r, r, r^3, r^3); factor r^4.
HomothetySpec make_phi_s(const BlockLayout& layout, std::uint32_t dim);
// psi_t: scales (u, v, v, u) with u v = 1; factor 1 (isometry).
HomothetySpec make_psi_t(const BlockLayout& layout, std::uint32_t dim);
// phi_{0,t}: scales (1, u, u^2, u); factor u^2.
HomothetySpec make_phi_0t(const BlockLayout& layout, std::uint32_t dim);

// Exact conformal-factor computation: succeeds iff phi*g = lambda^2 g as a
// polynomial identity in the coordinates and scale symbols (after Laurent
// reduction of inverse pairs); otherwise reports the first offending
// component.
struct PullbackFactorResult {
    bool is_homothety = false;
    Monomial factor;  // lambda^2 over spec.symbols
    std::string factor_str;
    std::string witness;
};

PullbackFactorResult pullback_factor(const MetricModel& m, const HomothetySpec& spec);

// Eigenvalue-1 coordinate directions of the numeric diagonal map.
struct FixedPointSet {
    std::vector<std::uint32_t> fixed_coords;
    std::size_t dim = 0;
    bool meets_punctured_space = false;  // nonzero fixed vectors exist
};

FixedPointSet fixed_point_set(const HomothetySpec& spec,
                              const std::vector<double>& symbol_values, double tol = 1e-10);

// Sufficient-condition certificate: a proper homothety with fixed points in
// the punctured space is essential. "certified = false" never claims
// inessentiality. Also records whether the map commutes with the deck
// generator (exact check on diagonal monomial matrices), the precondition for
// descending to the quotient.
struct EssentialityCertificate {
    bool proper_homothety = false;
    bool has_fixed_points = false;
    bool certified = false;
    bool commutes_with_deck = false;
    std::string note;
};

EssentialityCertificate essentiality_certificate(const MetricModel& m,
                                                 const HomothetySpec& spec,
                                                 const std::vector<double>& symbol_values,
                                                 const HomothetySpec& deck);

// Laurent normal form helper (exposed for tests): reduces every monomial by
// the relations u v = 1 of the spec's inverse pairs.
MultiPoly laurent_reduce(const MultiPoly& p, std::uint32_t first_symbol_var,
                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

}  // namespace pkv
