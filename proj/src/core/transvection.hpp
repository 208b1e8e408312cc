#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holonomy.hpp"
#include "linalg.hpp"
#include "tensor.hpp"

namespace pkv {

// Lie algebra g = hol (+) m of infinitesimal transvections of a symmetric
// model, presented by exact structure constants on the basis
// (hol basis, coordinate basis of the tangent space at the origin).
// Bracket rules: [h1,h2] = matrix commutator, [h,X] = h X, [X,Y] = -R(X,Y)
// resolved in the hol basis.
class TransvectionAlgebra {
public:
    using SparseVec = std::vector<std::pair<std::uint32_t, GaussianRational>>;

    std::size_t hol_dim() const { return hol_dim_; }
    std::size_t m_dim() const { return m_dim_; }
    std::size_t dim() const { return hol_dim_ + m_dim_; }

    const SparseVec& bracket(std::uint32_t a, std::uint32_t b) const {
        return table_[a * dim() + b];
    }
    // [e_a, v] for a coefficient vector v over the combined basis.
    std::vector<GaussianRational> ad(std::uint32_t a,
                                     const std::vector<GaussianRational>& v) const;

    static TransvectionAlgebra build(const MetricModel& m, const TensorField& riem,
                                     const HolonomySpan& h);

private:
    std::size_t hol_dim_ = 0, m_dim_ = 0;
    std::vector<SparseVec> table_;
};

// Exhaustive Jacobi verification over all basis triples; returns a witness on
// failure.
std::optional<std::string> check_jacobi(const TransvectionAlgebra& t);

// Lower central series, center and solvability data, all computed exactly.
struct NilpotencyReport {
    std::size_t dim_g = 0;
    std::size_t dim_g1 = 0;  // [g, g]
    std::size_t dim_g2 = 0;  // [g, [g, g]]
    std::size_t dim_g3 = 0;  // next step; 0 certifies 3-step nilpotency
    bool g1_is_hol_plus_parallel = false;
    bool g2_is_parallel = false;
    bool three_step_nilpotent = false;
    std::size_t center_dim = 0;
    bool parallel_in_center = false;
    bool center_is_parallel = false;
    bool derived_abelian = false;  // [g', g'] = 0 (2-step solvable)
    std::string note;
};

NilpotencyReport nilpotency_certificate(const TransvectionAlgebra& t,
                                        const std::vector<std::uint32_t>& parallel_block);

// Complex-structure checks at the origin of the 4-dimensional comparison
// model: J^2 = -1, Hermitian symmetry of the constant part g0 of the metric,
// invariance of J under the holonomy basis, and whether the two-parameter
// diagonal homothety family commutes with J (it does not for generic scales).
struct ComplexStructureReport {
    bool j_squares_minus_one = false;
    bool g0_hermitian = false;
    bool hol_invariant = false;
    bool phi_ab_commutes_with_j = true;  // expected false for generic scales
    std::string witness;
};

ComplexStructureReport complex_structure_check(const MetricModel& frances,
                                               const HolonomySpan& hol);

}  // namespace pkv
