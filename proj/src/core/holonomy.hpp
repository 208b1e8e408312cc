#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "models.hpp"
#include "tensor.hpp"

namespace pkv {

// Curvature endomorphisms R(e_mu, e_nu) at the origin of a real-chart model,
// with an exact reduced basis of their span.
struct HolonomySpan {
    std::uint32_t ambient_dim = 0;
    std::vector<ExactMatrix> generators;      // nonzero R(e_mu, e_nu)(0), mu < nu
    std::vector<ExactMatrix> basis;           // exact reduced basis of the span
    std::size_t dim = 0;
};

HolonomySpan holonomy_span(const MetricModel& m, const TensorField& riem);

// Coordinate directions c with Gamma^A_{cB} = 0 for all A, B: the parallel
// block U' (realified: x- and y-copies of the null block).
std::vector<std::uint32_t> parallel_block_indices(const MetricModel& m,
                                                  const TensorField& gamma);

// Structural certificate for the holonomy basis: strict lower-block-triangular
// shape with respect to the parallel block, abelian and square-zero, the
// skew-symmetry (real) or skew-Hermitian (realified holomorphic) structure of
// the lower blocks, and the infinitesimal isometry identity B^T g0 + g0 B = 0.
struct HolBlockReport {
    bool strictly_lower = false;
    bool abelian = false;
    bool squares_zero = false;
    bool skew_structure = false;
    bool complex_linear = false;  // commutes with J (realified holomorphic case only)
    bool infinitesimal_isometry = false;
    std::string witness;
    bool ok() const {
        return strictly_lower && abelian && squares_zero && skew_structure &&
               infinitesimal_isometry;
    }
};

HolBlockReport hol_block_structure(const HolonomySpan& h, const MetricModel& m,
                                   const std::vector<std::uint32_t>& parallel_block,
                                   bool realified_holomorphic);

// Evidence report for indecomposability: the joint kernel of the holonomy
// basis must equal U' exactly, and the orbit spans hol.v of sampled rational
// lines are recorded (per-vector achieved dimension and the union span).
struct IndecomposabilityReport {
    enum class Status { Pass, Fail, NotApplicable };
    Status status = Status::NotApplicable;
    std::size_t kernel_dim = 0;
    bool kernel_equals_parallel_block = false;
    std::vector<std::size_t> per_vector_span_dims;
    std::size_t union_span_dim = 0;
    std::size_t parallel_block_dim = 0;
    std::uint64_t seed = 0;
    std::string note;
};

IndecomposabilityReport indecomposability_evidence(const HolonomySpan& h,
                                                   const std::vector<std::uint32_t>& parallel_block,
                                                   bool sigma_nondegenerate,
                                                   std::uint64_t seed);

}  // namespace pkv
