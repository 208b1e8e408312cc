#pragma once

#include <cstdint>
#include <string>

#include "linalg.hpp"
#include "tensor.hpp"

namespace pkv {

// Symmetric n x n coefficient matrix sigma driving both model families.
class SigmaMatrix {
public:
    static SigmaMatrix make(std::uint32_t n, ExactMatrix entries);
    static SigmaMatrix identity(std::uint32_t n);
    static SigmaMatrix zero(std::uint32_t n);

    std::uint32_t n() const { return n_; }
    const ExactMatrix& entries() const { return entries_; }
    const GaussianRational& at(std::uint32_t i, std::uint32_t j) const {
        return entries_.at(i, j);
    }
    bool is_real() const;
    // Exact rank test; degenerate sigma gates the holonomy-dimension claims.
    bool nondegenerate() const;
    std::string str() const;

private:
    SigmaMatrix(std::uint32_t n, ExactMatrix entries) : n_(n), entries_(std::move(entries)) {}
    std::uint32_t n_;
    ExactMatrix entries_;
};

// Kaehler potential on the holomorphic-pair chart of dimension 4n:
//   f = sum_a (z^a w^{a+2n} + z^{a+2n} w^a) + s(z) * conj(s)(w),
// with s(z) = sigma_{ij} z^i z^{j+n}. The quadratic part is written in its
// Hermitian-symmetric form so that f is real-valued and the mixed Hessian
// carries both unit off-diagonal blocks.
MultiPoly complex_potential(const SigmaMatrix& sigma);

// The quadratic form s(z) alone (on the holomorphic-pair chart of dim 4n).
MultiPoly sigma_quadric(const SigmaMatrix& sigma);

// Indefinite Kaehler model on C^{4n}: h_{AB} = d_{z^A} d_{w^B} f, with the
// block inverse [[0, 1], [1, -h_ab]] installed and verified exactly.
MetricModel build_complex_model(const SigmaMatrix& sigma);

// Real coordinate substitution z^A = x^A + i y^A, w^A = x^A - i y^A applied to
// g = h_{AB} dz^A . dconj(z)^B, normalised so that h = 1 realifies to
// dx^2 + dy^2. Output chart: (x^1..x^d, y^1..y^d). Throws if any component
// keeps a nonzero imaginary part.
MetricModel realify(const MetricModel& holo);

// Low-level entry used by realify (exposed for direct testing of the
// imaginary-residue error path).
TensorField realify_hermitian_tensor(const ChartPtr& holo_chart, const ChartPtr& real_chart,
                                     const TensorField& h);

// Neutral-signature model on R^{4n}:
//   g = 2 delta_{ab} dx^a dx^{b+2n} + (sigma_{ij} d(x^i x^{j+n}))^2.
MetricModel build_real_model(const SigmaMatrix& sigma);

// Hessian metric of the restricted potential
//   f = delta_{ab} x^a x^{b+2n} + (sigma_{ij} x^i x^{j+n})^2
// on R^{4n}; flat, and deliberately different from build_real_model in the
// mixed component family.
MetricModel build_hessian_comparison(const SigmaMatrix& sigma);

// The signature-(2,2) comparison metric 2dy1dy3 + 2dy2dy4 + (y2)^2 (dy1)^2 on R^4.
MetricModel build_frances_model();

// Block product with the flat metric -sum_{i<=k} (de^i)^2 + sum_{j<=l} (de^j)^2.
MetricModel build_product_extension(const MetricModel& base, std::uint32_t k, std::uint32_t l);

// --- Regression tables -----------------------------------------------------------

// Expected mixed Hessian of the complex model: the five nonzero component
// families, all other components zero.
TensorField expected_complex_metric(const SigmaMatrix& sigma);

// Expected nonzero Christoffel symbols of the complex model,
// Gamma^{l+2n}_{i+n,j} = sigma_{ij} conj(sigma)_{kl} w^{k+n} and
// Gamma^{l+3n}_{i+n,j} = sigma_{ij} conj(sigma)_{kl} w^k (symmetrised in the
// lower pair).
TensorField expected_complex_christoffels(const SigmaMatrix& sigma);

// Expected mixed curvature table of the complex model (coefficient of d_D in
// R(conj d_A, d_B) d_C).
TensorField expected_complex_curvature(const SigmaMatrix& sigma);

// Expected nonzero Christoffels of the real model,
// Gamma^{k+2n}_{i,j+n} = sigma_{ij} sigma_{kl} x^{l+n},
// Gamma^{k+3n}_{i,j+n} = sigma_{ij} sigma_{kl} x^l.
TensorField expected_real_christoffels(const SigmaMatrix& sigma);

// Expected curvature table of the real model (constant components).
TensorField expected_real_curvature(const SigmaMatrix& sigma);

// Expected Hessian-comparison component families from the restricted potential.
TensorField expected_hessian_comparison(const SigmaMatrix& sigma);

}  // namespace pkv
