#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "models.hpp"
#include "rng.hpp"

namespace pkv {

// Numeric Takagi factorization Q^T sigma Q = diag of a complex symmetric
// matrix, via the eigenstructure of the real symmetric doubling
// [[X, Y], [Y, -X]] of sigma = X + iY: an eigenpair M [u;v] = s [u;v] gives
// sigma conj(q) = s q for q = u + iv, and the nonnegative half of the
// spectrum yields a unitary Q.
struct TakagiResult {
    std::uint32_t n = 0;
    std::vector<std::complex<double>> q;  // row-major n x n
    std::vector<double> diag;             // nonnegative, ascending
    double residual = 0;                  // max off-diagonal of Q^T sigma Q
};

// Throws std::invalid_argument when sigma is asymmetric beyond 1e-12 or has
// condition number above 1e12 (including singular input).
TakagiResult takagi_diagonalize(const std::vector<std::complex<double>>& sigma,
                                std::uint32_t n);

// The coordinate block map induced by Q on C^{4n}: diag(Q, Q, P, P) with
// P = (conj(Q))^{-T}.
std::vector<std::complex<double>> phi_q_map(const std::vector<std::complex<double>>& q,
                                            std::uint32_t n);

// Numeric value of the model potential at a point of C^{4n}.
std::complex<double> potential_value(const std::vector<std::complex<double>>& sigma,
                                     std::uint32_t n,
                                     const std::vector<std::complex<double>>& z);

// Max |f_sigma(phi_Q z) - f_sigmahat(z)| over sampled points, where
// sigmahat = Q^T sigma Q.
double potential_pullback_residual(const std::vector<std::complex<double>>& sigma,
                                   std::uint32_t n,
                                   const std::vector<std::complex<double>>& q, Rng& rng,
                                   int samples);

// Exact check that the block map preserves the quadratic term
// sum_a (z^a w^{a+2n} + z^{a+2n} w^a); throws SingularMatrixError on singular Q.
bool check_phiQ_in_O_exact(const ExactMatrix& q, std::uint32_t n);

// Exact pullback of the potential: f_sigma(phi_Q z) = f_{Q^T sigma Q}(z).
bool check_phiQ_potential_exact(const SigmaMatrix& sigma, const ExactMatrix& q);

// Numeric counterpart of the quadratic-term check for float Q at sampled
// points; returns the max residual.
double check_phiQ_in_O_float(const std::vector<std::complex<double>>& q, std::uint32_t n,
                             Rng& rng, int samples);

}  // namespace pkv
