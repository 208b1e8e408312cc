#include "holonomy.hpp"

#include <algorithm>

#include "rng.hpp"

namespace pkv {

namespace {

std::vector<GaussianRational> flatten(const ExactMatrix& m) {
    std::vector<GaussianRational> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

ExactMatrix unflatten(const std::vector<GaussianRational>& v, std::size_t d) {
    ExactMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m.at(r, c) = v[r * d + c];
    return m;
}

}  // namespace

HolonomySpan holonomy_span(const MetricModel& m, const TensorField& riem) {
    if (!m.chart()->is_real())
        throw std::invalid_argument("holonomy_span works on real charts (realify first)");
    const std::uint32_t d = m.dim();
    HolonomySpan h;
    h.ambient_dim = d;
    std::vector<std::vector<GaussianRational>> flat;
    for (std::uint32_t mu = 0; mu < d; ++mu) {
        for (std::uint32_t nu = mu + 1; nu < d; ++nu) {
            ExactMatrix e(d, d);
            bool nonzero = false;
            for (std::uint32_t rho = 0; rho < d; ++rho)
                for (std::uint32_t sig = 0; sig < d; ++sig) {
                    // endomorphism entry: coeff of d_rho in R(d_mu, d_nu) d_sig, at 0
                    GaussianRational v = riem.at(rho, sig, mu, nu).constant_value();
                    if (!v.is_zero()) {
                        e.at(rho, sig) = v;
                        nonzero = true;
                    }
                }
            if (nonzero) {
                flat.push_back(flatten(e));
                h.generators.push_back(std::move(e));
            }
        }
    }
    for (auto& b : span_basis(flat)) h.basis.push_back(unflatten(b, d));
    h.dim = h.basis.size();
    return h;
}

std::vector<std::uint32_t> parallel_block_indices(const MetricModel& m,
                                                  const TensorField& gamma) {
    const std::uint32_t d = m.dim();
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < d; ++c) {
        bool parallel = true;
        for (std::uint32_t a = 0; a < d && parallel; ++a)
            for (std::uint32_t b = 0; b < d && parallel; ++b)
                if (!gamma.at(a, c, b).is_zero()) parallel = false;
        if (parallel) out.push_back(c);
    }
    return out;
}

HolBlockReport hol_block_structure(const HolonomySpan& h, const MetricModel& m,
                                   const std::vector<std::uint32_t>& parallel_block,
                                   bool realified_holomorphic) {
    HolBlockReport rep;
    const std::uint32_t d = h.ambient_dim;
    std::vector<bool> in_par(d, false);
    for (std::uint32_t c : parallel_block) in_par[c] = true;

    // Strict lower-block shape: image inside U', U' annihilated.
    rep.strictly_lower = true;
    for (const ExactMatrix& b : h.basis) {
        for (std::uint32_t r = 0; r < d && rep.strictly_lower; ++r)
            for (std::uint32_t c = 0; c < d; ++c) {
                if (b.at(r, c).is_zero()) continue;
                if (!in_par[r] || in_par[c]) {
                    rep.strictly_lower = false;
                    rep.witness = "entry (" + std::to_string(r + 1) + "," +
                                  std::to_string(c + 1) + ") breaks the block shape";
                    break;
                }
            }
    }

    rep.abelian = true;
    rep.squares_zero = true;
    for (std::size_t i = 0; i < h.basis.size(); ++i) {
        if (!(h.basis[i] * h.basis[i]).is_zero()) rep.squares_zero = false;
        for (std::size_t j = i + 1; j < h.basis.size(); ++j) {
            ExactMatrix comm = h.basis[i] * h.basis[j] - h.basis[j] * h.basis[i];
            if (!comm.is_zero()) rep.abelian = false;
        }
    }

    // Infinitesimal isometry at the origin: B^T g0 + g0 B = 0.
    ExactMatrix g0(d, d);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) g0.at(a, b) = m.g().at(a, b).constant_value();
    rep.infinitesimal_isometry = true;
    for (const ExactMatrix& b : h.basis)
        if (!(b.transpose() * g0 + g0 * b).is_zero()) rep.infinitesimal_isometry = false;

    // Lower-block structure. Real models: skew-symmetric blocks. Realified
    // holomorphic models: complex-linear with skew-Hermitian blocks, read off
    // through X = H_xx, Y = H_yx.
    if (!realified_holomorphic) {
        rep.complex_linear = true;  // not applicable
        rep.skew_structure = true;
        for (const ExactMatrix& b : h.basis) {
            const std::size_t np = parallel_block.size();
            std::vector<std::uint32_t> comp;
            for (std::uint32_t c = 0; c < d; ++c)
                if (!in_par[c]) comp.push_back(c);
            if (comp.size() != np) {
                rep.skew_structure = false;
                break;
            }
            for (std::size_t r = 0; r < np; ++r)
                for (std::size_t c = 0; c < np; ++c)
                    if (b.at(parallel_block[r], comp[c]) !=
                        -b.at(parallel_block[c], comp[r]))
                        rep.skew_structure = false;
        }
    } else {
        const std::uint32_t half = d / 2;   // complex dimension 4n
        const std::uint32_t quar = d / 4;   // block size 2n
        rep.complex_linear = true;
        rep.skew_structure = true;
        for (const ExactMatrix& b : h.basis) {
            // J(x_A) = y_A, J(y_A) = -x_A; complex linearity means
            // b = [[X, -Y], [Y, X]] in the (x, y) splitting.
            for (std::uint32_t r = 0; r < half; ++r)
                for (std::uint32_t c = 0; c < half; ++c) {
                    if (b.at(r, c) != b.at(half + r, half + c)) rep.complex_linear = false;
                    if (b.at(half + r, c) != -b.at(r, half + c)) rep.complex_linear = false;
                }
            if (!rep.complex_linear) break;
            // The complex matrix M = X + iY (X = b_xx, Y = b_yx) must be
            // skew-Hermitian on its lower-left 2n x 2n block: Re part skew,
            // Im part symmetric. That block sits at rows [2n, 4n) of M.
            for (std::uint32_t r = 0; r < quar; ++r)
                for (std::uint32_t c = 0; c < quar; ++c) {
                    const GaussianRational& x = b.at(quar + r, c);         // Re M lower block
                    const GaussianRational& xt = b.at(quar + c, r);
                    const GaussianRational& y = b.at(half + quar + r, c);  // Im M lower block
                    const GaussianRational& yt = b.at(half + quar + c, r);
                    if (x != -xt || y != yt) rep.skew_structure = false;
                }
        }
    }
    return rep;
}

IndecomposabilityReport indecomposability_evidence(
    const HolonomySpan& h, const std::vector<std::uint32_t>& parallel_block,
    bool sigma_nondegenerate, std::uint64_t seed) {
    IndecomposabilityReport rep;
    rep.seed = seed;
    rep.parallel_block_dim = parallel_block.size();
    if (!sigma_nondegenerate) {
        rep.status = IndecomposabilityReport::Status::NotApplicable;
        rep.note = "sigma is degenerate; the holonomy argument does not apply";
        return rep;
    }
    const std::uint32_t d = h.ambient_dim;
    std::vector<bool> in_par(d, false);
    for (std::uint32_t c : parallel_block) in_par[c] = true;

    // Joint kernel of the basis == span of the parallel coordinate directions.
    std::vector<std::vector<GaussianRational>> stacked;
    for (const ExactMatrix& b : h.basis)
        for (std::size_t r = 0; r < d; ++r) {
            std::vector<GaussianRational> row(d);
            for (std::size_t c = 0; c < d; ++c) row[c] = b.at(r, c);
            stacked.push_back(std::move(row));
        }
    std::vector<std::vector<GaussianRational>> kernel =
        h.basis.empty() ? std::vector<std::vector<GaussianRational>>()
                        : ExactMatrix::from_rows(stacked).kernel_basis();
    rep.kernel_dim = kernel.size();
    std::vector<std::vector<GaussianRational>> par_basis;
    for (std::uint32_t c : parallel_block) {
        std::vector<GaussianRational> e(d);
        e[c] = GaussianRational(1);
        par_basis.push_back(std::move(e));
    }
    std::vector<std::vector<GaussianRational>> joint = kernel;
    joint.insert(joint.end(), par_basis.begin(), par_basis.end());
    rep.kernel_equals_parallel_block =
        kernel.size() == par_basis.size() && span_rank(joint) == par_basis.size();

    // Orbit spans hol.v for random rational v not in U'.
    Rng rng(seed);
    std::vector<std::vector<GaussianRational>> union_images;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<GaussianRational> v;
        bool outside = false;
        do {
            v = rng.rational_vector(d, /*real_only=*/true);
            outside = false;
            for (std::uint32_t c = 0; c < d; ++c)
                if (!in_par[c] && !v[c].is_zero()) outside = true;
        } while (!outside);
        std::vector<std::vector<GaussianRational>> images;
        for (const ExactMatrix& b : h.basis) images.push_back(b.apply(v));
        rep.per_vector_span_dims.push_back(span_rank(images));
        union_images.insert(union_images.end(), images.begin(), images.end());
    }
    rep.union_span_dim = span_rank(union_images);

    bool orbit_ok = rep.union_span_dim == rep.parallel_block_dim;
    rep.status = (rep.kernel_equals_parallel_block && orbit_ok)
                     ? IndecomposabilityReport::Status::Pass
                     : IndecomposabilityReport::Status::Fail;
    std::string dims;
    for (std::size_t k : rep.per_vector_span_dims) dims += std::to_string(k) + " ";
    rep.note = "kernel dim " + std::to_string(rep.kernel_dim) + ", per-vector orbit spans [" +
               dims + "], union span " + std::to_string(rep.union_span_dim) + " of " +
               std::to_string(rep.parallel_block_dim);
    return rep;
}

}  // namespace pkv
