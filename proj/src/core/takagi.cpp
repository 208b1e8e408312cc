#include "takagi.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace pkv {

TakagiResult takagi_diagonalize(const std::vector<std::complex<double>>& sigma,
                                std::uint32_t n) {
    if (sigma.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("sigma has the wrong shape");
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (std::abs(sigma[i * n + j] - sigma[j * n + i]) > 1e-12)
                throw std::invalid_argument("sigma is not symmetric within 1e-12");

    Eigen::MatrixXd M(2 * n, 2 * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            double x = sigma[i * n + j].real();
            double y = sigma[i * n + j].imag();
            M(i, j) = x;
            M(i, n + j) = y;
            M(n + i, j) = y;
            M(n + i, n + j) = -x;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(M);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");

    // Ascending spectrum is symmetric about zero; the top n entries are the
    // singular values of sigma.
    double smax = eig.eigenvalues()(2 * n - 1);
    double smin = eig.eigenvalues()(n);  // smallest nonnegative
    if (smin <= 0 || smax / smin > 1e12)
        throw std::invalid_argument("sigma is singular or ill-conditioned (cond > 1e12)");

    TakagiResult res;
    res.n = n;
    res.q.assign(static_cast<std::size_t>(n) * n, {0, 0});
    res.diag.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        res.diag[k] = eig.eigenvalues()(n + k);
        for (std::uint32_t r = 0; r < n; ++r) {
            double u = eig.eigenvectors()(r, n + k);
            double v = eig.eigenvectors()(n + r, n + k);
            res.q[r * n + k] = {u, v};
        }
    }
    // Residual of Q^T sigma Q against its diagonal.
    res.residual = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            std::complex<double> acc = 0;
            for (std::uint32_t r = 0; r < n; ++r)
                for (std::uint32_t c = 0; c < n; ++c)
                    acc += res.q[r * n + i] * sigma[r * n + c] * res.q[c * n + j];
            if (i != j) res.residual = std::max(res.residual, std::abs(acc));
        }
    return res;
}

std::vector<std::complex<double>> phi_q_map(const std::vector<std::complex<double>>& q,
                                            std::uint32_t n) {
    Eigen::MatrixXcd Q(n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) Q(i, j) = q[i * n + j];
    Eigen::MatrixXcd P = Q.conjugate().inverse().transpose();
    const std::uint32_t d = 4 * n;
    std::vector<std::complex<double>> map(static_cast<std::size_t>(d) * d, {0, 0});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            map[(i)*d + j] = Q(i, j);
            map[(i + n) * d + (j + n)] = Q(i, j);
            map[(i + 2 * n) * d + (j + 2 * n)] = P(i, j);
            map[(i + 3 * n) * d + (j + 3 * n)] = P(i, j);
        }
    return map;
}

std::complex<double> potential_value(const std::vector<std::complex<double>>& sigma,
                                     std::uint32_t n,
                                     const std::vector<std::complex<double>>& z) {
    std::complex<double> f = 0;
    for (std::uint32_t a = 0; a < 2 * n; ++a) {
        f += z[a] * std::conj(z[a + 2 * n]);
        f += z[a + 2 * n] * std::conj(z[a]);
    }
    std::complex<double> s = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) s += sigma[i * n + j] * z[i] * z[j + n];
    f += s * std::conj(s);
    return f;
}

double potential_pullback_residual(const std::vector<std::complex<double>>& sigma,
                                   std::uint32_t n,
                                   const std::vector<std::complex<double>>& q, Rng& rng,
                                   int samples) {
    const std::uint32_t d = 4 * n;
    std::vector<std::complex<double>> map = phi_q_map(q, n);
    // sigmahat = Q^T sigma Q
    std::vector<std::complex<double>> hat(static_cast<std::size_t>(n) * n, {0, 0});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            std::complex<double> acc = 0;
            for (std::uint32_t r = 0; r < n; ++r)
                for (std::uint32_t c = 0; c < n; ++c)
                    acc += q[r * n + i] * sigma[r * n + c] * q[c * n + j];
            hat[i * n + j] = acc;
        }
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        std::vector<std::complex<double>> z(d);
        for (auto& v : z) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        std::vector<std::complex<double>> mapped(d, {0, 0});
        for (std::uint32_t r = 0; r < d; ++r)
            for (std::uint32_t c = 0; c < d; ++c) mapped[r] += map[r * d + c] * z[c];
        std::complex<double> lhs = potential_value(sigma, n, mapped);
        std::complex<double> rhs = potential_value(hat, n, z);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

namespace {

// Exact block map images for the holomorphic chart of dimension 4n.
std::vector<MultiPoly> phi_q_images(const ChartPtr& chart, const ExactMatrix& q,
                                    std::uint32_t n) {
    ExactMatrix p = q.conj().inverse().transpose();
    const std::uint32_t nv = chart->nvars();
    std::vector<MultiPoly> images(nv, MultiPoly(nv));
    auto block = [&](const ExactMatrix& mat, std::uint32_t off) {
        for (std::uint32_t i = 0; i < n; ++i) {
            MultiPoly imgz(nv), imgw(nv);
            for (std::uint32_t k = 0; k < n; ++k) {
                if (mat.at(i, k).is_zero()) continue;
                imgz += MultiPoly::variable(nv, chart->coord_var(off + k)).scaled(mat.at(i, k));
                imgw += MultiPoly::variable(nv, chart->conj_coord_var(off + k))
                            .scaled(mat.at(i, k).conj());
            }
            images[chart->coord_var(off + i)] = imgz;
            images[chart->conj_coord_var(off + i)] = imgw;
        }
    };
    block(q, 0);
    block(q, n);
    block(p, 2 * n);
    block(p, 3 * n);
    return images;
}

}  // namespace

bool check_phiQ_in_O_exact(const ExactMatrix& q, std::uint32_t n) {
    ChartPtr chart = Chart::holomorphic_pair(4 * n);
    const std::uint32_t nv = chart->nvars();
    std::vector<MultiPoly> images = phi_q_images(chart, q, n);
    MultiPoly quad(nv);
    for (std::uint32_t a = 0; a < 2 * n; ++a) {
        quad += MultiPoly::variable(nv, chart->coord_var(a)) *
                MultiPoly::variable(nv, chart->conj_coord_var(a + 2 * n));
        quad += MultiPoly::variable(nv, chart->coord_var(a + 2 * n)) *
                MultiPoly::variable(nv, chart->conj_coord_var(a));
    }
    return quad.compose(images, nv) == quad;
}

bool check_phiQ_potential_exact(const SigmaMatrix& sigma, const ExactMatrix& q) {
    const std::uint32_t n = sigma.n();
    ChartPtr chart = Chart::holomorphic_pair(4 * n);
    const std::uint32_t nv = chart->nvars();
    std::vector<MultiPoly> images = phi_q_images(chart, q, n);
    MultiPoly f = complex_potential(sigma);
    ExactMatrix hat = q.transpose() * sigma.entries() * q;
    MultiPoly fhat = complex_potential(SigmaMatrix::make(n, hat));
    return f.compose(images, nv) == fhat;
}

double check_phiQ_in_O_float(const std::vector<std::complex<double>>& q, std::uint32_t n,
                             Rng& rng, int samples) {
    const std::uint32_t d = 4 * n;
    std::vector<std::complex<double>> map = phi_q_map(q, n);
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        std::vector<std::complex<double>> z(d);
        for (auto& v : z) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        std::vector<std::complex<double>> mapped(d, {0, 0});
        for (std::uint32_t r = 0; r < d; ++r)
            for (std::uint32_t c = 0; c < d; ++c) mapped[r] += map[r * d + c] * z[c];
        std::complex<double> lhs = 0, rhs = 0;
        for (std::uint32_t a = 0; a < 2 * n; ++a) {
            lhs += mapped[a] * std::conj(mapped[a + 2 * n]) +
                   mapped[a + 2 * n] * std::conj(mapped[a]);
            rhs += z[a] * std::conj(z[a + 2 * n]) + z[a + 2 * n] * std::conj(z[a]);
        }
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace pkv
