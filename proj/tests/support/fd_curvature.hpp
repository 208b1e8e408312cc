#pragma once

// Finite-difference curvature oracle. Deliberately independent of the exact
// tensor pipeline: it only consumes a pointwise metric evaluation and
// differentiates numerically, so agreement with the exact components is a
// genuine cross-check.

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace fdtest {

using MetricFn = std::function<Eigen::MatrixXd(const std::vector<double>&)>;

inline Eigen::MatrixXd metric_partial(const MetricFn& g, const std::vector<double>& x,
                                      int dir, double h) {
    std::vector<double> xp = x, xm = x;
    xp[dir] += h;
    xm[dir] -= h;
    return (g(xp) - g(xm)) / (2 * h);
}

// Gamma^k_{ij} at x by central differences.
inline std::vector<double> christoffel_fd(const MetricFn& g, const std::vector<double>& x,
                                          double h) {
    const int d = static_cast<int>(x.size());
    Eigen::MatrixXd ginv = g(x).inverse();
    std::vector<Eigen::MatrixXd> dg;
    dg.reserve(d);
    for (int i = 0; i < d; ++i) dg.push_back(metric_partial(g, x, i, h));
    std::vector<double> gamma(static_cast<std::size_t>(d) * d * d, 0.0);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                double acc = 0;
                for (int l = 0; l < d; ++l)
                    acc += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                gamma[(static_cast<std::size_t>(k) * d + i) * d + j] = 0.5 * acc;
            }
    return gamma;
}

// R^l_{kij} at x: derivatives of Gamma by nested central differences.
inline std::vector<double> riemann_fd(const MetricFn& g, const std::vector<double>& x,
                                      double h) {
    const int d = static_cast<int>(x.size());
    auto gamma_at = [&](const std::vector<double>& pt) { return christoffel_fd(g, pt, h); };
    std::vector<std::vector<double>> dgamma(d);
    for (int e = 0; e < d; ++e) {
        std::vector<double> xp = x, xm = x;
        xp[e] += h;
        xm[e] -= h;
        std::vector<double> gp = gamma_at(xp), gm = gamma_at(xm);
        dgamma[e].resize(gp.size());
        for (std::size_t t = 0; t < gp.size(); ++t) dgamma[e][t] = (gp[t] - gm[t]) / (2 * h);
    }
    std::vector<double> gamma = gamma_at(x);
    auto G = [&](int k, int i, int j) {
        return gamma[(static_cast<std::size_t>(k) * d + i) * d + j];
    };
    auto dG = [&](int e, int k, int i, int j) {
        return dgamma[e][(static_cast<std::size_t>(k) * d + i) * d + j];
    };
    std::vector<double> riem(static_cast<std::size_t>(d) * d * d * d, 0.0);
    for (int l = 0; l < d; ++l)
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    double acc = dG(i, l, j, k) - dG(j, l, i, k);
                    for (int m = 0; m < d; ++m)
                        acc += G(l, i, m) * G(m, j, k) - G(l, j, m) * G(m, i, k);
                    riem[((static_cast<std::size_t>(l) * d + k) * d + i) * d + j] = acc;
                }
    return riem;
}

// Ric_{jk} = sum_i R^i_{kij}.
inline Eigen::MatrixXd ricci_fd(const MetricFn& g, const std::vector<double>& x, double h) {
    const int d = static_cast<int>(x.size());
    std::vector<double> riem = riemann_fd(g, x, h);
    Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            double acc = 0;
            for (int i = 0; i < d; ++i)
                acc += riem[((static_cast<std::size_t>(i) * d + k) * d + i) * d + j];
            ric(j, k) = acc;
        }
    return ric;
}

}  // namespace fdtest
