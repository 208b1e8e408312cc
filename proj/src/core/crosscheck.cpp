#include "crosscheck.hpp"

namespace pkv {

std::optional<std::string> crosscheck_realified_curvature(
    const MetricModel& holo, const TensorField& holo_riem, const MetricModel& realified,
    const TensorField& real_riem, const std::vector<GaussianRational>& x,
    const std::vector<GaussianRational>& y) {
    const std::uint32_t d = holo.dim();
    if (x.size() != d || y.size() != d)
        throw std::invalid_argument("point has the wrong dimension");

    // Holomorphic-chart point: z = x + i y, w = x - i y.
    const GaussianRational I = GaussianRational::i();
    std::vector<GaussianRational> zpt(2 * d);
    for (std::uint32_t a = 0; a < d; ++a) {
        zpt[holo.chart()->coord_var(a)] = x[a] + I * y[a];
        zpt[holo.chart()->conj_coord_var(a)] = x[a] - I * y[a];
    }
    std::vector<GaussianRational> rpt(2 * d);
    for (std::uint32_t a = 0; a < d; ++a) {
        rpt[a] = x[a];
        rpt[d + a] = y[a];
    }

    // Pre-evaluated mixed table K[D][C][A][B] at the point.
    std::vector<GaussianRational> K(static_cast<std::size_t>(d) * d * d * d);
    for (std::uint32_t dd = 0; dd < d; ++dd)
        for (std::uint32_t c = 0; c < d; ++c)
            for (std::uint32_t a = 0; a < d; ++a)
                for (std::uint32_t b = 0; b < d; ++b) {
                    const MultiPoly& p = holo_riem.at(dd, c, a, b);
                    if (!p.is_zero())
                        K[((static_cast<std::size_t>(dd) * d + c) * d + a) * d + b] =
                            p.eval(zpt);
                }
    auto kval = [&](std::uint32_t dd, std::uint32_t c, std::uint32_t a, std::uint32_t b) {
        return K[((static_cast<std::size_t>(dd) * d + c) * d + a) * d + b];
    };

    // (alpha, beta) components of the real basis vectors in the complexified frame:
    // d_{x^A} = d_{z^A} + d_{zbar^A}, d_{y^A} = i d_{z^A} - i d_{zbar^A}.
    auto split = [&](std::uint32_t mu) {
        struct Split {
            std::uint32_t index;
            GaussianRational alpha, beta;
        };
        if (mu < d) return Split{mu, GaussianRational(1), GaussianRational(1)};
        return Split{mu - d, I, -I};
    };

    const GaussianRational half = GaussianRational::make(1, 2);
    for (std::uint32_t mu = 0; mu < 2 * d; ++mu) {
        auto u = split(mu);
        for (std::uint32_t nu = mu + 1; nu < 2 * d; ++nu) {
            auto v = split(nu);
            // R(u, v) = c1 R(conj d_{A1}, d_{A2}) - c2 R(conj d_{A2}, d_{A1})
            GaussianRational c1 = u.beta * v.alpha;
            GaussianRational c2 = v.beta * u.alpha;
            for (std::uint32_t rho = 0; rho < 2 * d; ++rho) {
                auto w = split(rho);
                for (std::uint32_t dd = 0; dd < d; ++dd) {
                    GaussianRational gamma = c1 * w.alpha * kval(dd, w.index, u.index, v.index)
                                           - c2 * w.alpha * kval(dd, w.index, v.index, u.index);
                    GaussianRational delta =
                        -(c1 * w.beta * kval(dd, w.index, v.index, u.index).conj()) +
                        c2 * w.beta * kval(dd, w.index, u.index, v.index).conj();
                    // real components of gamma d_{z^D} + delta d_{zbar^D}
                    GaussianRational xcomp = (gamma + delta) * half;
                    GaussianRational ycomp = (delta - gamma) * half * I;
                    GaussianRational expected_x = real_riem.at(dd, rho, mu, nu).eval(rpt);
                    GaussianRational expected_y =
                        real_riem.at(d + dd, rho, mu, nu).eval(rpt);
                    if (xcomp != expected_x || ycomp != expected_y)
                        return "curvature cross-check mismatch at R(e" +
                               std::to_string(mu + 1) + ",e" + std::to_string(nu + 1) +
                               ")e" + std::to_string(rho + 1);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace pkv
