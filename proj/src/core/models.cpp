#include "models.hpp"

#include <sstream>
#include <stdexcept>

namespace pkv {

SigmaMatrix SigmaMatrix::make(std::uint32_t n, ExactMatrix entries) {
    if (n == 0) throw std::invalid_argument("sigma requires n >= 1");
    if (entries.rows() != n || entries.cols() != n)
        throw std::invalid_argument("sigma has the wrong shape");
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (entries.at(i, j) != entries.at(j, i))
                throw std::invalid_argument("sigma must be symmetric");
    return SigmaMatrix(n, std::move(entries));
}

SigmaMatrix SigmaMatrix::identity(std::uint32_t n) {
    return SigmaMatrix(n, ExactMatrix::identity(n));
}

SigmaMatrix SigmaMatrix::zero(std::uint32_t n) {
    return SigmaMatrix(n, ExactMatrix(n, n));
}

bool SigmaMatrix::is_real() const {
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < n_; ++j)
            if (!entries_.at(i, j).is_real()) return false;
    return true;
}

bool SigmaMatrix::nondegenerate() const { return entries_.rank() == n_; }

std::string SigmaMatrix::str() const {
    std::ostringstream out;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (i) out << ";";
        for (std::uint32_t j = 0; j < n_; ++j) {
            if (j) out << ",";
            out << entries_.at(i, j).str();
        }
    }
    return out.str();
}

MultiPoly sigma_quadric(const SigmaMatrix& sigma) {
    const std::uint32_t n = sigma.n();
    ChartPtr chart = Chart::holomorphic_pair(4 * n);
    MultiPoly s = chart->zero();
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            if (sigma.at(i, j).is_zero()) continue;
            s += (chart->var(chart->coord_var(i)) * chart->var(chart->coord_var(j + n)))
                     .scaled(sigma.at(i, j));
        }
    return s;
}

MultiPoly complex_potential(const SigmaMatrix& sigma) {
    const std::uint32_t n = sigma.n();
    ChartPtr chart = Chart::holomorphic_pair(4 * n);
    MultiPoly f = chart->zero();
    for (std::uint32_t a = 0; a < 2 * n; ++a) {
        f += chart->var(chart->coord_var(a)) * chart->var(chart->conj_coord_var(a + 2 * n));
        f += chart->var(chart->coord_var(a + 2 * n)) * chart->var(chart->conj_coord_var(a));
    }
    MultiPoly s = sigma_quadric(sigma);
    f += s * chart->conjugate(s);
    return f;
}

namespace {

// Installs the block inverse [[0, 1], [1, -upper_left]] shared by all models
// whose component matrix has the form [[*, 1], [1, 0]].
TensorField block_inverse(const ChartPtr& chart, const TensorField& g) {
    const std::uint32_t d = chart->dim();
    const std::uint32_t half = d / 2;
    TensorField inv(chart, {Variance::Upper, Variance::Upper});
    for (std::uint32_t a = 0; a < half; ++a) {
        inv.at(a, a + half) = chart->constant(GaussianRational(1));
        inv.at(a + half, a) = chart->constant(GaussianRational(1));
    }
    for (std::uint32_t a = 0; a < half; ++a)
        for (std::uint32_t b = 0; b < half; ++b) inv.at(a + half, b + half) = -g.at(a, b);
    return inv;
}

}  // namespace

MetricModel build_complex_model(const SigmaMatrix& sigma) {
    const std::uint32_t n = sigma.n();
    ChartPtr chart = Chart::holomorphic_pair(4 * n);
    MultiPoly f = complex_potential(sigma);
    TensorField h(chart, {Variance::Lower, Variance::Lower});
    for (std::uint32_t a = 0; a < 4 * n; ++a) {
        MultiPoly da = f.partial(chart->coord_var(a));
        for (std::uint32_t b = 0; b < 4 * n; ++b)
            h.at(a, b) = da.partial(chart->conj_coord_var(b));
    }
    return MetricModel::create(chart, h, block_inverse(chart, h),
                               "complex-model(n=" + std::to_string(n) +
                                   ",sigma=" + sigma.str() + ")");
}

TensorField realify_hermitian_tensor(const ChartPtr& holo_chart, const ChartPtr& real_chart,
                                     const TensorField& h) {
    const std::uint32_t d = holo_chart->dim();
    const std::uint32_t nv = real_chart->nvars();
    if (real_chart->dim() != 2 * d)
        throw std::invalid_argument("realified chart must have twice the dimension");

    // z^A -> x^A + i y^A, w^A -> x^A - i y^A
    std::vector<MultiPoly> images(holo_chart->nvars(), MultiPoly(nv));
    for (std::uint32_t a = 0; a < d; ++a) {
        MultiPoly x = MultiPoly::variable(nv, a);
        MultiPoly y = MultiPoly::variable(nv, d + a);
        images[holo_chart->coord_var(a)] = x + y.scaled(GaussianRational::i());
        images[holo_chart->conj_coord_var(a)] = x - y.scaled(GaussianRational::i());
    }

    std::vector<MultiPoly> sub(static_cast<std::size_t>(d) * d, MultiPoly(nv));
    for (std::uint32_t c = 0; c < d; ++c)
        for (std::uint32_t e = 0; e < d; ++e)
            if (!h.at(c, e).is_zero()) sub[c * d + e] = h.at(c, e).compose(images, nv);

    const GaussianRational half = GaussianRational::make(1, 2);
    const GaussianRational half_i = GaussianRational::make(1, 2) * GaussianRational::i();
    TensorField out(real_chart, h.variance());
    for (std::uint32_t c = 0; c < d; ++c) {
        for (std::uint32_t e = 0; e < d; ++e) {
            const MultiPoly& ce = sub[c * d + e];
            const MultiPoly& ec = sub[e * d + c];
            MultiPoly xx = (ce + ec).scaled(half);
            MultiPoly xy = (ec - ce).scaled(half_i);
            for (const MultiPoly* p : {&xx, &xy}) {
                if (!p->has_real_coeffs()) {
                    throw std::runtime_error(
                        "realification produced a nonzero imaginary residue at (" +
                        std::to_string(c + 1) + "," + std::to_string(e + 1) +
                        "); the input is not Hermitian");
                }
            }
            out.at(c, e) = xx;                // x^C x^E block
            out.at(d + c, d + e) = xx;        // y^C y^E block
            out.at(c, d + e) = xy;            // x^C y^E block
            out.at(d + c, e) = -xy;           // y^C x^E block
        }
    }
    return out;
}

MetricModel realify(const MetricModel& holo) {
    if (holo.chart()->is_real())
        throw std::invalid_argument("realify expects a holomorphic-pair model");
    const std::uint32_t d = holo.dim();
    std::vector<std::string> names;
    names.reserve(2 * d);
    for (std::uint32_t a = 1; a <= d; ++a) names.push_back("x" + std::to_string(a));
    for (std::uint32_t a = 1; a <= d; ++a) names.push_back("y" + std::to_string(a));
    ChartPtr real_chart = Chart::real(std::move(names));
    TensorField g = realify_hermitian_tensor(holo.chart(), real_chart, holo.g());
    TensorField g_inv = realify_hermitian_tensor(holo.chart(), real_chart, holo.g_inv());
    return MetricModel::create(real_chart, std::move(g), std::move(g_inv),
                               "realified(" + holo.provenance() + ")");
}

MetricModel build_real_model(const SigmaMatrix& sigma) {
    if (!sigma.is_real())
        throw std::invalid_argument("the real model requires a real sigma");
    const std::uint32_t n = sigma.n();
    const std::uint32_t d = 4 * n;
    ChartPtr chart = Chart::real(d);
    const std::uint32_t nv = chart->nvars();

    // One-form sigma_{ij} d(x^i x^{j+n}) expanded over the first 2n coordinates.
    std::vector<MultiPoly> omega(2 * n, MultiPoly(nv));
    for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t i = 0; i < n; ++i) {
            if (sigma.at(i, j).is_zero()) continue;
            omega[j] += MultiPoly::variable(nv, i + n).scaled(sigma.at(i, j));
            omega[j + n] += MultiPoly::variable(nv, i).scaled(sigma.at(i, j));
        }
    }

    TensorField g(chart, {Variance::Lower, Variance::Lower});
    for (std::uint32_t a = 0; a < 2 * n; ++a) {
        g.at(a, a + 2 * n) = chart->constant(GaussianRational(1));
        g.at(a + 2 * n, a) = chart->constant(GaussianRational(1));
    }
    for (std::uint32_t a = 0; a < 2 * n; ++a)
        for (std::uint32_t b = 0; b < 2 * n; ++b)
            if (!omega[a].is_zero() && !omega[b].is_zero()) g.at(a, b) = omega[a] * omega[b];

    return MetricModel::create(chart, g, block_inverse(chart, g),
                               "real-model(n=" + std::to_string(n) +
                                   ",sigma=" + sigma.str() + ")");
}

MetricModel build_hessian_comparison(const SigmaMatrix& sigma) {
    if (!sigma.is_real())
        throw std::invalid_argument("the Hessian comparison requires a real sigma");
    const std::uint32_t n = sigma.n();
    const std::uint32_t d = 4 * n;
    ChartPtr chart = Chart::real(d);
    const std::uint32_t nv = chart->nvars();

    MultiPoly f(nv);
    for (std::uint32_t a = 0; a < 2 * n; ++a)
        f += MultiPoly::variable(nv, a) * MultiPoly::variable(nv, a + 2 * n);
    MultiPoly s(nv);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (!sigma.at(i, j).is_zero())
                s += (MultiPoly::variable(nv, i) * MultiPoly::variable(nv, j + n))
                         .scaled(sigma.at(i, j));
    f += s * s;

    TensorField h(chart, {Variance::Lower, Variance::Lower});
    for (std::uint32_t a = 0; a < d; ++a) {
        MultiPoly da = f.partial(a);
        for (std::uint32_t b = 0; b < d; ++b) h.at(a, b) = da.partial(b);
    }
    return MetricModel::create(chart, h, block_inverse(chart, h),
                               "hessian-comparison(n=" + std::to_string(n) +
                                   ",sigma=" + sigma.str() + ")");
}

MetricModel build_frances_model() {
    ChartPtr chart = Chart::real({"y1", "y2", "y3", "y4"});
    const std::uint32_t nv = 4;
    TensorField g(chart, {Variance::Lower, Variance::Lower});
    g.at(0, 2) = chart->constant(GaussianRational(1));
    g.at(2, 0) = chart->constant(GaussianRational(1));
    g.at(1, 3) = chart->constant(GaussianRational(1));
    g.at(3, 1) = chart->constant(GaussianRational(1));
    g.at(0, 0) = MultiPoly::variable(nv, 1) * MultiPoly::variable(nv, 1);
    return MetricModel::create(chart, g, block_inverse(chart, g), "frances");
}

MetricModel build_product_extension(const MetricModel& base, std::uint32_t k,
                                    std::uint32_t l) {
    if (!base.chart()->is_real())
        throw std::invalid_argument("product extension expects a real-chart model");
    if (k == 0 && l == 0) return base;
    const std::uint32_t d = base.dim();
    const std::uint32_t dd = d + k + l;
    std::vector<std::string> names = base.chart()->var_names();
    for (std::uint32_t e = 1; e <= k + l; ++e) names.push_back("e" + std::to_string(e));
    ChartPtr chart = Chart::real(std::move(names));

    std::vector<std::uint32_t> embed_map(d);
    for (std::uint32_t v = 0; v < d; ++v) embed_map[v] = v;

    TensorField g(chart, {Variance::Lower, Variance::Lower});
    TensorField g_inv(chart, {Variance::Upper, Variance::Upper});
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) {
            if (!base.g().at(a, b).is_zero()) g.at(a, b) = base.g().at(a, b).embed(dd, embed_map);
            if (!base.g_inv().at(a, b).is_zero())
                g_inv.at(a, b) = base.g_inv().at(a, b).embed(dd, embed_map);
        }
    for (std::uint32_t e = 0; e < k + l; ++e) {
        GaussianRational v = e < k ? GaussianRational(-1) : GaussianRational(1);
        g.at(d + e, d + e) = chart->constant(v);
        g_inv.at(d + e, d + e) = chart->constant(v);
    }
    return MetricModel::create(chart, std::move(g), std::move(g_inv),
                               "product(" + base.provenance() + ",k=" + std::to_string(k) +
                                   ",l=" + std::to_string(l) + ")");
}

TensorField expected_complex_metric(const SigmaMatrix& sigma) {
    const std::uint32_t n = sigma.n();
    ChartPtr chart = Chart::holomorphic_pair(4 * n);
    const std::uint32_t nv = chart->nvars();
    TensorField h(chart, {Variance::Lower, Variance::Lower});
    for (std::uint32_t a = 0; a < 2 * n; ++a) {
        h.at(a, a + 2 * n) = chart->constant(GaussianRational(1));
        h.at(a + 2 * n, a) = chart->constant(GaussianRational(1));
    }
    auto z = [&](std::uint32_t a) { return MultiPoly::variable(nv, chart->coord_var(a)); };
    auto w = [&](std::uint32_t a) { return MultiPoly::variable(nv, chart->conj_coord_var(a)); };
    for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t l = 0; l < n; ++l) {
            MultiPoly h_jl(nv), h_jln(nv), h_jnl(nv), h_jnln(nv);
            for (std::uint32_t i = 0; i < n; ++i) {
                for (std::uint32_t kk = 0; kk < n; ++kk) {
                    GaussianRational c = sigma.at(i, j) * sigma.at(kk, l).conj();
                    if (c.is_zero()) continue;
                    h_jl += (z(i + n) * w(kk + n)).scaled(c);
                    h_jln += (z(i + n) * w(kk)).scaled(c);
                    h_jnl += (z(i) * w(kk + n)).scaled(c);
                    h_jnln += (z(i) * w(kk)).scaled(c);
                }
            }
            h.at(j, l) += h_jl;
            h.at(j, l + n) += h_jln;
            h.at(j + n, l) += h_jnl;
            h.at(j + n, l + n) += h_jnln;
        }
    }
    return h;
}

TensorField expected_complex_christoffels(const SigmaMatrix& sigma) {
    const std::uint32_t n = sigma.n();
    ChartPtr chart = Chart::holomorphic_pair(4 * n);
    const std::uint32_t nv = chart->nvars();
    TensorField gamma(chart, {Variance::Upper, Variance::Lower, Variance::Lower});
    auto w = [&](std::uint32_t a) { return MultiPoly::variable(nv, chart->conj_coord_var(a)); };
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t l = 0; l < n; ++l) {
                MultiPoly g2(nv), g3(nv);
                for (std::uint32_t kk = 0; kk < n; ++kk) {
                    GaussianRational c = sigma.at(i, j) * sigma.at(kk, l).conj();
                    if (c.is_zero()) continue;
                    g2 += w(kk + n).scaled(c);
                    g3 += w(kk).scaled(c);
                }
                gamma.at(l + 2 * n, i + n, j) += g2;
                gamma.at(l + 3 * n, i + n, j) += g3;
                if (!g2.is_zero() || !g3.is_zero()) {
                    gamma.at(l + 2 * n, j, i + n) += g2;
                    gamma.at(l + 3 * n, j, i + n) += g3;
                }
            }
    return gamma;
}

TensorField expected_complex_curvature(const SigmaMatrix& sigma) {
    const std::uint32_t n = sigma.n();
    ChartPtr chart = Chart::holomorphic_pair(4 * n);
    TensorField riem(chart,
                     {Variance::Upper, Variance::Lower, Variance::Lower, Variance::Lower});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t kk = 0; kk < n; ++kk)
                for (std::uint32_t l = 0; l < n; ++l) {
                    GaussianRational c = sigma.at(j, kk) * sigma.at(i, l).conj();
                    if (c.is_zero()) continue;
                    MultiPoly cc = chart->constant(c);
                    // R(conj d_i, d_j) d_{k+n} = sigma_{jk} conj(sigma)_{il} d_{l+3n}
                    riem.at(l + 3 * n, kk + n, i, j) += cc;
                    // R(conj d_{i+n}, d_{j+n}) d_k = sigma_{jk} conj(sigma)_{il} d_{l+2n}
                    riem.at(l + 2 * n, kk, i + n, j + n) += cc;
                    // R(conj d_i, d_{j+n}) d_k = sigma_{jk} conj(sigma)_{il} d_{l+3n}
                    riem.at(l + 3 * n, kk, i, j + n) += cc;
                    // R(conj d_{i+n}, d_j) d_{k+n} = sigma_{jk} conj(sigma)_{il} d_{l+2n}
                    riem.at(l + 2 * n, kk + n, i + n, j) += cc;
                }
    return riem;
}

TensorField expected_real_christoffels(const SigmaMatrix& sigma) {
    const std::uint32_t n = sigma.n();
    ChartPtr chart = Chart::real(4 * n);
    const std::uint32_t nv = chart->nvars();
    TensorField gamma(chart, {Variance::Upper, Variance::Lower, Variance::Lower});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t kk = 0; kk < n; ++kk) {
                MultiPoly g2(nv), g3(nv);
                for (std::uint32_t l = 0; l < n; ++l) {
                    GaussianRational c = sigma.at(i, j) * sigma.at(kk, l);
                    if (c.is_zero()) continue;
                    g2 += MultiPoly::variable(nv, l + n).scaled(c);
                    g3 += MultiPoly::variable(nv, l).scaled(c);
                }
                gamma.at(kk + 2 * n, i, j + n) += g2;
                gamma.at(kk + 3 * n, i, j + n) += g3;
                if (!g2.is_zero() || !g3.is_zero()) {
                    gamma.at(kk + 2 * n, j + n, i) += g2;
                    gamma.at(kk + 3 * n, j + n, i) += g3;
                }
            }
    return gamma;
}

TensorField expected_real_curvature(const SigmaMatrix& sigma) {
    const std::uint32_t n = sigma.n();
    ChartPtr chart = Chart::real(4 * n);
    TensorField riem(chart,
                     {Variance::Upper, Variance::Lower, Variance::Lower, Variance::Lower});
    auto set = [&](std::uint32_t l, std::uint32_t k, std::uint32_t i, std::uint32_t j,
                   const GaussianRational& c) {
        if (!c.is_zero()) riem.at(l, k, i, j) = chart->constant(c);
    };
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t kk = 0; kk < n; ++kk)
                for (std::uint32_t l = 0; l < n; ++l) {
                    // R(d_{i+n}, d_{j+n}) d_k = sum_l (sigma_{li} sigma_{jk}
                    //   - sigma_{lj} sigma_{ik}) d_{l+2n}; the (j,i) iteration
                    // fills the antisymmetric partner.
                    GaussianRational skew =
                        sigma.at(l, i) * sigma.at(j, kk) - sigma.at(l, j) * sigma.at(i, kk);
                    set(l + 2 * n, kk, i + n, j + n, skew);
                    // R(d_i, d_j) d_{k+n} = same skew coefficient into d_{l+3n}
                    set(l + 3 * n, kk + n, i, j, skew);
                    // R(d_i, d_{j+n}) d_k = sigma_{li} sigma_{jk} d_{l+3n}
                    GaussianRational c3 = sigma.at(l, i) * sigma.at(j, kk);
                    set(l + 3 * n, kk, i, j + n, c3);
                    set(l + 3 * n, kk, j + n, i, -c3);
                    // R(d_i, d_{j+n}) d_{k+n} = -sigma_{lj} sigma_{ik} d_{l+2n}
                    GaussianRational c4 = -(sigma.at(l, j) * sigma.at(i, kk));
                    set(l + 2 * n, kk + n, i, j + n, c4);
                    set(l + 2 * n, kk + n, j + n, i, -c4);
                }
    return riem;
}

TensorField expected_hessian_comparison(const SigmaMatrix& sigma) {
    const std::uint32_t n = sigma.n();
    ChartPtr chart = Chart::real(4 * n);
    const std::uint32_t nv = chart->nvars();
    TensorField h(chart, {Variance::Lower, Variance::Lower});
    for (std::uint32_t a = 0; a < 2 * n; ++a) {
        h.at(a, a + 2 * n) = chart->constant(GaussianRational(1));
        h.at(a + 2 * n, a) = chart->constant(GaussianRational(1));
    }
    auto x = [&](std::uint32_t a) { return MultiPoly::variable(nv, a); };
    for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t l = 0; l < n; ++l) {
            MultiPoly h_jl(nv), h_mixed(nv), h_nn(nv);
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t kk = 0; kk < n; ++kk) {
                    GaussianRational c = sigma.at(i, j) * sigma.at(kk, l);
                    if (!c.is_zero()) {
                        h_jl += (x(i + n) * x(kk + n)).scaled(2 * c);
                        h_nn += (x(i) * x(kk)).scaled(2 * c);
                    }
                    GaussianRational cm =
                        sigma.at(j, l) * sigma.at(i, kk) + sigma.at(i, j) * sigma.at(kk, l);
                    if (!cm.is_zero()) h_mixed += (x(i + n) * x(kk)).scaled(2 * cm);
                }
            h.at(j, l) += h_jl;
            h.at(j, l + n) += h_mixed;
            h.at(l + n, j) += h_mixed;
            h.at(j + n, l + n) += h_nn;
        }
    return h;
}

}  // namespace pkv
