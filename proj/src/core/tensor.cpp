#include "tensor.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace pkv {

namespace {

std::size_t pow_size(std::uint32_t base, std::uint32_t exp) {
    std::size_t r = 1;
    for (std::uint32_t k = 0; k < exp; ++k) r *= base;
    return r;
}

std::string index_string(const std::vector<std::uint32_t>& ix) {
    std::string s = "(";
    for (std::size_t k = 0; k < ix.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(ix[k] + 1);
    }
    return s + ")";
}

}  // namespace

TensorField::TensorField(ChartPtr chart, std::vector<Variance> variance)
    : chart_(std::move(chart)),
      variance_(std::move(variance)),
      dim_(chart_->dim()),
      comps_(pow_size(chart_->dim(), static_cast<std::uint32_t>(variance_.size())),
             MultiPoly(chart_->nvars())) {}

std::vector<std::uint32_t> TensorField::unflatten(std::size_t flat) const {
    std::vector<std::uint32_t> ix(rank());
    for (std::size_t k = rank(); k-- > 0;) {
        ix[k] = static_cast<std::uint32_t>(flat % dim_);
        flat /= dim_;
    }
    return ix;
}

bool TensorField::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

bool TensorField::operator==(const TensorField& o) const {
    return dim_ == o.dim_ && variance_ == o.variance_ && comps_ == o.comps_;
}

std::optional<std::pair<std::vector<std::uint32_t>, std::string>> TensorField::first_nonzero()
    const {
    for (std::size_t flat = 0; flat < comps_.size(); ++flat) {
        if (!comps_[flat].is_zero()) {
            auto ix = unflatten(flat);
            return std::make_pair(ix, index_string(ix) + " = " +
                                          comps_[flat].str(chart_->var_names()));
        }
    }
    return std::nullopt;
}

MetricModel MetricModel::create(ChartPtr chart, TensorField g, TensorField g_inv,
                                std::string provenance) {
    const std::uint32_t d = chart->dim();
    if (g.rank() != 2 || g_inv.rank() != 2)
        throw std::invalid_argument("metric and inverse must have rank 2");
    for (std::uint32_t a = 0; a < d; ++a) {
        for (std::uint32_t b = 0; b < d; ++b) {
            if (chart->is_real()) {
                if (g.at(a, b) != g.at(b, a))
                    throw std::invalid_argument("metric is not symmetric at " +
                                                index_string({a, b}));
                if (!g.at(a, b).has_real_coeffs())
                    throw std::invalid_argument("real-chart metric has complex coefficients");
            } else if (g.at(b, a) != chart->conjugate(g.at(a, b))) {
                throw std::invalid_argument("metric is not Hermitian at " + index_string({a, b}));
            }
        }
    }
    // g_{AC} g^{CB} = delta_A^B as an exact polynomial identity.
    for (std::uint32_t a = 0; a < d; ++a) {
        for (std::uint32_t b = 0; b < d; ++b) {
            MultiPoly acc(chart->nvars());
            for (std::uint32_t c = 0; c < d; ++c) {
                if (g.at(a, c).is_zero() || g_inv.at(c, b).is_zero()) continue;
                acc += g.at(a, c) * g_inv.at(c, b);
            }
            MultiPoly expect = a == b ? MultiPoly::constant(chart->nvars(), GaussianRational(1))
                                      : MultiPoly::zero(chart->nvars());
            if (acc != expect)
                throw std::invalid_argument("inverse metric fails g*g^-1=id at " +
                                            index_string({a, b}));
        }
    }
    MetricModel m;
    m.chart_ = std::move(chart);
    m.g_ = std::move(g);
    m.g_inv_ = std::move(g_inv);
    m.provenance_ = std::move(provenance);
    return m;
}

std::vector<double> MetricModel::eval_g(const std::vector<double>& point) const {
    if (!chart_->is_real())
        throw std::invalid_argument("pointwise metric evaluation requires a real chart");
    const std::uint32_t d = dim();
    std::vector<double> out(static_cast<std::size_t>(d) * d);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) out[a * d + b] = g_.at(a, b).eval_real(point);
    return out;
}

TensorField levi_civita(const MetricModel& m) {
    const ChartPtr& chart = m.chart();
    const std::uint32_t d = m.dim();
    TensorField gamma(chart, {Variance::Upper, Variance::Lower, Variance::Lower});
    if (chart->is_real()) {
        // Gamma^k_{ij} = 1/2 g^{kl} (d_i g_{jl} + d_j g_{il} - d_l g_{ij})
        const GaussianRational half = GaussianRational::make(1, 2);
        for (std::uint32_t i = 0; i < d; ++i) {
            for (std::uint32_t j = i; j < d; ++j) {
                for (std::uint32_t k = 0; k < d; ++k) {
                    MultiPoly acc(chart->nvars());
                    for (std::uint32_t l = 0; l < d; ++l) {
                        const MultiPoly& ginv = m.g_inv().at(k, l);
                        if (ginv.is_zero()) continue;
                        MultiPoly s = m.g().at(j, l).partial(i);
                        s += m.g().at(i, l).partial(j);
                        s -= m.g().at(i, j).partial(l);
                        if (s.is_zero()) continue;
                        acc += ginv * s;
                    }
                    gamma.at(k, i, j) = acc.scaled(half);
                    if (i != j) gamma.at(k, j, i) = gamma.at(k, i, j);
                }
            }
        }
    } else {
        // Kaehler symbols Gamma^C_{AB} = h^{DC} d_{z^A} h_{BD}.
        for (std::uint32_t a = 0; a < d; ++a) {
            for (std::uint32_t b = 0; b < d; ++b) {
                for (std::uint32_t c = 0; c < d; ++c) {
                    MultiPoly acc(chart->nvars());
                    for (std::uint32_t dd = 0; dd < d; ++dd) {
                        const MultiPoly& hinv = m.g_inv().at(dd, c);
                        if (hinv.is_zero()) continue;
                        MultiPoly der = m.g().at(b, dd).partial(chart->coord_var(a));
                        if (der.is_zero()) continue;
                        acc += hinv * der;
                    }
                    gamma.at(c, a, b) = std::move(acc);
                }
            }
        }
    }
    return gamma;
}

TensorField riemann(const MetricModel& m, const TensorField& gamma) {
    const ChartPtr& chart = m.chart();
    const std::uint32_t d = m.dim();
    TensorField riem(chart,
                     {Variance::Upper, Variance::Lower, Variance::Lower, Variance::Lower});
    if (chart->is_real()) {
        // R^l_{kij} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
        //           + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik}
        for (std::uint32_t i = 0; i < d; ++i) {
            for (std::uint32_t j = i + 1; j < d; ++j) {
                for (std::uint32_t k = 0; k < d; ++k) {
                    for (std::uint32_t l = 0; l < d; ++l) {
                        MultiPoly acc = gamma.at(l, j, k).partial(i);
                        acc -= gamma.at(l, i, k).partial(j);
                        for (std::uint32_t mm = 0; mm < d; ++mm) {
                            const MultiPoly& gi = gamma.at(l, i, mm);
                            const MultiPoly& gj = gamma.at(l, j, mm);
                            if (!gi.is_zero() && !gamma.at(mm, j, k).is_zero())
                                acc += gi * gamma.at(mm, j, k);
                            if (!gj.is_zero() && !gamma.at(mm, i, k).is_zero())
                                acc -= gj * gamma.at(mm, i, k);
                        }
                        riem.at(l, k, i, j) = acc;
                        riem.at(l, k, j, i) = -acc;
                    }
                }
            }
        }
    } else {
        // Mixed components only: coeff of d_D in R(conj d_A, d_B) d_C is
        // d_{w^A} Gamma^D_{BC}.
        for (std::uint32_t a = 0; a < d; ++a)
            for (std::uint32_t b = 0; b < d; ++b)
                for (std::uint32_t c = 0; c < d; ++c)
                    for (std::uint32_t dd = 0; dd < d; ++dd)
                        riem.at(dd, c, a, b) =
                            gamma.at(dd, b, c).partial(chart->conj_coord_var(a));
    }
    return riem;
}

TensorField ricci(const MetricModel& m, const TensorField& riem) {
    const ChartPtr& chart = m.chart();
    const std::uint32_t d = m.dim();
    TensorField ric(chart, {Variance::Lower, Variance::Lower});
    if (chart->is_real()) {
        for (std::uint32_t j = 0; j < d; ++j)
            for (std::uint32_t k = 0; k < d; ++k) {
                MultiPoly acc(chart->nvars());
                for (std::uint32_t i = 0; i < d; ++i) acc += riem.at(i, k, i, j);
                ric.at(j, k) = acc;
            }
    } else {
        // ric[C][B] = Ric(d_C, conj d_B) = -sum_A riem[A][C][B][A]
        for (std::uint32_t c = 0; c < d; ++c)
            for (std::uint32_t b = 0; b < d; ++b) {
                MultiPoly acc(chart->nvars());
                for (std::uint32_t a = 0; a < d; ++a) acc -= riem.at(a, c, b, a);
                ric.at(c, b) = acc;
            }
    }
    return ric;
}

MultiPoly det_metric(const MetricModel& m) {
    const std::uint32_t d = m.dim();
    if (d > 16) throw std::invalid_argument("det_metric supports dim <= 16");
    const std::uint32_t nv = m.chart()->nvars();
    // Laplace expansion with memoization over row subsets: D[mask] is the
    // determinant of the submatrix (rows in mask) x (first popcount(mask) cols).
    std::vector<MultiPoly> table(std::size_t(1) << d, MultiPoly(nv));
    table[0] = MultiPoly::constant(nv, GaussianRational(1));
    for (std::size_t mask = 1; mask < table.size(); ++mask) {
        const int col = __builtin_popcountll(mask) - 1;
        MultiPoly acc(nv);
        int pos = 0;
        for (std::uint32_t r = 0; r < d; ++r) {
            if (!(mask & (std::size_t(1) << r))) continue;
            const MultiPoly& entry = m.g().at(r, static_cast<std::uint32_t>(col));
            if (!entry.is_zero()) {
                const MultiPoly& sub = table[mask & ~(std::size_t(1) << r)];
                if (!sub.is_zero()) {
                    MultiPoly term = entry * sub;
                    if ((pos + col) % 2) acc -= term;
                    else acc += term;
                }
            }
            ++pos;
        }
        table[mask] = std::move(acc);
    }
    return table[table.size() - 1];
}

LogDetCertificate ricci_logdet_certificate(const MetricModel& m) {
    LogDetCertificate cert;
    MultiPoly det = det_metric(m);
    cert.applicable = det.is_constant() && !det.is_zero();
    if (cert.applicable) {
        cert.det_value = det.constant_value();
        cert.ricci_flat = true;  // constant determinant => dd log det = 0
    }
    return cert;
}

TensorField lower_riemann(const MetricModel& m, const TensorField& riem) {
    const std::uint32_t d = m.dim();
    TensorField rlow(m.chart(), {Variance::Lower, Variance::Lower, Variance::Lower,
                                 Variance::Lower});
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b)
            for (std::uint32_t c = 0; c < d; ++c)
                for (std::uint32_t e = 0; e < d; ++e) {
                    // rlow[a][b][c][e] = g(R(d_a, d_b) d_c, d_e)
                    MultiPoly acc(m.chart()->nvars());
                    for (std::uint32_t l = 0; l < d; ++l) {
                        if (riem.at(l, c, a, b).is_zero() || m.g().at(l, e).is_zero()) continue;
                        acc += riem.at(l, c, a, b) * m.g().at(l, e);
                    }
                    rlow.at(a, b, c, e) = std::move(acc);
                }
    return rlow;
}

TensorField weyl(const MetricModel& m, const TensorField& riem, const TensorField& ric) {
    if (!m.chart()->is_real())
        throw std::invalid_argument("weyl is computed on real charts (realify first)");
    const std::uint32_t d = m.dim();
    if (d < 4) throw std::invalid_argument("weyl tensor requires dim >= 4");
    const std::uint32_t nv = m.chart()->nvars();

    MultiPoly scal(nv);
    for (std::uint32_t j = 0; j < d; ++j)
        for (std::uint32_t k = 0; k < d; ++k) {
            if (m.g_inv().at(j, k).is_zero() || ric.at(j, k).is_zero()) continue;
            scal += m.g_inv().at(j, k) * ric.at(j, k);
        }

    // Schouten tensor P = (Ric - scal/(2(d-1)) g) / (d-2)
    TensorField schouten(m.chart(), {Variance::Lower, Variance::Lower});
    const GaussianRational c1 = GaussianRational::make(1, 2L * (d - 1));
    const GaussianRational c2 = GaussianRational::make(1, d - 2);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) {
            MultiPoly p = ric.at(a, b);
            if (!scal.is_zero() && !m.g().at(a, b).is_zero())
                p -= (scal * m.g().at(a, b)).scaled(c1);
            schouten.at(a, b) = p.scaled(c2);
        }

    TensorField rlow = lower_riemann(m, riem);
    TensorField w(m.chart(), {Variance::Lower, Variance::Lower, Variance::Lower,
                              Variance::Lower});
    auto kn = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t e) {
        // Kulkarni-Nomizu product (P, g) evaluated at (X,Y,Z,W) = (a,b,c,e)
        MultiPoly acc(nv);
        if (!schouten.at(a, e).is_zero() && !m.g().at(b, c).is_zero())
            acc += schouten.at(a, e) * m.g().at(b, c);
        if (!schouten.at(b, c).is_zero() && !m.g().at(a, e).is_zero())
            acc += schouten.at(b, c) * m.g().at(a, e);
        if (!schouten.at(a, c).is_zero() && !m.g().at(b, e).is_zero())
            acc -= schouten.at(a, c) * m.g().at(b, e);
        if (!schouten.at(b, e).is_zero() && !m.g().at(a, c).is_zero())
            acc -= schouten.at(b, e) * m.g().at(a, c);
        return acc;
    };
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b)
            for (std::uint32_t c = 0; c < d; ++c)
                for (std::uint32_t e = 0; e < d; ++e)
                    w.at(a, b, c, e) = rlow.at(a, b, c, e) - kn(a, b, c, e);
    return w;
}

TensorField covariant_derivative(const MetricModel& m, const TensorField& gamma,
                                 const TensorField& t) {
    if (!m.chart()->is_real())
        throw std::invalid_argument(
            "covariant_derivative handles real charts; holomorphic-pair models use the "
            "dedicated Kaehler paths");
    if (!(t.chart() && *t.chart() == *m.chart()))
        throw std::invalid_argument("tensor lives on a different chart");
    const std::uint32_t d = m.dim();
    const std::uint32_t r = t.rank();
    std::vector<Variance> var = t.variance();
    var.push_back(Variance::Lower);
    TensorField out(m.chart(), var);

    std::vector<std::uint32_t> ix(r, 0);
    std::size_t flat = 0;
    const std::size_t total = t.size();
    for (flat = 0; flat < total; ++flat) {
        // decode flat -> ix
        std::size_t rest = flat;
        for (std::size_t k = r; k-- > 0;) {
            ix[k] = static_cast<std::uint32_t>(rest % d);
            rest /= d;
        }
        const MultiPoly& base = t[flat];
        for (std::uint32_t e = 0; e < d; ++e) {
            MultiPoly acc = base.partial(e);
            // Christoffel corrections slot by slot.
            for (std::uint32_t slot = 0; slot < r; ++slot) {
                const std::uint32_t orig = ix[slot];
                std::size_t stride = 1;
                for (std::uint32_t k = slot + 1; k < r; ++k) stride *= d;
                const std::size_t base_flat = flat - static_cast<std::size_t>(orig) * stride;
                for (std::uint32_t mm = 0; mm < d; ++mm) {
                    const MultiPoly& tt = t[base_flat + static_cast<std::size_t>(mm) * stride];
                    if (tt.is_zero()) continue;
                    if (t.variance()[slot] == Variance::Upper) {
                        const MultiPoly& gcoef = gamma.at(orig, e, mm);
                        if (!gcoef.is_zero()) acc += gcoef * tt;
                    } else {
                        const MultiPoly& gcoef = gamma.at(mm, e, orig);
                        if (!gcoef.is_zero()) acc -= gcoef * tt;
                    }
                }
            }
            out[flat * d + e] = std::move(acc);
        }
    }
    return out;
}

TensorField kahler_nabla_metric(const MetricModel& m, const TensorField& gamma) {
    const ChartPtr& chart = m.chart();
    const std::uint32_t d = m.dim();
    TensorField out(chart, {Variance::Lower, Variance::Lower, Variance::Lower});
    for (std::uint32_t b = 0; b < d; ++b)
        for (std::uint32_t dd = 0; dd < d; ++dd)
            for (std::uint32_t e = 0; e < d; ++e) {
                MultiPoly acc = m.g().at(b, dd).partial(chart->coord_var(e));
                for (std::uint32_t mm = 0; mm < d; ++mm) {
                    if (gamma.at(mm, e, b).is_zero() || m.g().at(mm, dd).is_zero()) continue;
                    acc -= gamma.at(mm, e, b) * m.g().at(mm, dd);
                }
                out.at(b, dd, e) = std::move(acc);
            }
    return out;
}

std::pair<TensorField, TensorField> kahler_nabla_mixed_curvature(const MetricModel& m,
                                                                 const TensorField& gamma,
                                                                 const TensorField& riem) {
    const ChartPtr& chart = m.chart();
    const std::uint32_t d = m.dim();
    std::vector<Variance> var = {Variance::Upper, Variance::Lower, Variance::Lower,
                                 Variance::Lower, Variance::Lower};
    TensorField nab(chart, var), nab_bar(chart, var);
    TensorField gamma_conj(chart, gamma.variance());
    for (std::size_t f = 0; f < gamma.size(); ++f)
        gamma_conj[f] = chart->conjugate(gamma[f]);
    for (std::uint32_t dd = 0; dd < d; ++dd)
        for (std::uint32_t c = 0; c < d; ++c)
            for (std::uint32_t a = 0; a < d; ++a)
                for (std::uint32_t b = 0; b < d; ++b) {
                    const MultiPoly& base = riem.at(dd, c, a, b);
                    for (std::uint32_t e = 0; e < d; ++e) {
                        // Holomorphic direction: corrections on D, C, B.
                        MultiPoly acc = base.partial(chart->coord_var(e));
                        for (std::uint32_t mm = 0; mm < d; ++mm) {
                            if (!gamma.at(dd, e, mm).is_zero() &&
                                !riem.at(mm, c, a, b).is_zero())
                                acc += gamma.at(dd, e, mm) * riem.at(mm, c, a, b);
                            if (!gamma.at(mm, e, c).is_zero() &&
                                !riem.at(dd, mm, a, b).is_zero())
                                acc -= gamma.at(mm, e, c) * riem.at(dd, mm, a, b);
                            if (!gamma.at(mm, e, b).is_zero() &&
                                !riem.at(dd, c, a, mm).is_zero())
                                acc -= gamma.at(mm, e, b) * riem.at(dd, c, a, mm);
                        }
                        nab.at(dd, c, a, b, e) = std::move(acc);

                        // Antiholomorphic direction: only the barred slot corrects.
                        MultiPoly accb = base.partial(chart->conj_coord_var(e));
                        for (std::uint32_t mm = 0; mm < d; ++mm) {
                            const MultiPoly& cg = gamma_conj.at(mm, e, a);
                            if (!cg.is_zero() && !riem.at(dd, c, mm, b).is_zero())
                                accb -= cg * riem.at(dd, c, mm, b);
                        }
                        nab_bar.at(dd, c, a, b, e) = std::move(accb);
                    }
                }
    return {std::move(nab), std::move(nab_bar)};
}

TensorField pullback_metric(const MetricModel& m, const ExactMatrix& L) {
    const ChartPtr& chart = m.chart();
    const std::uint32_t d = m.dim();
    if (L.rows() != d || L.cols() != d)
        throw std::invalid_argument("pullback map has wrong dimensions");
    const std::uint32_t nv = chart->nvars();

    // Coordinate images: x^C -> sum_D L[C][D] x^D (and conj(L) on the w block).
    std::vector<MultiPoly> images(nv, MultiPoly(nv));
    for (std::uint32_t cc = 0; cc < d; ++cc) {
        MultiPoly img(nv);
        for (std::uint32_t dd = 0; dd < d; ++dd)
            if (!L.at(cc, dd).is_zero())
                img += MultiPoly::variable(nv, chart->coord_var(dd)).scaled(L.at(cc, dd));
        images[chart->coord_var(cc)] = std::move(img);
        if (!chart->is_real()) {
            MultiPoly imgw(nv);
            for (std::uint32_t dd = 0; dd < d; ++dd)
                if (!L.at(cc, dd).is_zero())
                    imgw += MultiPoly::variable(nv, chart->conj_coord_var(dd))
                                .scaled(L.at(cc, dd).conj());
            images[chart->conj_coord_var(cc)] = std::move(imgw);
        }
    }

    TensorField result(chart, {Variance::Lower, Variance::Lower});
    std::vector<MultiPoly> substituted(static_cast<std::size_t>(d) * d, MultiPoly(nv));
    for (std::uint32_t cc = 0; cc < d; ++cc)
        for (std::uint32_t dd = 0; dd < d; ++dd)
            if (!m.g().at(cc, dd).is_zero())
                substituted[cc * d + dd] = m.g().at(cc, dd).compose(images, nv);

    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) {
            MultiPoly acc(nv);
            for (std::uint32_t cc = 0; cc < d; ++cc) {
                if (L.at(cc, a).is_zero()) continue;
                for (std::uint32_t dd = 0; dd < d; ++dd) {
                    const GaussianRational rb =
                        chart->is_real() ? L.at(dd, b) : L.at(dd, b).conj();
                    if (rb.is_zero()) continue;
                    const MultiPoly& sub = substituted[cc * d + dd];
                    if (sub.is_zero()) continue;
                    acc += sub.scaled(L.at(cc, a) * rb);
                }
            }
            result.at(a, b) = std::move(acc);
        }
    return result;
}

std::vector<SignatureResult> signature_at(const MetricModel& m,
                                          const std::vector<std::vector<double>>& points,
                                          double tol) {
    if (!m.chart()->is_real())
        throw std::invalid_argument("signature_at requires a real chart (realify first)");
    const std::uint32_t d = m.dim();
    std::vector<SignatureResult> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        std::vector<double> gv = m.eval_g(p);
        Eigen::MatrixXd mat(d, d);
        for (std::uint32_t a = 0; a < d; ++a)
            for (std::uint32_t b = 0; b < d; ++b) mat(a, b) = gv[a * d + b];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(mat);
        SignatureResult r;
        r.min_abs_eigenvalue = eig.eigenvalues().cwiseAbs().minCoeff();
        if (r.min_abs_eigenvalue < tol) {
            r.status = SignatureResult::Status::Indeterminate;
        } else {
            for (std::uint32_t k = 0; k < d; ++k)
                (eig.eigenvalues()[k] > 0 ? r.positive : r.negative) += 1;
        }
        out.push_back(r);
    }
    return out;
}

std::optional<std::string> check_first_bianchi(const TensorField& riem) {
    const std::uint32_t d = riem.dim();
    for (std::uint32_t l = 0; l < d; ++l)
        for (std::uint32_t k = 0; k < d; ++k)
            for (std::uint32_t i = 0; i < d; ++i)
                for (std::uint32_t j = 0; j < d; ++j) {
                    MultiPoly s = riem.at(l, k, i, j);
                    s += riem.at(l, i, j, k);
                    s += riem.at(l, j, k, i);
                    if (!s.is_zero())
                        return "first Bianchi fails at (l,k,i,j)=" +
                               index_string({l, k, i, j});
                }
    return std::nullopt;
}

std::optional<std::string> check_pair_symmetry(const TensorField& rlow) {
    const std::uint32_t d = rlow.dim();
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b)
            for (std::uint32_t c = 0; c < d; ++c)
                for (std::uint32_t e = 0; e < d; ++e)
                    if (rlow.at(a, b, c, e) != rlow.at(c, e, a, b))
                        return "pair symmetry fails at " + index_string({a, b, c, e});
    return std::nullopt;
}

}  // namespace pkv
