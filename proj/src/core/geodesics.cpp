#include "geodesics.hpp"

#include <cmath>
#include <sstream>

namespace pkv {

namespace {

// Univariate polynomials over GaussianRational, as coefficient vectors.
using UniPoly = std::vector<GaussianRational>;

void trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly uni_from_multipoly(const MultiPoly& p) {
    // p lives on a one-variable ring
    UniPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::size_t e = m[0];
        if (out.size() <= e) out.resize(e + 1);
        out[e] = c;
    }
    return out;
}

}  // namespace

int GeodesicData::degree(std::uint32_t c) const {
    for (std::size_t k = coeffs[c].size(); k-- > 0;)
        if (!coeffs[c][k].is_zero()) return static_cast<int>(k);
    return 0;
}

GaussianRational GeodesicData::eval(std::uint32_t c, const GaussianRational& t) const {
    GaussianRational acc(0);
    for (std::size_t k = coeffs[c].size(); k-- > 0;) acc = acc * t + coeffs[c][k];
    return acc;
}

double GeodesicData::eval(std::uint32_t c, double t) const {
    double acc = 0;
    for (std::size_t k = coeffs[c].size(); k-- > 0;) acc = acc * t + coeffs[c][k].re().get_d();
    return acc;
}

std::vector<double> GeodesicData::position(double t) const {
    std::vector<double> x(coeffs.size());
    for (std::uint32_t c = 0; c < coeffs.size(); ++c) x[c] = eval(c, t);
    return x;
}

namespace {

struct SplitInfo {
    std::vector<std::uint32_t> parallel, linear;
    bool closed_form = false;
};

SplitInfo analyse_connection(const MetricModel& m, const TensorField& gamma) {
    const std::uint32_t d = m.dim();
    SplitInfo info;
    std::vector<bool> is_parallel(d, true);
    for (std::uint32_t c = 0; c < d; ++c)
        for (std::uint32_t a = 0; a < d && is_parallel[c]; ++a)
            for (std::uint32_t b = 0; b < d; ++b)
                if (!gamma.at(a, c, b).is_zero()) {
                    is_parallel[c] = false;
                    break;
                }
    for (std::uint32_t c = 0; c < d; ++c)
        (is_parallel[c] ? info.parallel : info.linear).push_back(c);

    // Closed form requires: no forcing on the affine block, and parallel-block
    // forcing depending only on affine coordinates.
    info.closed_form = true;
    for (std::uint32_t c : info.linear)
        for (std::uint32_t a = 0; a < d && info.closed_form; ++a)
            for (std::uint32_t b = 0; b < d; ++b)
                if (!gamma.at(c, a, b).is_zero()) {
                    info.closed_form = false;
                    break;
                }
    if (info.closed_form) {
        for (std::uint32_t c : info.parallel)
            for (std::uint32_t a = 0; a < d; ++a)
                for (std::uint32_t b = 0; b < d; ++b)
                    for (const auto& [mono, coef] : gamma.at(c, a, b).terms())
                        for (std::uint32_t v = 0; v < mono.size(); ++v)
                            if (mono[v] != 0 && is_parallel[v]) info.closed_form = false;
    }
    return info;
}

}  // namespace

bool closed_form_applicable(const MetricModel& m, const TensorField& gamma) {
    if (!m.chart()->is_real()) return false;
    return analyse_connection(m, gamma).closed_form;
}

GeodesicData solve_geodesic(const MetricModel& m, const TensorField& gamma,
                            const std::vector<GaussianRational>& p,
                            const std::vector<GaussianRational>& q) {
    if (!m.chart()->is_real())
        throw std::invalid_argument("solve_geodesic expects a real-chart model (realify first)");
    const std::uint32_t d = m.dim();
    if (p.size() != d || q.size() != d)
        throw std::invalid_argument("initial data has the wrong dimension");
    SplitInfo info = analyse_connection(m, gamma);
    if (!info.closed_form) throw NoClosedFormError();

    GeodesicData geo;
    geo.chart = m.chart();
    geo.p = p;
    geo.q = q;
    geo.linear_block = info.linear;
    geo.parallel_block = info.parallel;
    geo.coeffs.assign(d, UniPoly{});

    // Affine part: gamma^a(t) = q^a + p^a t.
    for (std::uint32_t c = 0; c < d; ++c) {
        geo.coeffs[c] = {q[c], p[c]};
        trim(geo.coeffs[c]);
    }

    // Substitution x^A -> q^A + p^A t on the one-variable ring.
    std::vector<MultiPoly> curve(d, MultiPoly(1));
    for (std::uint32_t a = 0; a < d; ++a) {
        MultiPoly lin = MultiPoly::constant(1, q[a]);
        lin += MultiPoly::variable(1, 0).scaled(p[a]);
        curve[a] = lin;
    }

    for (std::uint32_t c : info.parallel) {
        MultiPoly forcing(1);
        for (std::uint32_t a = 0; a < d; ++a)
            for (std::uint32_t b = 0; b < d; ++b) {
                const MultiPoly& g = gamma.at(c, a, b);
                if (g.is_zero() || p[a].is_zero() || p[b].is_zero()) continue;
                forcing -= g.compose(curve, 1).scaled(p[a] * p[b]);
            }
        // integrate twice; constants fixed by gamma(0)=q, gamma'(0)=p
        MultiPoly second = forcing.integrate(0).integrate(0);
        UniPoly poly = uni_from_multipoly(second);
        if (poly.size() < 2) poly.resize(2);
        poly[0] += q[c];
        poly[1] += p[c];
        trim(poly);
        geo.coeffs[c] = poly;
    }
    return geo;
}

std::vector<std::vector<GaussianRational>> geodesic_residual(const MetricModel& m,
                                                             const TensorField& gamma,
                                                             const GeodesicData& geo) {
    const std::uint32_t d = m.dim();
    std::vector<MultiPoly> curve(d, MultiPoly(1)), vel(d, MultiPoly(1));
    for (std::uint32_t c = 0; c < d; ++c) {
        MultiPoly pc(1);
        for (std::size_t k = 0; k < geo.coeffs[c].size(); ++k) {
            Monomial mono(1, 0);
            mono[0] = static_cast<std::uint8_t>(k);
            pc.add_term(mono, geo.coeffs[c][k]);
        }
        curve[c] = pc;
        vel[c] = pc.partial(0);
    }
    std::vector<std::vector<GaussianRational>> residual(d);
    for (std::uint32_t c = 0; c < d; ++c) {
        MultiPoly acc = curve[c].partial(0).partial(0);
        for (std::uint32_t a = 0; a < d; ++a)
            for (std::uint32_t b = 0; b < d; ++b) {
                const MultiPoly& g = gamma.at(c, a, b);
                if (g.is_zero() || vel[a].is_zero() || vel[b].is_zero()) continue;
                acc += g.compose(curve, 1) * vel[a] * vel[b];
            }
        residual[c] = uni_from_multipoly(acc);
    }
    return residual;
}

std::vector<GaussianRational> energy_polynomial(const MetricModel& m, const GeodesicData& geo) {
    const std::uint32_t d = m.dim();
    std::vector<MultiPoly> curve(d, MultiPoly(1)), vel(d, MultiPoly(1));
    for (std::uint32_t c = 0; c < d; ++c) {
        MultiPoly pc(1);
        for (std::size_t k = 0; k < geo.coeffs[c].size(); ++k) {
            Monomial mono(1, 0);
            mono[0] = static_cast<std::uint8_t>(k);
            pc.add_term(mono, geo.coeffs[c][k]);
        }
        curve[c] = pc;
        vel[c] = pc.partial(0);
    }
    MultiPoly acc(1);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) {
            const MultiPoly& g = m.g().at(a, b);
            if (g.is_zero() || vel[a].is_zero() || vel[b].is_zero()) continue;
            acc += g.compose(curve, 1) * vel[a] * vel[b];
        }
    return uni_from_multipoly(acc);
}

const std::vector<double>& Rk4Trajectory::position_at(double t) const {
    double idx = t / step;
    std::size_t k = static_cast<std::size_t>(std::llround(idx));
    if (k >= times.size() || std::abs(times[k] - t) > step * 1e-6)
        throw std::invalid_argument("time not on the integration grid");
    return positions[k];
}

const std::vector<double>& Rk4Trajectory::velocity_at(double t) const {
    double idx = t / step;
    std::size_t k = static_cast<std::size_t>(std::llround(idx));
    if (k >= times.size() || std::abs(times[k] - t) > step * 1e-6)
        throw std::invalid_argument("time not on the integration grid");
    return velocities[k];
}

Rk4Trajectory rk4_geodesic(const MetricModel& m, const TensorField& gamma,
                           const std::vector<double>& p, const std::vector<double>& q,
                           double t_end, double step) {
    if (step <= 0) throw std::invalid_argument("step must be positive");
    const std::uint32_t d = m.dim();
    if (p.size() != d || q.size() != d)
        throw std::invalid_argument("initial data has the wrong dimension");

    // Cache the nonzero Christoffel components once.
    struct Entry {
        std::uint32_t c, a, b;
        const MultiPoly* poly;
    };
    std::vector<Entry> entries;
    for (std::uint32_t c = 0; c < d; ++c)
        for (std::uint32_t a = 0; a < d; ++a)
            for (std::uint32_t b = 0; b < d; ++b)
                if (!gamma.at(c, a, b).is_zero()) entries.push_back({c, a, b, &gamma.at(c, a, b)});

    auto accel = [&](const std::vector<double>& x, const std::vector<double>& v,
                     std::vector<double>& out) {
        std::fill(out.begin(), out.end(), 0.0);
        for (const Entry& e : entries) out[e.c] -= e.poly->eval_real(x) * v[e.a] * v[e.b];
    };

    const std::size_t nsteps = static_cast<std::size_t>(std::llround(t_end / step));
    Rk4Trajectory traj;
    traj.step = step;
    traj.times.reserve(nsteps + 1);
    traj.positions.reserve(nsteps + 1);
    traj.velocities.reserve(nsteps + 1);

    std::vector<double> x = q, v = p, a1(d), a2(d), a3(d), a4(d);
    std::vector<double> x2(d), v2(d), x3(d), v3(d), x4(d), v4(d);
    traj.times.push_back(0);
    traj.positions.push_back(x);
    traj.velocities.push_back(v);
    for (std::size_t s = 0; s < nsteps; ++s) {
        const double h = step;
        accel(x, v, a1);
        for (std::uint32_t k = 0; k < d; ++k) {
            x2[k] = x[k] + 0.5 * h * v[k];
            v2[k] = v[k] + 0.5 * h * a1[k];
        }
        accel(x2, v2, a2);
        for (std::uint32_t k = 0; k < d; ++k) {
            x3[k] = x[k] + 0.5 * h * v2[k];
            v3[k] = v[k] + 0.5 * h * a2[k];
        }
        accel(x3, v3, a3);
        for (std::uint32_t k = 0; k < d; ++k) {
            x4[k] = x[k] + h * v3[k];
            v4[k] = v[k] + h * a3[k];
        }
        accel(x4, v4, a4);
        for (std::uint32_t k = 0; k < d; ++k) {
            x[k] += h / 6.0 * (v[k] + 2 * v2[k] + 2 * v3[k] + v4[k]);
            v[k] += h / 6.0 * (a1[k] + 2 * a2[k] + 2 * a3[k] + a4[k]);
        }
        const double t = static_cast<double>(s + 1) * h;
        for (std::uint32_t k = 0; k < d; ++k)
            if (!std::isfinite(x[k]) || !std::isfinite(v[k])) throw IntegrationError(t);
        traj.times.push_back(t);
        traj.positions.push_back(x);
        traj.velocities.push_back(v);
    }
    return traj;
}

double metric_energy(const MetricModel& m, const std::vector<double>& x,
                     const std::vector<double>& v) {
    const std::uint32_t d = m.dim();
    std::vector<double> gv = m.eval_g(x);
    double acc = 0;
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) acc += gv[a * d + b] * v[a] * v[b];
    return acc;
}

CompletenessWitness completeness_witness(const MetricModel& m, const TensorField& gamma) {
    CompletenessWitness w;
    if (!m.chart()->is_real()) {
        w.detail = "not witnessed: model is not on a real chart";
        return w;
    }
    if (!closed_form_applicable(m, gamma)) {
        w.detail = "not witnessed: connection lacks the nilpotent closed-form structure";
        return w;
    }
    w.witnessed = true;
    w.detail =
        "every geodesic is polynomial (degree <= 1 on the affine block, <= 3 on the "
        "parallel block), hence defined for all real t; the residual suite is the proof "
        "artifact";
    return w;
}

std::string geodesic_csv(const GeodesicData& geo, const std::vector<double>& times) {
    std::ostringstream out;
    const std::size_t d = geo.coeffs.size();
    out << "t";
    for (std::size_t c = 1; c <= d; ++c) out << ",x" << c;
    out << "\n";
    char buf[32];
    for (double t : times) {
        std::snprintf(buf, sizeof(buf), "%.17g", t);
        out << buf;
        for (std::uint32_t c = 0; c < d; ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", geo.eval(c, t));
            out << "," << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace pkv
