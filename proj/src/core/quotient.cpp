#include "quotient.hpp"

#include <cmath>
#include <stdexcept>

namespace pkv {

FundamentalDomain make_domain(double a, double b, const BlockLayout& layout,
                              std::uint32_t dim) {
    if (a <= 0 || b <= 0)
        throw std::invalid_argument("the fundamental domain requires a, b > 0");
    FundamentalDomain d;
    d.a = a;
    d.b = b;
    d.lambdas = {std::exp(a), std::exp(b), std::exp(a + 2 * b), std::exp(2 * a + b)};
    d.layout = layout;
    d.dim = dim;
    std::size_t covered = 0;
    for (const auto& blk : layout.blocks) covered += blk.size();
    if (covered + layout.extension.size() != dim)
        throw std::invalid_argument("block layout does not cover the chart");
    if (!layout.extension.empty())
        throw std::invalid_argument("quotient machinery applies to the unextended models");
    return d;
}

double FundamentalDomain::sphere_value(const std::vector<double>& x) const {
    double s = 0;
    for (const auto& blk : layout.blocks)
        for (std::uint32_t c : blk) s += x[c] * x[c];
    return s;
}

double FundamentalDomain::ellipsoid_value(const std::vector<double>& x) const {
    double s = 0;
    for (std::size_t b = 0; b < 4; ++b) {
        double inv = 1.0 / (lambdas[b] * lambdas[b]);
        for (std::uint32_t c : layout.blocks[b]) s += inv * x[c] * x[c];
    }
    return s;
}

std::vector<double> FundamentalDomain::apply_deck(const std::vector<double>& x,
                                                  long power) const {
    std::vector<double> y = x;
    for (std::size_t b = 0; b < 4; ++b) {
        double f = std::pow(lambdas[b], static_cast<double>(power));
        for (std::uint32_t c : layout.blocks[b]) y[c] *= f;
    }
    return y;
}

namespace {

void check_point(const FundamentalDomain& d, const std::vector<double>& x) {
    if (x.size() != d.dim) throw std::invalid_argument("point has the wrong dimension");
    double n = 0;
    for (double v : x) n += v * v;
    if (n == 0) throw std::invalid_argument("the origin is not in the punctured space");
}

}  // namespace

Membership domain_membership(const FundamentalDomain& d, const std::vector<double>& x,
                             double tol) {
    check_point(d, x);
    double s1 = d.sphere_value(x);
    double s2 = d.ellipsoid_value(x);
    if (std::abs(s1 - 1.0) <= tol) return Membership::SphereBoundary;
    if (std::abs(s2 - 1.0) <= tol) return Membership::EllipsoidBoundary;
    if (s1 > 1.0 && s2 < 1.0) return Membership::Interior;
    return Membership::Outside;
}

std::string membership_str(Membership m) {
    switch (m) {
        case Membership::Interior: return "interior";
        case Membership::SphereBoundary: return "sphere-boundary";
        case Membership::EllipsoidBoundary: return "ellipsoid-boundary";
        case Membership::Outside: return "outside";
    }
    return "?";
}

Representative canonical_representative(const FundamentalDomain& d,
                                        const std::vector<double>& x, double tol) {
    check_point(d, x);
    // k* = min{ k : s1(phi^k x) >= 1 - tol }; both quadratics are strictly
    // increasing along the orbit because every lambda exceeds 1.
    const long limit = 100000;
    long k = 0;
    std::vector<double> y = x;
    if (d.sphere_value(y) >= 1.0 - tol) {
        while (k > -limit) {
            std::vector<double> prev = d.apply_deck(y, -1);
            if (d.sphere_value(prev) >= 1.0 - tol) {
                y = std::move(prev);
                --k;
            } else {
                break;
            }
        }
    } else {
        while (k < limit && d.sphere_value(y) < 1.0 - tol) {
            y = d.apply_deck(y, 1);
            ++k;
        }
    }
    if (k >= limit || k <= -limit)
        throw std::runtime_error("representative search did not converge");
    return {k, y};
}

QuotientChartPoint quotient_chart(const FundamentalDomain& d, const std::vector<double>& x) {
    QuotientChartPoint pt;
    pt.rep = canonical_representative(d, x);
    const std::vector<double>& y = pt.rep.y;
    double s1 = d.sphere_value(y);
    double s2 = d.ellipsoid_value(y);
    double l1 = std::log(s1);
    double l2 = std::log(s2);
    // 0 on the sphere (s1 = 1), increasing to 1 as the ellipsoid (s2 = 1) is
    // approached; well defined because s2 < 1 <= s1 on the representative set.
    pt.angle = (l1 <= 0) ? 0.0 : l1 / (l1 - l2);
    if (pt.angle >= 1.0) pt.angle = std::nextafter(1.0, 0.0);
    double norm = std::sqrt(d.sphere_value(y));
    pt.sphere_point.resize(y.size());
    for (std::size_t c = 0; c < y.size(); ++c) pt.sphere_point[c] = y[c] / norm;
    return pt;
}

}  // namespace pkv
