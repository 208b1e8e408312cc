#pragma once

// Control metrics used only by the tests: polynomial metrics with polynomial
// inverses whose curvature is known independently, plus the wave metric used
// for the RK4 order-of-convergence run.

#include "models.hpp"
#include "tensor.hpp"

namespace pkvtest {

using namespace pkv;

// 3-dimensional wave metric 2 du dv + H(u,x) du^2 + dx^2 with H = c * x^2 u^2.
// Coordinates (u, v, x). det = -1, inverse is polynomial. With c != 0 this is
// curved, has Ric != 0, and its geodesics are not polynomial, which makes it
// the control case for the numeric-integrator order test and for the
// "no closed form" error path.
inline MetricModel wave3_model(long c_num, long c_den = 1) {
    ChartPtr chart = Chart::real({"u", "v", "x"});
    const std::uint32_t nv = 3;
    GaussianRational c = GaussianRational::make(c_num, c_den);
    MultiPoly H = (MultiPoly::variable(nv, 2) * MultiPoly::variable(nv, 2) *
                   MultiPoly::variable(nv, 0) * MultiPoly::variable(nv, 0))
                      .scaled(c);
    TensorField g(chart, {Variance::Lower, Variance::Lower});
    g.at(0, 0) = H;
    g.at(0, 1) = chart->constant(GaussianRational(1));
    g.at(1, 0) = chart->constant(GaussianRational(1));
    g.at(2, 2) = chart->constant(GaussianRational(1));
    TensorField ginv(chart, {Variance::Upper, Variance::Upper});
    ginv.at(0, 1) = chart->constant(GaussianRational(1));
    ginv.at(1, 0) = chart->constant(GaussianRational(1));
    ginv.at(1, 1) = -H;
    ginv.at(2, 2) = chart->constant(GaussianRational(1));
    return MetricModel::create(chart, g, ginv, "test-wave3");
}

// 4-dimensional plane-wave metric 2 du dv + H(u,x,y) du^2 + dx^2 + dy^2 with
// H = cx * x^2 u^2 + cy * y^2 u^2. Coordinates (u, v, x, y).
//   cx = cy      => conformally flat (W = 0) with Ric != 0;
//   cx = -cy != 0 => Ricci-flat with W != 0.
inline MetricModel wave4_model(long cx, long cy) {
    ChartPtr chart = Chart::real({"u", "v", "x", "y"});
    const std::uint32_t nv = 4;
    MultiPoly u2 = MultiPoly::variable(nv, 0) * MultiPoly::variable(nv, 0);
    MultiPoly H = (MultiPoly::variable(nv, 2) * MultiPoly::variable(nv, 2) * u2)
                      .scaled(GaussianRational(cx));
    H += (MultiPoly::variable(nv, 3) * MultiPoly::variable(nv, 3) * u2)
             .scaled(GaussianRational(cy));
    TensorField g(chart, {Variance::Lower, Variance::Lower});
    g.at(0, 0) = H;
    g.at(0, 1) = chart->constant(GaussianRational(1));
    g.at(1, 0) = chart->constant(GaussianRational(1));
    g.at(2, 2) = chart->constant(GaussianRational(1));
    g.at(3, 3) = chart->constant(GaussianRational(1));
    TensorField ginv(chart, {Variance::Upper, Variance::Upper});
    ginv.at(0, 1) = chart->constant(GaussianRational(1));
    ginv.at(1, 0) = chart->constant(GaussianRational(1));
    ginv.at(1, 1) = -H;
    ginv.at(2, 2) = chart->constant(GaussianRational(1));
    ginv.at(3, 3) = chart->constant(GaussianRational(1));
    return MetricModel::create(chart, g, ginv, "test-wave4");
}

// Flat metric delta on R^d.
inline MetricModel flat_model(std::uint32_t d) {
    ChartPtr chart = Chart::real(d);
    TensorField g(chart, {Variance::Lower, Variance::Lower});
    TensorField ginv(chart, {Variance::Upper, Variance::Upper});
    for (std::uint32_t a = 0; a < d; ++a) {
        g.at(a, a) = chart->constant(GaussianRational(1));
        ginv.at(a, a) = chart->constant(GaussianRational(1));
    }
    return MetricModel::create(chart, g, ginv, "test-flat");
}

}  // namespace pkvtest
