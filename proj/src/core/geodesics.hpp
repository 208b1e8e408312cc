#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tensor.hpp"

namespace pkv {

class NoClosedFormError : public std::runtime_error {
public:
    NoClosedFormError() : std::runtime_error("no closed form; use numeric") {}
};

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(double t)
        : std::runtime_error("non-finite state at t = " + std::to_string(t)), t_(t) {}
    double t() const { return t_; }

private:
    double t_;
};

// Closed-form geodesic: per-coordinate polynomials in t of degree <= 3.
// Coordinates in `linear_block` stay affine; coordinates in `parallel_block`
// pick up the doubly integrated quadratic forcing.
struct GeodesicData {
    ChartPtr chart;
    std::vector<GaussianRational> p, q;                  // initial velocity / position
    std::vector<std::vector<GaussianRational>> coeffs;   // coeffs[c][k] * t^k
    std::vector<std::uint32_t> linear_block;
    std::vector<std::uint32_t> parallel_block;

    int degree(std::uint32_t c) const;
    GaussianRational eval(std::uint32_t c, const GaussianRational& t) const;
    double eval(std::uint32_t c, double t) const;
    std::vector<double> position(double t) const;
};

// True when the connection has the nilpotent structure that makes geodesics
// polynomial: parallel coordinates receive forcing that depends only on the
// affine coordinates, and affine coordinates receive none.
bool closed_form_applicable(const MetricModel& m, const TensorField& gamma);

// Exact polynomial geodesic with gamma(0) = q, gamma'(0) = p. Throws
// NoClosedFormError when the structure above is absent.
GeodesicData solve_geodesic(const MetricModel& m, const TensorField& gamma,
                            const std::vector<GaussianRational>& p,
                            const std::vector<GaussianRational>& q);

// Substitutes the closed form into gamma''^C + Gamma^C_{AB} gamma'^A gamma'^B;
// each entry is the residual polynomial in t (all must vanish).
std::vector<std::vector<GaussianRational>> geodesic_residual(const MetricModel& m,
                                                             const TensorField& gamma,
                                                             const GeodesicData& geo);

// g(gamma', gamma') along the closed form, as a polynomial in t; constancy is
// exact energy conservation.
std::vector<GaussianRational> energy_polynomial(const MetricModel& m, const GeodesicData& geo);

// Classical fixed-step RK4 on the first-order system (position, velocity).
struct Rk4Trajectory {
    double step = 0;
    std::vector<double> times;
    std::vector<std::vector<double>> positions;
    std::vector<std::vector<double>> velocities;

    // State at a sampled time (must be on the step grid within rounding).
    const std::vector<double>& position_at(double t) const;
    const std::vector<double>& velocity_at(double t) const;
};

Rk4Trajectory rk4_geodesic(const MetricModel& m, const TensorField& gamma,
                           const std::vector<double>& p, const std::vector<double>& q,
                           double t_end, double step);

// Numeric metric energy g(v, v) at a point.
double metric_energy(const MetricModel& m, const std::vector<double>& x,
                     const std::vector<double>& v);

struct CompletenessWitness {
    bool witnessed = false;
    std::string detail;
};

// Records that every geodesic of the model is a polynomial curve of degree
// <= 3 per component, hence defined on all of R.
CompletenessWitness completeness_witness(const MetricModel& m, const TensorField& gamma);

// CSV export "t,x1,...,xd" at caller-specified sample times.
std::string geodesic_csv(const GeodesicData& geo, const std::vector<double>& times);

}  // namespace pkv
