#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "conformal.hpp"

namespace pkv {

// Shell between the unit sphere and its image ellipsoid under the deck map
// phi_{a,b}, with lambda = (e^a, e^b, e^{a+2b}, e^{2a+b}) acting blockwise.
struct FundamentalDomain {
    double a = 0, b = 0;
    std::array<double, 4> lambdas{};
    BlockLayout layout;
    std::uint32_t dim = 0;

    // sum_i ||x_i||^2 and sum_i lambda_i^{-2} ||x_i||^2
    double sphere_value(const std::vector<double>& x) const;
    double ellipsoid_value(const std::vector<double>& x) const;
    std::vector<double> apply_deck(const std::vector<double>& x, long power = 1) const;
};

FundamentalDomain make_domain(double a, double b, const BlockLayout& layout,
                              std::uint32_t dim);

enum class Membership { Interior, SphereBoundary, EllipsoidBoundary, Outside };

std::string membership_str(Membership m);

// Classification by the two defining inequalities; boundary tolerance 1e-10.
// Throws on x = 0.
Membership domain_membership(const FundamentalDomain& d, const std::vector<double>& x,
                             double tol = 1e-10);

// Unique power k with phi^k x in the half-open representative set (sphere
// boundary kept, ellipsoid boundary sent to its sphere identification).
struct Representative {
    long k = 0;
    std::vector<double> y;
};

Representative canonical_representative(const FundamentalDomain& d,
                                        const std::vector<double>& x, double tol = 1e-10);

// Orbit-interpolation chart value: angle in [0,1) measuring the position of
// the representative between the sphere (0) and the ellipsoid (1), plus the
// radial sphere coordinate. The angle is one choice of circle parameter; no
// preferred one exists.
struct QuotientChartPoint {
    Representative rep;
    double angle = 0;
    std::vector<double> sphere_point;
};

QuotientChartPoint quotient_chart(const FundamentalDomain& d, const std::vector<double>& x);

}  // namespace pkv
