#include <doctest.h>

#include "chart.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "rng.hpp"

using namespace pkv;

TEST_CASE("gaussian rationals stay canonical") {
    GaussianRational q = GaussianRational::make(2, -4);  // -1/2
    CHECK(q.re() == mpq_class(-1, 2));
    CHECK(q.re().get_den() == 2);

    GaussianRational a = GaussianRational::make(1, 3, 1, 6);
    GaussianRational b = GaussianRational::make(2, 3, -1, 6);
    GaussianRational s = a + b;
    CHECK(s.re() == 1);
    CHECK(s.im() == 0);

    CHECK(a.conj().conj() == a);
    GaussianRational norm = a * a.conj();
    CHECK(norm.im() == 0);
    CHECK(norm.re() == a.norm());
}

TEST_CASE("gaussian rational parse and print") {
    CHECK(GaussianRational::parse("1").str() == "1");
    CHECK(GaussianRational::parse("-3/4+1/2i").str() == "-3/4+1/2*i");
    CHECK(GaussianRational::parse("0+1i").str() == "1*i");
    CHECK(GaussianRational::parse("1-2i").str() == "1-2*i");
    CHECK(GaussianRational::parse(" 2/4 ").str() == "1/2");
    CHECK(GaussianRational::parse("-1/2i").str() == "-1/2*i");
    CHECK_THROWS(GaussianRational::parse(""));
    CHECK_THROWS(GaussianRational::parse("1+i"));    // c is required before i
    CHECK_THROWS(GaussianRational::parse("1/0"));
    CHECK_THROWS(GaussianRational::parse("x"));
}

namespace {

MultiPoly random_poly(Rng& rng, std::uint32_t nvars, int max_terms) {
    MultiPoly p(nvars);
    int terms = static_cast<int>(rng.int_in(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars, 0);
        int degree_budget = static_cast<int>(rng.int_in(0, 4));
        for (int k = 0; k < degree_budget; ++k)
            m[static_cast<std::size_t>(rng.int_in(0, nvars - 1))] += 1;
        p.add_term(m, rng.small_gaussian_rational());
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    const std::uint32_t nv = 4;
    MultiPoly x = MultiPoly::variable(nv, 0);
    MultiPoly y = MultiPoly::variable(nv, 1);

    // (x+y)^2 = x^2 + 2xy + y^2
    MultiPoly sq = (x + y) * (x + y);
    MultiPoly expect = x * x + (x * y).scaled(GaussianRational(2)) + y * y;
    CHECK(sq == expect);

    // absorbing element
    CHECK((sq * MultiPoly::zero(nv)).is_zero());

    // cancellation drops the zero term: (z1 w2 + i z2) + (-z1 w2) = i z2
    ChartPtr chart = Chart::holomorphic_pair(2);
    MultiPoly z1w2 = chart->var(chart->coord_var(0)) * chart->var(chart->conj_coord_var(1));
    MultiPoly iz2 = chart->var(chart->coord_var(1)).scaled(GaussianRational::i());
    MultiPoly sum = (z1w2 + iz2) - z1w2;
    CHECK(sum == iz2);
    CHECK(sum.term_count() == 1);
}

TEST_CASE("formal partial derivatives") {
    // chart z1..z2, w1..w2 treated as four independent symbols
    ChartPtr chart = Chart::holomorphic_pair(2);
    MultiPoly p = chart->var(chart->coord_var(0)) * chart->var(chart->coord_var(1)) *
                  chart->var(chart->conj_coord_var(0));
    MultiPoly dz1 = p.partial(chart->coord_var(0));
    CHECK(dz1 == chart->var(chart->coord_var(1)) * chart->var(chart->conj_coord_var(0)));

    // independence of the conjugate variable
    CHECK(chart->var(chart->coord_var(0)).partial(chart->conj_coord_var(0)).is_zero());

    CHECK_THROWS(p.partial(99));
    CHECK_THROWS(chart->var_index("nope"));
}

TEST_CASE("mixed second partial of the quadratic term is the unit block") {
    // n = 1: d_{z1} d_{w3} (z1 w3 + z2 w4) = 1
    ChartPtr chart = Chart::holomorphic_pair(4);
    MultiPoly q = chart->var(chart->coord_var(0)) * chart->var(chart->conj_coord_var(2)) +
                  chart->var(chart->coord_var(1)) * chart->var(chart->conj_coord_var(3));
    MultiPoly d = q.partial(chart->coord_var(0)).partial(chart->conj_coord_var(2));
    CHECK(d == chart->constant(GaussianRational(1)));
}

TEST_CASE("conjugation involution") {
    ChartPtr chart = Chart::holomorphic_pair(2);
    MultiPoly p = chart->var(chart->coord_var(0)).scaled(GaussianRational::i());
    MultiPoly c = chart->conjugate(p);
    // conj(i z1) = -i w1
    MultiPoly expect = chart->var(chart->conj_coord_var(0)).scaled(-GaussianRational::i());
    CHECK(c == expect);

    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly q = random_poly(rng, chart->nvars(), 6);
        CHECK(chart->conjugate(chart->conjugate(q)) == q);
    }
}

TEST_CASE("conjugation is a ring homomorphism and partials commute") {
    ChartPtr chart = Chart::holomorphic_pair(2);
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly p = random_poly(rng, chart->nvars(), 5);
        MultiPoly q = random_poly(rng, chart->nvars(), 5);
        CHECK(chart->conjugate(p * q) == chart->conjugate(p) * chart->conjugate(q));
        CHECK(chart->conjugate(p + q) == chart->conjugate(p) + chart->conjugate(q));
        std::uint32_t u = static_cast<std::uint32_t>(rng.int_in(0, chart->nvars() - 1));
        std::uint32_t v = static_cast<std::uint32_t>(rng.int_in(0, chart->nvars() - 1));
        CHECK(p.partial(u).partial(v) == p.partial(v).partial(u));
    }
}

TEST_CASE("evaluation agrees with arithmetic") {
    const std::uint32_t nv = 3;
    Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly p = random_poly(rng, nv, 5);
        MultiPoly q = random_poly(rng, nv, 5);
        std::vector<GaussianRational> pt = rng.rational_vector(nv, false);
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    }
    // simple frozen cases
    MultiPoly zw = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
    CHECK(zw.eval({GaussianRational(2), GaussianRational(3)}) == GaussianRational(6));
    CHECK(MultiPoly::zero(2).eval({GaussianRational(5), GaussianRational(7)}).is_zero());
    // h11 of the n=1 unit-sigma model at z2 = 1+i, w2 = 1-i:
    // h11 = z2 w2 evaluates to 2
    ChartPtr chart = Chart::holomorphic_pair(4);
    MultiPoly h11 = chart->var(chart->coord_var(1)) * chart->var(chart->conj_coord_var(1));
    std::vector<GaussianRational> pt(chart->nvars());
    pt[chart->coord_var(1)] = GaussianRational(mpq_class(1), mpq_class(1));
    pt[chart->conj_coord_var(1)] = GaussianRational(mpq_class(1), mpq_class(-1));
    CHECK(h11.eval(pt) == GaussianRational(2));
}

TEST_CASE("exact linear algebra") {
    // rank of the zero matrix
    ExactMatrix zero(3, 3);
    CHECK(zero.rank() == 0);
    CHECK(zero.kernel_basis().size() == 3);

    // involution inverse
    ExactMatrix swap(2, 2);
    swap.at(0, 1) = GaussianRational(1);
    swap.at(1, 0) = GaussianRational(1);
    CHECK(swap.inverse() == swap);

    // exact inverse times the matrix is the identity, kernel vectors annihilate
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix m(4, 4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = rng.small_gaussian_rational();
        if (m.rank() == 4) {
            CHECK(m * m.inverse() == ExactMatrix::identity(4));
        } else {
            CHECK_THROWS_AS((void)m.inverse(), SingularMatrixError);
            for (const auto& v : m.kernel_basis()) {
                for (const auto& entry : m.apply(v)) CHECK(entry.is_zero());
            }
        }
    }

    // singular inverse error carries the rank
    ExactMatrix sing(3, 3);
    sing.at(0, 0) = GaussianRational(1);
    sing.at(1, 1) = GaussianRational(2);
    try {
        (void)sing.inverse();
        CHECK(false);
    } catch (const SingularMatrixError& e) {
        CHECK(e.rank() == 2);
    }

    // solve: consistent and inconsistent systems
    ExactMatrix rhs(3, 1);
    rhs.at(0, 0) = GaussianRational(3);
    rhs.at(1, 0) = GaussianRational(4);
    auto sol = sing.solve(rhs);
    REQUIRE(sol.has_value());
    CHECK(sol->at(0, 0) == GaussianRational(3));
    CHECK(sol->at(1, 0) == GaussianRational(2));
    rhs.at(2, 0) = GaussianRational(1);  // now inconsistent (third row of sing is zero)
    CHECK(!sing.solve(rhs).has_value());

    // determinant
    CHECK(swap.det() == GaussianRational(-1));
    CHECK(sing.det().is_zero());
}
