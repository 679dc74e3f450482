#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "catalan/bounds.hpp"
#include "catalan/singularity.hpp"

using catalan::BigRat;
using catalan::ImplicitQuadratic;
using catalan::PolynomialZ;
using catalan::make_rational;

namespace {

PolynomialZ poly(std::vector<long> ints) {
    std::vector<BigRat> c;
    c.reserve(ints.size());
    for (long x : ints) c.emplace_back(x);
    return PolynomialZ(std::move(c));
}

// w - 1 - z w^2 as (a, b, c) = (-z, 1, -1).
ImplicitQuadratic catalan_curve() {
    return ImplicitQuadratic(poly({0, -1}), poly({1}), poly({-1}));
}

}  // namespace

TEST_CASE("curve evaluation") {
    auto f = catalan_curve();
    CHECK(catalan::evaluate(f, BigRat(0), BigRat(1)) == 0);
    CHECK(catalan::evaluate(f, make_rational(1, 4), BigRat(2)) == 0);
    CHECK(catalan::evaluate(f, BigRat(0), BigRat(0)) == -1);
}

TEST_CASE("regular point check") {
    auto f = catalan_curve();
    CHECK(catalan::regular_point_check(f, BigRat(0), BigRat(1)));
    CHECK(!catalan::regular_point_check(f, make_rational(1, 4), BigRat(2)));

    // dF/dw = 2 a(z) w + b(z) at a generic on-curve point of w^2 - 1 - z w.
    ImplicitQuadratic g(poly({1}), poly({0, -1}), poly({-1}));
    CHECK(catalan::evaluate(g, BigRat(0), BigRat(1)) == 0);
    CHECK(catalan::regular_point_check(g, BigRat(0), BigRat(1)));  // 2*1*1 + 0 = 2

    CHECK_THROWS_AS(catalan::regular_point_check(f, BigRat(0), BigRat(5)),
                    std::invalid_argument);
}

TEST_CASE("discriminant") {
    CHECK(catalan::discriminant(catalan_curve()) == poly({1, -4}));
    CHECK(catalan::discriminant(ImplicitQuadratic(poly({1}), PolynomialZ(), poly({-1}))) ==
          poly({4}));
    // a = 1, b = 2z, c = z^2 is a perfect square in w: zero discriminant.
    CHECK(catalan::discriminant(ImplicitQuadratic(poly({1}), poly({0, 2}), poly({0, 0, 1})))
              .is_zero());
}

TEST_CASE("rational roots") {
    CHECK(catalan::rational_roots(poly({1, -4})) == std::vector<BigRat>{make_rational(1, 4)});
    CHECK(catalan::rational_roots(poly({-1, 0, 1})) ==
          std::vector<BigRat>{BigRat(1), BigRat(-1)});
    CHECK(catalan::rational_roots(poly({1, 0, 1})).empty());
    CHECK(catalan::rational_roots(poly({7})).empty());
    CHECK_THROWS_AS(catalan::rational_roots(PolynomialZ()), std::domain_error);

    // 6z^2 - 5z + 1 = (2z - 1)(3z - 1): roots 1/3 then 1/2 by modulus.
    CHECK(catalan::rational_roots(poly({1, -5, 6})) ==
          std::vector<BigRat>{make_rational(1, 3), make_rational(1, 2)});

    // z^3 - z = z (z-1)(z+1): zero first, then the tie broken positive-first.
    CHECK(catalan::rational_roots(poly({0, -1, 0, 1})) ==
          std::vector<BigRat>{BigRat(0), BigRat(1), BigRat(-1)});
}

TEST_CASE("rational roots recover randomly planted ones") {
    std::mt19937_64 rng(0x900d5eedULL);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BigRat> planted;
        PolynomialZ p = poly({1});
        for (int i = 0; i < 3; ++i) {
            BigRat r = make_rational(num(rng), den(rng));
            planted.push_back(r);
            // multiply by (z - r)
            p = PolynomialZ(std::vector<BigRat>{-r, BigRat(1)}) * p;
        }
        auto roots = catalan::rational_roots(p);
        for (const BigRat& r : planted) {
            CHECK(std::find(roots.begin(), roots.end(), r) != roots.end());
        }
        for (const BigRat& r : roots) {
            CHECK(sgn(p.evaluate(r)) == 0);
        }
    }
}

TEST_CASE("locate singularity: the Catalan curve and two variants") {
    auto r = catalan::locate_singularity(catalan_curve());
    REQUIRE(r.found_rational());
    CHECK(r.point->z_star == make_rational(1, 4));
    CHECK(r.point->w_star == BigRat(2));

    // a = -z, b = 1, c = -2: discriminant 1 - 8z, point (1/8, 4).
    auto r2 = catalan::locate_singularity(
        ImplicitQuadratic(poly({0, -1}), poly({1}), poly({-2})));
    REQUIRE(r2.found_rational());
    CHECK(r2.point->z_star == make_rational(1, 8));
    CHECK(r2.point->w_star == BigRat(4));

    // w^2 + w + z: discriminant 1 - 4z, point (1/4, -1/2).
    auto r3 = catalan::locate_singularity(
        ImplicitQuadratic(poly({1}), poly({1}), poly({0, 1})));
    REQUIRE(r3.found_rational());
    CHECK(r3.point->z_star == make_rational(1, 4));
    CHECK(r3.point->w_star == make_rational(-1, 2));
}

TEST_CASE("located points satisfy both defining equations exactly") {
    std::vector<ImplicitQuadratic> curves;
    curves.push_back(catalan_curve());
    curves.push_back(ImplicitQuadratic(poly({0, -1}), poly({1}), poly({-2})));
    curves.push_back(ImplicitQuadratic(poly({1}), poly({1}), poly({0, 1})));
    curves.push_back(ImplicitQuadratic(poly({2}), poly({1, 3}), poly({0, 0, 1})));
    for (const auto& f : curves) {
        auto r = catalan::locate_singularity(f);
        if (!r.found_rational()) continue;
        const auto& p = *r.point;
        CHECK(sgn(catalan::evaluate(f, p.z_star, p.w_star)) == 0);
        CHECK(sgn(2 * f.a.evaluate(p.z_star) * p.w_star + f.b.evaluate(p.z_star)) == 0);
        CHECK(sgn(catalan::discriminant(f).evaluate(p.z_star)) == 0);
        CHECK(!catalan::regular_point_check(f, p.z_star, p.w_star));
    }
}

TEST_CASE("alternative route: substituting w = 1/(2z) finds the same point") {
    // F(z, 1/(2z)) = 0, cleared of denominators, is a + 2z b + 4z^2 c.
    auto f = catalan_curve();
    PolynomialZ cleared = f.a + poly({0, 2}) * f.b + poly({0, 0, 4}) * f.c;
    auto roots = catalan::rational_roots(cleared);
    // Reject z = 0 where the substitution is undefined.
    std::erase_if(roots, [](const BigRat& r) { return sgn(r) == 0; });
    REQUIRE(roots.size() == 1);
    CHECK(roots.front() == make_rational(1, 4));
    BigRat w = BigRat(1) / (2 * roots.front());
    CHECK(w == BigRat(2));
    CHECK(catalan::locate_singularity(f).point->z_star == roots.front());
}

TEST_CASE("degenerate and empty outcomes") {
    // Discriminant 4(1-4z)^2 vanishes exactly where a(z) = 1-4z does.
    ImplicitQuadratic degenerate(poly({1, -4}), PolynomialZ(), poly({-1, 4}));
    CHECK_THROWS_AS(catalan::locate_singularity(degenerate), std::domain_error);

    // Perfect square in w: discriminant identically zero.
    ImplicitQuadratic square(poly({1}), poly({0, 2}), poly({0, 0, 1}));
    CHECK_THROWS_AS(catalan::locate_singularity(square), std::domain_error);

    // Discriminant 1 - 2z^2 has no rational root; expect a sign-change
    // bracket pinning down 1/sqrt(2) or its negative.
    ImplicitQuadratic irr(poly({0, 0, -1}), poly({1}), make_rational(-1, 2) * poly({1}));
    auto r = catalan::locate_singularity(irr);
    CHECK(!r.found_rational());
    REQUIRE(r.non_rational.has_value());
    PolynomialZ disc = catalan::discriminant(irr);
    CHECK(sgn(disc.evaluate(r.non_rational->lo)) != sgn(disc.evaluate(r.non_rational->hi)));
    CHECK(r.non_rational->hi - r.non_rational->lo <= make_rational(1, 1024));

    CHECK_THROWS_AS(ImplicitQuadratic(PolynomialZ(), poly({1}), poly({1})),
                    std::invalid_argument);
}

TEST_CASE("root-test reciprocals trend down toward z* = 1/4 from above") {
    auto point = catalan::locate_singularity(catalan_curve()).point;
    REQUIRE(point.has_value());
    double z_star = 0.25;
    CHECK(point->z_star == make_rational(1, 4));

    double r100 = 1.0 / catalan::root_test(100);
    double r1000 = 1.0 / catalan::root_test(1000);
    double r2000 = 1.0 / catalan::root_test(2000);
    CHECK(r100 > r1000);
    CHECK(r1000 > r2000);
    CHECK(r2000 > z_star);
}
