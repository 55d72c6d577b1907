#include <catch2/catch_amalgamated.hpp>

#include "sym2gw/hyperelliptic.hpp"

using namespace sym2gw;
using namespace sym2gw::orb;

TEST_CASE("hyperelliptic: incidence class") {
    OrbClass b = incidence_class();
    CHECK(b == OrbClass::basis(kAlpha2) - GaussRational(2) * OrbClass::basis(kBeta));
    CHECK(b.pure_degree() == 2);

    // Pullback to the double cover is h1^2 + h2^2.
    Coords coords{};
    coords[kAlpha2] = Rational(1);
    coords[kBeta] = Rational(-2);
    BiPoly p = untwisted_pullback_of(coords);
    CHECK(p.c[2][0] == Rational(1));
    CHECK(p.c[0][2] == Rational(1));
    CHECK(p.c[1][1] == Rational(0));

    // Self-intersection integrates to 1: one point pair through two points.
    CHECK(integrate(b * b) == GaussRational(1));
}

TEST_CASE("hyperelliptic: the J-key satisfies the dimension constraint identically") {
    for (int d = 1; d <= 3; ++d)
        for (int g = 0; g <= 3; ++g) {
            InvariantQuery q;
            q.d = d;
            for (int k = 0; k < 3 * d + 1; ++k) q.insertions.push_back(incidence_class());
            for (int k = 0; k < 2 * g + 2; ++k) q.insertions.push_back(OrbClass::basis(kGamma0));
            for (const auto& term : q.expand()) CHECK(dimension_admissible(term.key));
        }
}

TEST_CASE("hyperelliptic: degree-one counts vanish") {
    // Geometric oracle: a degree-one family lies on a line, and four generic
    // points are never collinear, so E(1,0) = 0 and with it J(1,0).
    InvariantStore store;
    WdvvEngine engine(store);
    CountTable t = count_hyperelliptic(engine, 1, 0);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].j == Rational(0));
    CHECK(t.rows[0].e == Rational(0));
    CHECK(t.rows[0].e_integral);
    CHECK(t.rows[0].e_nonnegative);
}

TEST_CASE("hyperelliptic: genus-one degree-one count also vanishes") {
    // Same geometric oracle one level up: every degree-one image is a line.
    InvariantStore store;
    WdvvEngine engine(store);
    CountTable t = count_hyperelliptic(engine, 1, 1);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[1].j == Rational(0));
    CHECK(t.rows[1].e == Rational(0));
}

TEST_CASE("hyperelliptic: argument validation") {
    InvariantStore store;
    WdvvEngine engine(store);
    CHECK_THROWS_AS(count_hyperelliptic(engine, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_hyperelliptic(engine, 1, -1), std::invalid_argument);
}
