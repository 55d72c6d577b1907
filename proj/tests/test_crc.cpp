#include <catch2/catch_amalgamated.hpp>

#include "sym2gw/crc.hpp"

using namespace sym2gw;

namespace {
GaussRational I() { return GaussRational::i(); }
}

TEST_CASE("crc: graber table lookups") {
    hilb::HilbClass t2_2 = hilb::normal_form(0, 2), t2_3 = hilb::normal_form(0, 3),
                    t2_4 = hilb::normal_form(0, 4);
    hilb::HilbClass d = hilb::t2_minus_t1();

    CHECK(graber::two_point(t2_2, t2_4, 1) == Rational(12));
    CHECK(graber::two_point(t2_4, t2_2, 1) == Rational(12));  // unordered
    CHECK(graber::two_point(t2_3, t2_2 * d, 2) == Rational(-1, 2));
    CHECK(graber::two_point(t2_3, t2_3, 7) == Rational(0));   // vanishing beyond 2B1+B2
    CHECK(graber::two_point(t2_3, t2_3, -1) == Rational(0));  // not effective
    CHECK_THROWS_AS(graber::two_point(t2_2, t2_2, 1), OutOfTable);

    CHECK(graber::one_point(d * d, 3) == Rational(-1));  // -9/9
    CHECK(graber::one_point(hilb::t2() * d, 2) == Rational(-3, 2));
    CHECK_THROWS_AS(graber::one_point(d * d, 0), OutOfTable);
    CHECK_THROWS_AS(graber::one_point(t2_2, 1), OutOfTable);

    CHECK(graber::value({t2_2, t2_4}, hilb::CurveClass{1, 1}) == Rational(12));
    CHECK(graber::value({d * d}, hilb::CurveClass{3, 0}) == Rational(-1));
    CHECK_THROWS_AS(graber::value({t2_2}, hilb::CurveClass{1, 2}), OutOfTable);
}

TEST_CASE("crc: bridge map") {
    const BridgeMap& bridge = BridgeMap::get();
    CHECK(bridge.degree_preserving());

    // Generator images: a -> T2 and g -> i(T2 - T1).
    CHECK(bridge.apply(orb::OrbClass::basis(orb::kAlpha)) == hilb::t2());
    CHECK(bridge.apply(orb::OrbClass::basis(orb::kGamma0)) == I() * hilb::t2_minus_t1());

    // Multiplicativity on the monomial basis by construction.
    CHECK(bridge.apply(orb::OrbClass::monomial(2, 1)) == BridgeMap::monomial_image(2, 1));

    for (int i = 0; i < orb::kDim; ++i) {
        orb::OrbClass x = orb::OrbClass::basis(i);
        CHECK(bridge.inverse(bridge.apply(x)) == x);
    }
}

TEST_CASE("crc: two-point q-series match the table sums") {
    QInvariant a4a2 = crc_two_point({4, 0}, {2, 0});
    REQUIRE(a4a2.laurent.has_value());
    CHECK(a4a2.laurent->coeff(-1) == GaussRational(3));
    CHECK(a4a2.laurent->coeff(0) == GaussRational(12));
    CHECK(a4a2.laurent->coeff(1) == GaussRational(3));
    CHECK(a4a2.at_minus_one() == GaussRational(6));

    QInvariant a4g2 = crc_two_point({4, 0}, {0, 2});
    CHECK(a4g2.laurent->coeff(-1) == GaussRational(-3));
    CHECK(a4g2.laurent->coeff(0) == GaussRational(9));
    CHECK(a4g2.laurent->coeff(1) == GaussRational(6));
    CHECK(a4g2.at_minus_one() == GaussRational(6));

    QInvariant a2g = crc_two_point({2, 1}, {2, 1});
    CHECK(a2g.laurent->coeff(-1) == GaussRational(-4));
    CHECK(a2g.laurent->coeff(0) == GaussRational(8));
    CHECK(a2g.laurent->coeff(1) == GaussRational(-4));
    CHECK(a2g.at_minus_one() == GaussRational(16));

    QInvariant a4ag = crc_two_point({4, 0}, {1, 1});
    CHECK(a4ag.laurent->coeff(-1) == GaussRational(3) * I());
    CHECK(a4ag.laurent->coeff(0) == GaussRational(0));
    CHECK(a4ag.laurent->coeff(1) == GaussRational(-3) * I());
    CHECK(a4ag.at_minus_one() == GaussRational(0));

    // Support is contained in exponents {-1, 0, 1}.
    for (const auto& shape : crc_two_point_shapes()) {
        QInvariant inv = crc_two_point(shape.first, shape.second);
        CHECK(inv.laurent->min_exp() >= -1);
        CHECK(inv.laurent->max_exp() <= 1);
    }

    CHECK_THROWS_AS(crc_two_point({2, 0}, {2, 0}), OutOfTable);
}

TEST_CASE("crc: degree-zero continuations") {
    QInvariant g1 = crc_degree_zero(DegreeZeroKind::kAlphaGamma, 1);
    REQUIRE(g1.ratfunc.has_value());
    // g = 1: +6 Li_{-1}(q) = 6 q/(1-q)^2, value -3/2 at q = -1.
    CHECK(*g1.ratfunc == polylog_negative(1) * GaussRational(6));
    CHECK(g1.at_minus_one() == GaussRational(Rational(-3, 2)));

    for (unsigned long g = 1; g <= 8; ++g) {
        QInvariant ag = crc_degree_zero(DegreeZeroKind::kAlphaGamma, g);
        CHECK_FALSE(ag.ratfunc->has_pole_at(GaussRational(-1)));
        // Continuation equals twice the Bernoulli closed form (a*g = 2 g1).
        CHECK(ag.at_minus_one() == GaussRational(Rational(2) * degree_zero_twisted_value(g)));

        QInvariant gg = crc_degree_zero(DegreeZeroKind::kGammaSquared, g);
        CHECK(gg.at_minus_one() == GaussRational(0));
    }
}

TEST_CASE("crc: quantum relations") {
    CrcReport report = quantum_relation_check();
    for (const auto& c : report.checks) {
        INFO(c.name << ": expected " << c.expected << ", got " << c.got);
        CHECK(c.ok);
    }
}

TEST_CASE("crc: full generator-level verification") {
    InvariantStore store;
    WdvvEngine engine(store);
    CrcReport report = crc_verify(engine, 8);
    CHECK(report.checks.size() > 30);
    for (const auto& c : report.checks) {
        INFO(c.name << ": expected " << c.expected << ", got " << c.got);
        CHECK(c.ok);
    }
}
