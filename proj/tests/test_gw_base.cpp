#include <catch2/catch_amalgamated.hpp>

#include "sym2gw/gw_base.hpp"

using namespace sym2gw;
using namespace sym2gw::orb;

namespace {
InvariantKey K(int d, std::vector<int> idx) { return InvariantKey::make(d, std::move(idx)); }
}

TEST_CASE("gw: key canonicalization and serialization") {
    InvariantKey k = K(1, {kAlpha4, kAlpha2});
    CHECK(k.idx == std::vector<int>{kAlpha2, kAlpha4});
    CHECK(k.str() == "1|2,5");
    CHECK(InvariantKey::parse("1|2,5") == k);
    CHECK_THROWS_AS(InvariantKey::parse("1|5,2"), std::invalid_argument);
    CHECK_THROWS_AS(InvariantKey::parse("nope"), std::invalid_argument);

    CHECK(K(0, {kGamma0, kGamma1}) < K(0, {kGamma0, kGamma0, kGamma0}));  // by size
    CHECK(K(0, {kGamma0}) < K(1, {kGamma0}));                             // by degree
}

TEST_CASE("gw: dimension and parity admissibility") {
    CHECK(dimension_admissible(K(1, {kAlpha4, kAlpha2})));        // 4+2 = 3+1+2
    CHECK_FALSE(dimension_admissible(K(1, {kAlpha4, kGamma1})));  // odd twisted count
    CHECK_FALSE(dimension_admissible(K(0, {kAlpha3, kAlpha3})));  // 6 != 0+1+2
    CHECK(dimension_admissible(K(0, {kGamma1, kGamma0, kGamma0, kGamma0})));
}

TEST_CASE("gw: unstable brackets are flagged, not zeroed") {
    CHECK(is_unstable(K(0, {kGamma0, kGamma0})));
    CHECK_FALSE(is_unstable(K(1, {})));
    CHECK(base_value(K(0, {kGamma0, kGamma2})).kind == BaseKind::kUnstable);
}

TEST_CASE("gw: degree-zero three-point values are triple integrals") {
    CHECK(base_value(K(0, {kOne, kAlpha4, kOne})).kind == BaseKind::kValue);
    CHECK(base_value(K(0, {kOne, kOne, kAlpha4})).value == Rational(3));
    CHECK(base_value(K(0, {kGamma0, kGamma2, kOne})).value == Rational(1, 2));
    CHECK(base_value(K(0, {kAlpha2, kBeta, kOne})).value == Rational(1));
    CHECK(base_value(K(0, {kAlpha, kGamma0, kGamma1})).value == Rational(1));
}

TEST_CASE("gw: unit and divisor axioms") {
    CHECK(base_value(K(5, {kOne, kAlpha, kAlpha2})).value == Rational(0));
    // <a, a^4, a^2>_1 = 1 * <a^4, a^2>_1 = 6.
    CHECK(base_value(K(1, {kAlpha, kAlpha4, kAlpha2})).value == Rational(6));
    CHECK(base_value(K(1, {kAlpha, kAlpha, kAlpha4, kAlpha})).kind == BaseKind::kValue);
}

TEST_CASE("gw: degree-zero closed forms") {
    // Untwisted insertion with more than three points dies.
    CHECK(base_value(K(0, {kAlpha2, kGamma0, kGamma0, kGamma0, kGamma0})).value == Rational(0));

    // <g1, g0^(2g+1)>_0 for g = 1, 2.
    CHECK(base_value(K(0, {kGamma1, kGamma0, kGamma0, kGamma0})).value == Rational(-3, 4));
    CHECK(base_value(K(0, {kGamma1, kGamma0, kGamma0, kGamma0, kGamma0, kGamma0})).value ==
          Rational(-3, 8));
}

TEST_CASE("gw: hyperelliptic Hodge integral values") {
    CHECK(fp_hodge_integral(1) == Rational(1, 4));
    CHECK(fp_hodge_integral(2) == Rational(1, 8));
    // Consistency with the degree-zero closed form: -3 * integral.
    for (unsigned long g = 1; g <= 8; ++g)
        CHECK(degree_zero_twisted_value(g) == Rational(-3) * fp_hodge_integral(g));
}

TEST_CASE("gw: degree-one two-point table") {
    CHECK(base_value(K(1, {kAlpha4, kAlpha2})).value == Rational(6));
    CHECK(base_value(K(1, {kAlpha4, kBeta})).value == Rational(0));
    CHECK(base_value(K(1, {kAlpha3, kAlpha3})).value == Rational(9));
    CHECK(base_value(K(1, {kGamma2, kGamma2})).value == Rational(1));
}

TEST_CASE("gw: reconstruction cases are recognized") {
    CHECK(base_value(K(1, {kGamma2, kGamma2, kGamma0, kGamma0})).kind == BaseKind::kNotBase);
    CHECK(base_value(K(1, {kAlpha2, kAlpha2, kAlpha3})).kind == BaseKind::kNotBase);
}

TEST_CASE("gw: notation conversion between bracket conventions") {
    auto k = convert_notation(1, 1, {kGamma2, kGamma2});
    REQUIRE(k.has_value());
    CHECK(*k == K(1, {kGamma2, kGamma2, kGamma0, kGamma0}));

    auto same = convert_notation(1, 0, {kGamma2, kGamma2});
    REQUIRE(same.has_value());
    CHECK(*same == K(1, {kGamma2, kGamma2}));

    CHECK_FALSE(convert_notation(1, -1, {kGamma2, kGamma2}).has_value());  // h < g
    CHECK_THROWS_AS(convert_notation(1, 1, {kGamma2}), std::invalid_argument);

    // Untwisted insertions have g = -1, so h = 0 appends two g0.
    auto b = convert_notation(2, 0, {kAlpha2, kAlpha2});
    REQUIRE(b.has_value());
    CHECK(*b == K(2, {kAlpha2, kAlpha2, kGamma0, kGamma0}));
}

TEST_CASE("gw: multilinear query expansion") {
    InvariantQuery q;
    q.d = 1;
    OrbClass diag = OrbClass::basis(kAlpha2) - OrbClass::basis(kBeta);  // g^2
    q.insertions = {OrbClass::basis(kAlpha4), diag};
    auto terms = q.expand();
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].coeff == GaussRational(1));
    CHECK(terms[0].key == K(1, {kAlpha4, kAlpha2}));
    CHECK(terms[1].coeff == GaussRational(-1));
    CHECK(terms[1].key == K(1, {kAlpha4, kBeta}));
}
