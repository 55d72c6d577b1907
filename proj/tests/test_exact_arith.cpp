#include <catch2/catch_amalgamated.hpp>

#include "sym2gw/gauss.hpp"
#include "sym2gw/laurent.hpp"
#include "sym2gw/ratfunc.hpp"
#include "sym2gw/rational.hpp"
#include "sym2gw/special.hpp"

#include <random>

using namespace sym2gw;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

// Independent Bernoulli oracle: B_n / n! are the series coefficients of
// z / (e^z - 1) = 1 / sum_{k>=0} z^k / (k+1)!, computed by series inversion.
std::vector<Rational> bernoulli_by_series(std::size_t count) {
    std::vector<Rational> den(count);
    for (std::size_t k = 0; k < count; ++k) den[k] = Rational(1, 1) / Rational(factorial(k + 1));
    std::vector<Rational> inv(count);
    inv[0] = Rational(1);
    for (std::size_t k = 1; k < count; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) acc += den[j] * inv[k - j];
        inv[k] = -acc;
    }
    for (std::size_t k = 0; k < count; ++k) inv[k] *= Rational(factorial(k));
    return inv;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(R(2, 4) == R(1, 2));
    CHECK(R(-2, -4) == R(1, 2));
    CHECK(R(2, -4).sign() < 0);
    CHECK(R(2, -4).denominator() == 2);  // denominator stays positive
    CHECK(R(7, 3).str() == "7/3");
    CHECK(R(-6, 3).str() == "-2");
    CHECK(Rational::parse("7/3") == R(7, 3));
    CHECK(Rational::parse("-2") == R(-2));
    CHECK_THROWS_AS(R(1) / R(0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
}

TEST_CASE("rational and gaussian arithmetic is exact on random operands") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 60);
    auto rnd = [&] { return Rational(num(rng), den(rng)); };
    for (int t = 0; t < 200; ++t) {
        Rational a = rnd(), b = rnd();
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        GaussRational x(rnd(), rnd()), y(rnd(), rnd());
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
        CHECK(x.conj().conj() == x);
        CHECK((x * x.conj()).is_real());
    }
}

TEST_CASE("gaussian rational serialization") {
    GaussRational z(R(1, 2), R(-3, 4));
    CHECK(z.str() == "1/2-3/4*i");
    CHECK(GaussRational::i().str() == "i");
    CHECK((GaussRational::i() * GaussRational::i()) == GaussRational(-1));
    CHECK(GaussRational(R(0), R(5)).str() == "5*i");
}

TEST_CASE("bernoulli numbers in the B1 = -1/2 convention") {
    CHECK(bernoulli(0) == R(1));
    CHECK(bernoulli(1) == R(-1, 2));
    CHECK(bernoulli(2) == R(1, 6));
    CHECK(bernoulli(12) == R(-691, 2730));

    auto oracle = bernoulli_by_series(21);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(bernoulli(n) == oracle[n]);

    for (unsigned long n = 1; n <= 40; ++n) {
        Rational acc;
        for (unsigned long k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * bernoulli(k);
        CHECK(acc == R(0));
    }
}

TEST_CASE("zeta at non-positive integers") {
    CHECK(zeta_nonpositive(0) == R(-1, 2));
    CHECK(zeta_nonpositive(1) == R(-1, 12));
    CHECK(zeta_nonpositive(2) == R(0));
    for (unsigned long m = 2; m <= 20; m += 2) CHECK(zeta_nonpositive(m) == R(0));
}

TEST_CASE("negative-order polylogarithms as rational functions") {
    RatFunc q = RatFunc::q();
    RatFunc one(GaussRational(1));
    CHECK(polylog_negative(0) == q / (one - q));
    CHECK(polylog_negative(1) == q / ((one - q) * (one - q)));
    CHECK(polylog_negative(1).eval(GaussRational(-1)) == GaussRational(R(-1, 4)));

    // Brute-force series oracle: coefficient of q^a must be a^m.
    for (unsigned long m = 0; m <= 8; ++m) {
        auto coeffs = polylog_negative(m).series(51);
        CHECK(coeffs[0] == GaussRational(0));
        for (unsigned long a = 1; a <= 50; ++a)
            CHECK(coeffs[a] == GaussRational(Rational(pow_int(Integer(a), m))));
    }

    // Li_{-m}(-1) = (2^{1+m} - 1) zeta(-m).
    for (unsigned long m = 0; m <= 12; ++m) {
        GaussRational lhs = polylog_negative(m).eval(GaussRational(-1));
        Rational rhs = Rational(pow_int(2, m + 1) - 1) * zeta_nonpositive(m);
        CHECK(lhs == GaussRational(rhs));
    }

    // Denominator is (1-q)^{m+1}: monic form (q-1)^{m+1} up to sign.
    for (unsigned long m = 0; m <= 6; ++m) {
        Poly qm1(std::vector<GaussRational>{GaussRational(-1), GaussRational(1)});
        Poly expect(GaussRational(1));
        for (unsigned long k = 0; k <= m; ++k) expect = expect * qm1;
        CHECK(polylog_negative(m).den() == expect);
    }
}

TEST_CASE("rational function normal form and evaluation") {
    RatFunc q = RatFunc::q();
    RatFunc one(GaussRational(1));
    RatFunc f = q / (one - q);
    CHECK(f.eval(GaussRational(0)) == GaussRational(0));
    CHECK(f.eval(GaussRational(-1)) == GaussRational(R(-1, 2)));
    CHECK_THROWS_AS(f.eval(GaussRational(1)), PoleError);
    CHECK(f.has_pole_at(GaussRational(1)));

    // gcd reduction: (q^2 - 1)/(q - 1) collapses to q + 1.
    Poly num(std::vector<GaussRational>{GaussRational(-1), GaussRational(0), GaussRational(1)});
    Poly den(std::vector<GaussRational>{GaussRational(-1), GaussRational(1)});
    RatFunc g(num, den);
    CHECK(g == RatFunc(Poly(std::vector<GaussRational>{GaussRational(1), GaussRational(1)}),
                       Poly(GaussRational(1))));
    CHECK_FALSE(g.has_pole_at(GaussRational(1)));
}

TEST_CASE("laurent polynomials") {
    LaurentPoly p;
    p.set(-1, GaussRational(3));
    p.set(0, GaussRational(12));
    p.set(1, GaussRational(3));
    CHECK(p.eval(GaussRational(-1)) == GaussRational(6));
    CHECK(p.str() == "3*q^-1 + 12 + 3*q");
    CHECK_THROWS_AS(p.eval(GaussRational(0)), PoleError);

    p.set(-1, GaussRational(0));
    CHECK(p.min_exp() == 0);  // zero coefficients are dropped

    LaurentPoly a = LaurentPoly::monomial(2, GaussRational(5));
    LaurentPoly b = LaurentPoly::monomial(-2, GaussRational(R(1, 5)));
    CHECK((a * b) == LaurentPoly(GaussRational(1)));
}
