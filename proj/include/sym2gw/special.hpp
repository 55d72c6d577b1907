#pragma once

// Bernoulli numbers, zeta values at non-positive integers, and polylogarithms
// of negative order as exact rational functions.
//
// Convention (fixed project-wide): B_n is the coefficient in
//     z / (e^z - 1) = sum B_n z^n / n!,
// so B_1 = -1/2.  The other common convention flips the sign of B_1 and with
// it zeta(0); everything downstream assumes this one.

#include "sym2gw/rational.hpp"
#include "sym2gw/ratfunc.hpp"

#include <mutex>
#include <vector>

namespace sym2gw {

// B_n via the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 (n >= 1).
// Memoized; the table only ever grows.
inline Rational bernoulli(unsigned long n) {
    static std::mutex mu;
    static std::vector<Rational> table = {Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= n) {
        unsigned long m = table.size();
        Rational acc;
        for (unsigned long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * table[k];
        table.push_back(-acc / Rational(Integer(m + 1)));
    }
    return table[n];
}

// zeta(-m) = (-1)^m B_{m+1} / (m+1) for m >= 0.
inline Rational zeta_nonpositive(unsigned long m) {
    Rational v = bernoulli(m + 1) / Rational(Integer(m + 1));
    return (m % 2 == 0) ? v : -v;
}

// Li_{-m}(q) = sum_{a>=1} a^m q^a as a rational function: apply (q d/dq) m
// times to q/(1-q).  The denominator is (1-q)^{m+1}.
inline RatFunc polylog_negative(unsigned long m) {
    RatFunc q = RatFunc::q();
    RatFunc f = q / (RatFunc(GaussRational(1)) - q);
    for (unsigned long k = 0; k < m; ++k) f = q * f.derivative();
    return f;
}

}  // namespace sym2gw
