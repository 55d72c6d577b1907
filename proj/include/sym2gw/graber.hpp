#pragma once

// The published genus-zero invariants of the Hilbert scheme side, consumed
// as exact lookup tables.  Nothing here is computed from first principles:
// requests outside the tabulated families raise OutOfTable.
//
// Curve classes are a*B1 + b*B2.  The two-point table covers b = 1 with
// a = 0, 1, 2 (all six families vanish for a > 2, and classes with a < 0
// are not effective); the one-point closed forms cover b = 0, a >= 1.

#include "sym2gw/hilb_ring.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace sym2gw {

struct OutOfTable : std::domain_error {
    explicit OutOfTable(const std::string& what) : std::domain_error(what) {}
};

namespace graber {

struct TwoPointRow {
    std::string name;
    hilb::HilbClass first;
    hilb::HilbClass second;
    std::array<Rational, 3> values;  // classes B2, B1 + B2, 2B1 + B2
};

inline const std::vector<TwoPointRow>& two_point_table() {
    static const std::vector<TwoPointRow> rows = [] {
        using hilb::HilbClass;
        using hilb::normal_form;
        HilbClass t2 = hilb::t2();
        HilbClass d = hilb::t2_minus_t1();
        HilbClass t2_2 = normal_form(0, 2), t2_3 = normal_form(0, 3), t2_4 = normal_form(0, 4);
        std::vector<TwoPointRow> t;
        t.push_back({"<T2^2, T2^4>", t2_2, t2_4, {Rational(3), Rational(12), Rational(3)}});
        t.push_back({"<T2^3, T2^3>", t2_3, t2_3, {Rational(9), Rational(27), Rational(9)}});
        t.push_back({"<(T2-T1)^2, T2^4>", d * d, t2_4, {Rational(3), Rational(-9), Rational(-6)}});
        t.push_back({"<T2^2(T2-T1), T2^2(T2-T1)>", t2_2 * d, t2_2 * d,
                     {Rational(4), Rational(-8), Rational(4)}});
        t.push_back({"<T2^4, T2(T2-T1)>", t2_4, t2 * d, {Rational(3), Rational(0), Rational(-3)}});
        // Every tabulated pair has total degree 6, the virtual dimension of
        // the two-point moduli at these classes.
        t.push_back({"<T2^3, T2^2(T2-T1)>", t2_3, t2_2 * d,
                     {Rational(1, 2), Rational(0), Rational(-1, 2)}});
        return t;
    }();
    return rows;
}

// <p1, p2> at class a*B1 + B2.  Exact row match (unordered) required.
inline Rational two_point(const hilb::HilbClass& p1, const hilb::HilbClass& p2, long a) {
    for (const auto& row : two_point_table()) {
        bool forward = (p1 == row.first && p2 == row.second);
        bool backward = (p1 == row.second && p2 == row.first);
        if (!forward && !backward) continue;
        if (a < 0 || a > 2) return Rational(0);
        return row.values[static_cast<std::size_t>(a)];
    }
    throw OutOfTable("two-point invariant (" + p1.str() + ", " + p2.str() + ") is not tabulated");
}

enum class OnePointFamily { kT2TimesD, kDSquared };  // T2(T2-T1) and (T2-T1)^2

// <phi>_{a B1} for the two one-point families, a >= 1: -6/a^2 and -9/a^2.
inline Rational one_point(OnePointFamily family, long a) {
    if (a < 1) throw OutOfTable("one-point invariants are tabulated for a >= 1 only");
    Rational a2(a * a);
    return (family == OnePointFamily::kT2TimesD ? Rational(-6) : Rational(-9)) / a2;
}

inline Rational one_point(const hilb::HilbClass& p, long a) {
    hilb::HilbClass d = hilb::t2_minus_t1();
    if (p == hilb::t2() * d) return one_point(OnePointFamily::kT2TimesD, a);
    if (p == d * d) return one_point(OnePointFamily::kDSquared, a);
    throw OutOfTable("one-point invariant (" + p.str() + ") is not tabulated");
}

// Dispatch on the curve class: b = 1 two-point rows, b = 0 one-point forms.
inline Rational value(const std::vector<hilb::HilbClass>& insertions, const hilb::CurveClass& c) {
    if (c.b == 1 && insertions.size() == 2) return two_point(insertions[0], insertions[1], c.a);
    if (c.b == 0 && insertions.size() == 1) return one_point(insertions[0], c.a);
    throw OutOfTable("no tabulated invariants for class " + std::to_string(c.a) + "B1+" +
                     std::to_string(c.b) + "B2 with " + std::to_string(insertions.size()) +
                     " insertions");
}

}  // namespace graber
}  // namespace sym2gw
