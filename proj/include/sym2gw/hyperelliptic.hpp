#pragma once

// End-to-end hyperelliptic plane-curve counting: J(d, g) is the invariant
// with 3d + 1 point-incidence insertions and 2g + 2 fundamental twisted
// insertions; inverting the conversion matrix turns the J column into the
// expected counts E(d, *).

#include "sym2gw/partitions.hpp"
#include "sym2gw/wdvv.hpp"

#include <vector>

namespace sym2gw {

// Class of the cycle of point pairs containing a fixed point: a^2 - 2b.
// (Its pullback to the double cover is h1^2 + h2^2.)
inline orb::OrbClass incidence_class() {
    return orb::OrbClass::basis(orb::kAlpha2) -
           GaussRational(Rational(2)) * orb::OrbClass::basis(orb::kBeta);
}

struct CountRow {
    int g = 0;
    Rational j;
    Rational e;
    bool e_integral = false;
    bool e_nonnegative = false;
};

struct CountTable {
    int d = 0;
    std::vector<CountRow> rows;
};

inline Rational hyperelliptic_j(WdvvEngine& engine, int d, int g) {
    InvariantQuery query;
    query.d = d;
    for (int k = 0; k < 3 * d + 1; ++k) query.insertions.push_back(incidence_class());
    for (int k = 0; k < 2 * g + 2; ++k)
        query.insertions.push_back(orb::OrbClass::basis(orb::kGamma0));
    GaussRational v = engine.value(query);
    if (!v.is_real()) throw std::logic_error("hyperelliptic_j: non-real invariant value");
    return v.re();
}

// E values are reported with integrality/positivity diagnostics rather than
// asserted: a violation should surface, not crash.
inline CountTable count_hyperelliptic(WdvvEngine& engine, int d, int max_genus) {
    if (d < 1) throw std::invalid_argument("count_hyperelliptic: degree must be >= 1");
    if (max_genus < 0) throw std::invalid_argument("count_hyperelliptic: max genus must be >= 0");
    CountTable table;
    table.d = d;
    std::vector<Rational> j(static_cast<std::size_t>(max_genus + 1));
    for (int g = 0; g <= max_genus; ++g) j[static_cast<std::size_t>(g)] = hyperelliptic_j(engine, d, g);
    ConversionMatrix m(max_genus);
    std::vector<Rational> e = m.e_from_j(j);
    for (int g = 0; g <= max_genus; ++g) {
        CountRow row;
        row.g = g;
        row.j = j[static_cast<std::size_t>(g)];
        row.e = e[static_cast<std::size_t>(g)];
        row.e_integral = row.e.is_integer();
        row.e_nonnegative = row.e.sign() >= 0;
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace sym2gw
