#pragma once

// The orbifold Chow ring of the stack symmetric square of P^2.
//
// Basis, in fixed order (all serialized indices refer to it):
//
//   index   0    1     2     3    4     5     6     7     8
//   class   1    a     a^2   b    a^3   a^4   g0    g1    g2
//   degree  0    1     2     2    3     4     1     2     3
//
// Indices 0..5 span the untwisted sector, identified with the S_2-invariant
// subring of Q[h1,h2]/(h1^3, h2^3) via a -> h1+h2, b -> h1*h2.  Indices 6..8
// span the twisted sector, a copy of the Chow group of P^2 shifted up by age
// one (g0 the fundamental class, g1 a line, g2 a point).
//
// The structure constants are derived here, once, from that presentation:
//   * untwisted x untwisted: multiply in Q[h1,h2]/(h1^3,h2^3) and convert
//     back on the invariant subspace;
//   * untwisted x twisted: restrict the untwisted factor to the diagonal
//     (h1, h2 -> h) and multiply in Q[h]/(h^3);
//   * twisted x twisted: push forward along the diagonal, whose class in the
//     double cover is h1^2 + h1*h2 + h2^2.
// A hard-coded golden copy of the resulting tables lives in the tests.
//
// Integration takes the value 3 on a^4 and zero on every other basis class;
// the Poincare pairing is (x, y) = integrate(x * y), which carries the
// factor 1/2 on the twisted sector through the structure constants.

#include "sym2gw/gauss.hpp"
#include "sym2gw/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace sym2gw::orb {

inline constexpr int kDim = 9;
inline constexpr int kOne = 0;
inline constexpr int kAlpha = 1;
inline constexpr int kAlpha2 = 2;
inline constexpr int kBeta = 3;
inline constexpr int kAlpha3 = 4;
inline constexpr int kAlpha4 = 5;
inline constexpr int kGamma0 = 6;
inline constexpr int kGamma1 = 7;
inline constexpr int kGamma2 = 8;

inline constexpr std::array<int, kDim> kDegree = {0, 1, 2, 2, 3, 4, 1, 2, 3};

inline constexpr bool is_twisted(int i) { return i >= kGamma0; }
inline constexpr int degree(int i) { return kDegree[static_cast<std::size_t>(i)]; }

inline const std::array<std::string, kDim>& basis_names() {
    static const std::array<std::string, kDim> names = {"1",   "a",  "a^2", "b", "a^3",
                                                        "a^4", "g0", "g1",  "g2"};
    return names;
}

// Elements of Q[h1,h2]/(h1^3, h2^3), used only to derive structure constants
// and exposed for the pullback checks in the tests.
struct BiPoly {
    std::array<std::array<Rational, 3>, 3> c{};  // c[i][j] * h1^i h2^j

    static BiPoly h(int which) {
        BiPoly p;
        if (which == 1)
            p.c[1][0] = Rational(1);
        else
            p.c[0][1] = Rational(1);
        return p;
    }
    static BiPoly one() {
        BiPoly p;
        p.c[0][0] = Rational(1);
        return p;
    }
    BiPoly operator*(const BiPoly& o) const {
        BiPoly r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k + i < 3; ++k)
                    for (int l = 0; l + j < 3; ++l) r.c[i + k][j + l] += c[i][j] * o.c[k][l];
        return r;
    }
    BiPoly operator+(const BiPoly& o) const {
        BiPoly r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.c[i][j] = c[i][j] + o.c[i][j];
        return r;
    }
    bool symmetric() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (c[i][j] != c[j][i]) return false;
        return true;
    }
    bool operator==(const BiPoly& o) const { return c == o.c; }
};

using Coords = std::array<Rational, kDim>;

namespace detail {

// Pullback of the untwisted basis classes to the double cover.
inline const std::array<BiPoly, 6>& untwisted_pullbacks() {
    static const std::array<BiPoly, 6> table = [] {
        BiPoly a = BiPoly::h(1) + BiPoly::h(2);
        BiPoly b = BiPoly::h(1) * BiPoly::h(2);
        return std::array<BiPoly, 6>{BiPoly::one(), a, a * a, b, a * a * a, a * a * a * a};
    }();
    return table;
}

// Inverse of the pullback on the invariant subspace.  The symmetric monomial
// sums in each degree are 1; h1+h2; h1^2+h2^2, h1h2; h1^2h2+h1h2^2; h1^2h2^2,
// and the basis classes hit them as a^2 = (h1^2+h2^2) + 2 h1h2,
// a^3 = 3 (h1^2h2 + h1h2^2), a^4 = 6 h1^2h2^2.
inline Coords untwisted_from_bipoly(const BiPoly& p) {
    Coords x{};
    x[kOne] = p.c[0][0];
    x[kAlpha] = p.c[1][0];
    Rational u = p.c[2][0];
    x[kAlpha2] = u;
    x[kBeta] = p.c[1][1] - Rational(2) * u;
    x[kAlpha3] = p.c[2][1] / Rational(3);
    x[kAlpha4] = p.c[2][2] / Rational(6);
    return x;
}

// Restriction of an untwisted class to the coarse diagonal, in Q[h]/(h^3).
inline std::array<Rational, 3> restrict_to_diagonal(const BiPoly& p) {
    std::array<Rational, 3> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3) r[i + j] += p.c[i][j];
    return r;
}

// Pushforward of h^m along the diagonal embedding, m = 0, 1, 2.
inline BiPoly diagonal_pushforward(int m) {
    BiPoly diag;
    diag.c[2][0] = Rational(1);
    diag.c[1][1] = Rational(1);
    diag.c[0][2] = Rational(1);
    BiPoly r = diag;
    for (int k = 0; k < m; ++k) r = r * BiPoly::h(1);
    return r;
}

inline Coords derive_product(int i, int j) {
    Coords x{};
    if (!is_twisted(i) && !is_twisted(j)) {
        x = untwisted_from_bipoly(untwisted_pullbacks()[static_cast<std::size_t>(i)] *
                                  untwisted_pullbacks()[static_cast<std::size_t>(j)]);
    } else if (is_twisted(i) != is_twisted(j)) {
        int u = is_twisted(i) ? j : i;
        int t = is_twisted(i) ? i : j;
        auto rest = restrict_to_diagonal(untwisted_pullbacks()[static_cast<std::size_t>(u)]);
        for (int k = 0; k < 3; ++k) {
            int target = k + (t - kGamma0);
            if (target <= 2) x[static_cast<std::size_t>(kGamma0 + target)] += rest[static_cast<std::size_t>(k)];
        }
    } else {
        int m = (i - kGamma0) + (j - kGamma0);
        if (m <= 2) x = untwisted_from_bipoly(diagonal_pushforward(m));
    }
    return x;
}

}  // namespace detail

// Frozen 9 x 9 table of structure constants, basis_i * basis_j in coordinates.
inline const std::array<std::array<Coords, kDim>, kDim>& structure_constants() {
    static const std::array<std::array<Coords, kDim>, kDim> table = [] {
        std::array<std::array<Coords, kDim>, kDim> t{};
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = detail::derive_product(i, j);
        return t;
    }();
    return table;
}

// integrate(basis_i * basis_j * basis_k), the degree-zero three-point values.
inline Rational triple_integral(int i, int j, int k) {
    const Coords& ij = structure_constants()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Rational acc;
    for (int m = 0; m < kDim; ++m) {
        if (ij[static_cast<std::size_t>(m)].is_zero()) continue;
        const Coords& mk = structure_constants()[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
        acc += ij[static_cast<std::size_t>(m)] * mk[kAlpha4];
    }
    return acc * Rational(3);
}

inline Rational pairing_rational(int i, int j) {
    return structure_constants()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][kAlpha4] * Rational(3);
}

// A class in the orbifold Chow ring with Q(i) coefficients.
class OrbClass {
public:
    OrbClass() = default;

    static OrbClass basis(int i) {
        OrbClass x;
        x.c_[static_cast<std::size_t>(i)] = GaussRational(1);
        return x;
    }
    static OrbClass zero() { return OrbClass(); }

    // a^p * g0^q as a class.
    static OrbClass monomial(int p, int q) {
        OrbClass x = basis(kOne);
        for (int k = 0; k < p; ++k) x = x * basis(kAlpha);
        for (int k = 0; k < q; ++k) x = x * basis(kGamma0);
        return x;
    }

    const GaussRational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    void set_coeff(int i, const GaussRational& v) { c_[static_cast<std::size_t>(i)] = v; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    // -1 for the zero class, otherwise the common degree if the class is
    // homogeneous, -2 if mixed.
    int pure_degree() const {
        int deg = -1;
        for (int i = 0; i < kDim; ++i) {
            if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
            if (deg == -1)
                deg = degree(i);
            else if (deg != degree(i))
                return -2;
        }
        return deg;
    }

    OrbClass operator-() const {
        OrbClass r;
        for (std::size_t i = 0; i < kDim; ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend OrbClass operator+(const OrbClass& x, const OrbClass& y) {
        OrbClass r;
        for (std::size_t i = 0; i < kDim; ++i) r.c_[i] = x.c_[i] + y.c_[i];
        return r;
    }
    friend OrbClass operator-(const OrbClass& x, const OrbClass& y) { return x + (-y); }
    friend OrbClass operator*(const GaussRational& s, const OrbClass& x) {
        OrbClass r;
        for (std::size_t i = 0; i < kDim; ++i) r.c_[i] = s * x.c_[i];
        return r;
    }
    friend OrbClass operator*(const OrbClass& x, const OrbClass& y) {
        OrbClass r;
        const auto& sc = structure_constants();
        for (int i = 0; i < kDim; ++i) {
            if (x.c_[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; j < kDim; ++j) {
                if (y.c_[static_cast<std::size_t>(j)].is_zero()) continue;
                GaussRational f = x.c_[static_cast<std::size_t>(i)] * y.c_[static_cast<std::size_t>(j)];
                const Coords& p = sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (int m = 0; m < kDim; ++m)
                    if (!p[static_cast<std::size_t>(m)].is_zero())
                        r.c_[static_cast<std::size_t>(m)] += f * GaussRational(p[static_cast<std::size_t>(m)]);
            }
        }
        return r;
    }
    friend bool operator==(const OrbClass& x, const OrbClass& y) { return x.c_ == y.c_; }
    friend bool operator!=(const OrbClass& x, const OrbClass& y) { return !(x == y); }

    std::string str() const {
        std::string out;
        for (int i = 0; i < kDim; ++i) {
            const GaussRational& v = c_[static_cast<std::size_t>(i)];
            if (v.is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (i == kOne)
                out += v.str();
            else if (v == GaussRational(1))
                out += basis_names()[static_cast<std::size_t>(i)];
            else
                out += "(" + v.str() + ")*" + basis_names()[static_cast<std::size_t>(i)];
        }
        return out.empty() ? "0" : out;
    }

private:
    std::array<GaussRational, kDim> c_{};
};

inline GaussRational integrate(const OrbClass& x) { return x.coeff(kAlpha4) * GaussRational(Rational(3)); }

inline GaussRational pairing(const OrbClass& x, const OrbClass& y) { return integrate(x * y); }

// Pullback of the untwisted part to the double cover; twisted coefficients
// are ignored.  Test hook for the presentation-level identities.
inline BiPoly untwisted_pullback_of(const Coords& x) {
    BiPoly acc;
    for (int i = 0; i < 6; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        const BiPoly& p = detail::untwisted_pullbacks()[static_cast<std::size_t>(i)];
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) acc.c[a][b] += x[static_cast<std::size_t>(i)] * p.c[a][b];
    }
    return acc;
}

struct RelationReport {
    bool ok = true;
    std::vector<std::string> failures;

    void check(bool cond, const std::string& name) {
        if (!cond) {
            ok = false;
            failures.push_back(name);
        }
    }
};

// R1 = 2 a^3 - 3 a g^2 and R2 = 3 a^2 g - 4 g^3 generate the relation ideal;
// g^4 = a^4 / 2 and the vanishing of everything in degree 5 follow.
inline RelationReport verify_ring_relations() {
    RelationReport report;
    OrbClass a = OrbClass::basis(kAlpha);
    OrbClass g = OrbClass::basis(kGamma0);
    OrbClass a2 = a * a, a3 = a2 * a, a4 = a3 * a;
    OrbClass g2 = g * g, g3 = g2 * g, g4 = g3 * g;

    OrbClass r1 = GaussRational(Rational(2)) * a3 - GaussRational(Rational(3)) * (a * g2);
    OrbClass r2 = GaussRational(Rational(3)) * (a2 * g) - GaussRational(Rational(4)) * g3;
    report.check(r1.is_zero(), "R1 = 2a^3 - 3a*g^2");
    report.check(r2.is_zero(), "R2 = 3a^2*g - 4g^3");
    report.check((g4 - GaussRational(Rational(1, 2)) * a4).is_zero(), "g^4 = a^4/2");
    report.check((a4 * a).is_zero(), "a^5 = 0");
    report.check((a4 * g).is_zero(), "a^4*g = 0");
    return report;
}

}  // namespace sym2gw::orb
