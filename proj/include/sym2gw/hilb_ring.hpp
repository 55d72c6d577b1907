#pragma once

// The Chow ring of the Hilbert scheme of two points in P^2,
//
//     Q[T1, T2] / (T1^3, T2^3 - 3 T1 T2^2 - 3 T1^2 T2),
//
// in the monomial basis [1, T1, T2, T1^2, T1T2, T2^2, T1^2T2, T1T2^2,
// T1^2T2^2] with Q(i) coefficients.  Curve classes are integer combinations
// a*B1 + b*B2 of the dual curves to T1, T2; the exceptional divisor of the
// contraction to the symmetric square is E = -2 T1 + 2 T2, so E pairs to
// zero exactly on the symmetric classes a = b.

#include "sym2gw/gauss.hpp"
#include "sym2gw/linalg.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>

namespace sym2gw::hilb {

inline constexpr int kDim = 9;

// (exponent of T1, exponent of T2) per basis slot.
inline constexpr std::array<std::pair<int, int>, kDim> kMonomials = {
    std::pair{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};

inline constexpr int degree(int i) {
    return kMonomials[static_cast<std::size_t>(i)].first + kMonomials[static_cast<std::size_t>(i)].second;
}

inline const std::array<std::string, kDim>& basis_names() {
    static const std::array<std::string, kDim> names = {
        "1", "T1", "T2", "T1^2", "T1*T2", "T2^2", "T1^2*T2", "T1*T2^2", "T1^2*T2^2"};
    return names;
}

inline int basis_index(int a, int b) {
    for (int i = 0; i < kDim; ++i)
        if (kMonomials[static_cast<std::size_t>(i)] == std::pair{a, b}) return i;
    return -1;
}

class HilbClass {
public:
    HilbClass() = default;

    static HilbClass basis(int i) {
        HilbClass x;
        x.c_[static_cast<std::size_t>(i)] = GaussRational(1);
        return x;
    }

    const GaussRational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    void set_coeff(int i, const GaussRational& v) { c_[static_cast<std::size_t>(i)] = v; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    HilbClass operator-() const {
        HilbClass r;
        for (std::size_t i = 0; i < kDim; ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend HilbClass operator+(const HilbClass& x, const HilbClass& y) {
        HilbClass r;
        for (std::size_t i = 0; i < kDim; ++i) r.c_[i] = x.c_[i] + y.c_[i];
        return r;
    }
    friend HilbClass operator-(const HilbClass& x, const HilbClass& y) { return x + (-y); }
    friend HilbClass operator*(const GaussRational& s, const HilbClass& x) {
        HilbClass r;
        for (std::size_t i = 0; i < kDim; ++i) r.c_[i] = s * x.c_[i];
        return r;
    }
    friend HilbClass operator*(const HilbClass& x, const HilbClass& y);
    friend bool operator==(const HilbClass& x, const HilbClass& y) { return x.c_ == y.c_; }
    friend bool operator!=(const HilbClass& x, const HilbClass& y) { return !(x == y); }

    std::string str() const {
        std::string out;
        for (int i = 0; i < kDim; ++i) {
            const GaussRational& v = c_[static_cast<std::size_t>(i)];
            if (v.is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (i == 0)
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

// Normal form of T1^a T2^b modulo the ideal: T1^3 dies, and
// T2^3 rewrites to 3 T1 T2^2 + 3 T1^2 T2.
inline HilbClass normal_form(int a, int b) {
    if (a >= 3) return HilbClass();
    if (b <= 2) {
        int i = basis_index(a, b);
        return i < 0 ? HilbClass() : HilbClass::basis(i);
    }
    HilbClass r = normal_form(a + 1, b - 1) + normal_form(a + 2, b - 2);
    return GaussRational(Rational(3)) * r;
}

inline HilbClass operator*(const HilbClass& x, const HilbClass& y) {
    HilbClass r;
    for (int i = 0; i < kDim; ++i) {
        if (x.c_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < kDim; ++j) {
            if (y.c_[static_cast<std::size_t>(j)].is_zero()) continue;
            auto [a1, b1] = kMonomials[static_cast<std::size_t>(i)];
            auto [a2, b2] = kMonomials[static_cast<std::size_t>(j)];
            GaussRational f = x.c_[static_cast<std::size_t>(i)] * y.c_[static_cast<std::size_t>(j)];
            r = r + f * normal_form(a1 + a2, b1 + b2);
        }
    }
    return r;
}

// Fixed so that T2^4 (= 12 T1^2 T2^2 in normal form) integrates to 3.
inline GaussRational integrate(const HilbClass& x) {
    return x.coeff(kDim - 1) * GaussRational(Rational(1, 4));
}

inline GaussRational pairing(const HilbClass& x, const HilbClass& y) { return integrate(x * y); }

inline DenseMatrix<GaussRational> pairing_matrix() {
    DenseMatrix<GaussRational> m(kDim, std::vector<GaussRational>(kDim));
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                pairing(HilbClass::basis(i), HilbClass::basis(j));
    return m;
}

// T2 and i(T2 - T1): the images of the orbifold generators.
inline HilbClass t2() { return HilbClass::basis(2); }
inline HilbClass t2_minus_t1() { return HilbClass::basis(2) - HilbClass::basis(1); }

// a*B1 + b*B2 with T_i . B_j the identity pairing.
struct CurveClass {
    long a = 0;
    long b = 0;

    long intersect_t1() const { return a; }
    long intersect_t2() const { return b; }
    long intersect_exceptional() const { return -2 * a + 2 * b; }  // E = -2T1 + 2T2
    bool symmetric() const { return a == b; }
};

}  // namespace sym2gw::hilb
