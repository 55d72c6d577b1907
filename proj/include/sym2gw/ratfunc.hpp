#pragma once

// Univariate polynomials and rational functions in q over Q(i), in the normal
// form: fraction gcd-reduced, denominator monic.  Structural equality of the
// normal form is then mathematical equality.

#include "sym2gw/gauss.hpp"
#include "sym2gw/laurent.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sym2gw {

class Poly {
public:
    Poly() = default;
    explicit Poly(const GaussRational& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    explicit Poly(std::vector<GaussRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly monomial(std::size_t deg, const GaussRational& c) {
        if (c.is_zero()) return Poly();
        std::vector<GaussRational> v(deg + 1);
        v[deg] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
    GaussRational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : GaussRational();
    }
    GaussRational leading() const { return coeffs_.empty() ? GaussRational() : coeffs_.back(); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<GaussRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<GaussRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
            for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[j + k] += a.coeffs_[j] * b.coeffs_[k];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const GaussRational& s) {
        Poly r(a);
        for (auto& c : r.coeffs_) c = c * s;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division: returns (quotient, remainder).
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            GaussRational f = r.leading() / b.leading();
            Poly t = monomial(shift, f);
            q = q + t;
            r = r - t * b;
        }
        return {q, r};
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a * (GaussRational(1) / a.leading());  // make monic
        return a;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<GaussRational> v(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * GaussRational(static_cast<long>(k));
        return Poly(std::move(v));
    }

    GaussRational eval(const GaussRational& q0) const {
        GaussRational acc;
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q0 + coeffs_[k];
        return acc;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        LaurentPoly p;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) p.set(static_cast<long>(k), coeffs_[k]);
        return p.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<GaussRational> coeffs_;  // coeffs_[k] multiplies q^k
};

class RatFunc {
public:
    RatFunc() : num_(), den_(GaussRational(1)) {}
    explicit RatFunc(const GaussRational& c) : num_(c), den_(GaussRational(1)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc q() { return RatFunc(Poly::monomial(1, GaussRational(1)), Poly(GaussRational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const GaussRational& s) {
        return RatFunc(a.num_ * s, a.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // d/dq, reduced.
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    GaussRational eval(const GaussRational& q0) const {
        GaussRational d = den_.eval(q0);
        if (d.is_zero()) throw PoleError("RatFunc: pole at q = " + q0.str());
        return num_.eval(q0) / d;
    }

    bool has_pole_at(const GaussRational& q0) const { return den_.eval(q0).is_zero(); }

    // First n coefficients of the power-series expansion at q = 0.
    // Requires den(0) != 0.
    std::vector<GaussRational> series(std::size_t n) const {
        GaussRational d0 = den_.coeff(0);
        if (d0.is_zero()) throw PoleError("RatFunc: series expansion at a pole");
        std::vector<GaussRational> c(n);
        for (std::size_t k = 0; k < n; ++k) {
            GaussRational acc = num_.coeff(k);
            for (std::size_t j = 1; j <= k; ++j) acc -= den_.coeff(j) * c[k - j];
            c[k] = acc / d0;
        }
        return c;
    }

    std::string str() const {
        if (num_.is_zero()) return "0";
        if (den_ == Poly(GaussRational(1))) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(GaussRational(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
        GaussRational lead = den_.leading();
        if (lead != GaussRational(1)) {
            GaussRational inv = GaussRational(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_;
    Poly den_;
};

}  // namespace sym2gw
