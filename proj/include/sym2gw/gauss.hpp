#pragma once

// Gaussian rationals Q(i): the only field extension of Q needed anywhere in
// this project.  Serialized as "p/q+r/s*i" (real part omitted when zero,
// imaginary part omitted when zero).

#include "sym2gw/rational.hpp"

#include <stdexcept>
#include <string>

namespace sym2gw {

class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long n) : re_(n) {}
    GaussRational(const Rational& re) : re_(re) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }
    GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRational& operator*=(const GaussRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        Rational n = o.norm();
        if (n.is_zero()) throw std::domain_error("GaussRational: division by zero");
        GaussRational num = *this * o.conj();
        re_ = num.re_ / n;
        im_ = num.im_ / n;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string im_part = (im_ == Rational(1))    ? "i"
                              : (im_ == Rational(-1)) ? "-i"
                                                      : im_.str() + "*i";
        if (re_.is_zero()) return im_part;
        if (im_.sign() > 0) return re_.str() + "+" + im_part;
        return re_.str() + im_part;
    }

private:
    Rational re_;
    Rational im_;
};

inline GaussRational pow_gauss(const GaussRational& base, unsigned long e) {
    GaussRational r(1);
    for (unsigned long k = 0; k < e; ++k) r *= base;
    return r;
}

}  // namespace sym2gw
