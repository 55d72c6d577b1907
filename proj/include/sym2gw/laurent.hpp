#pragma once

// Laurent polynomials in the quantum parameter q over Q(i).  Zero
// coefficients are never stored, so structural equality is equality.

#include "sym2gw/gauss.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sym2gw {

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const GaussRational& c) { set(0, c); }

    static LaurentPoly monomial(long exp, const GaussRational& c) {
        LaurentPoly p;
        p.set(exp, c);
        return p;
    }

    void set(long exp, const GaussRational& c) {
        if (c.is_zero())
            coeffs_.erase(exp);
        else
            coeffs_[exp] = c;
    }

    GaussRational coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? GaussRational() : it->second;
    }

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    long max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    const std::map<long, GaussRational>& terms() const { return coeffs_; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) + c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) - c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) {
        LaurentPoly r;
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
        coeffs_ = std::move(r.coeffs_);
        return *this;
    }
    LaurentPoly& operator*=(const GaussRational& s) {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.set(e, c * s);
        coeffs_ = std::move(r.coeffs_);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const GaussRational& s) { return a *= s; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    GaussRational eval(const GaussRational& q0) const {
        if (q0.is_zero() && !coeffs_.empty() && min_exp() < 0)
            throw PoleError("LaurentPoly: evaluation at q = 0 with negative exponents");
        GaussRational acc;
        for (const auto& [e, c] : coeffs_) {
            if (e >= 0) {
                acc += c * pow_gauss(q0, static_cast<unsigned long>(e));
            } else {
                acc += c / pow_gauss(q0, static_cast<unsigned long>(-e));
            }
        }
        return acc;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            std::string cs = c.str();
            bool wrap = !c.is_real() && !c.re().is_zero();
            if (!first) {
                if (!wrap && cs.size() && cs[0] == '-') {
                    os << " - ";
                    cs = cs.substr(1);
                } else {
                    os << " + ";
                }
            }
            first = false;
            std::string body = wrap ? "(" + cs + ")" : cs;
            if (e == 0) {
                os << body;
            } else {
                if (body == "1")
                    ;
                else if (body == "-1")
                    os << "-";
                else
                    os << body << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    std::map<long, GaussRational> coeffs_;
};

}  // namespace sym2gw
