#pragma once

// Canonical invariant identifiers and the closed-form initial data.
//
// An InvariantKey is a curve degree d together with a sorted multiset of
// basis indices into the orbifold Chow basis.  Values attach to keys through
// the bracket with 2g+2 twisted insertions; the (d, g)-bracket convention is
// translated into this one by convert_notation and never stored.
//
// Admissibility:
//   * the number of twisted insertions is even (2g + 2 for some g >= -1);
//   * sum of orbifold degrees equals 3d + 1 + n  (n = number of insertions).
// Everything failing either test vanishes.
//
// Degree-zero brackets with fewer than three insertions are *unstable*: they
// are absent, not zero, and consumers must skip them.

#include "sym2gw/orb_ring.hpp"
#include "sym2gw/special.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sym2gw {

struct InvariantKey {
    int d = 0;
    std::vector<int> idx;  // sorted basis indices

    static InvariantKey make(int d, std::vector<int> insertions) {
        std::sort(insertions.begin(), insertions.end());
        return InvariantKey{d, std::move(insertions)};
    }

    int n() const { return static_cast<int>(idx.size()); }

    int twisted_count() const {
        int t = 0;
        for (int i : idx) t += orb::is_twisted(i) ? 1 : 0;
        return t;
    }

    int degree_sum() const {
        int s = 0;
        for (int i : idx) s += orb::degree(i);
        return s;
    }

    bool contains(int basis) const {
        return std::find(idx.begin(), idx.end(), basis) != idx.end();
    }

    InvariantKey without_one(int basis) const {
        InvariantKey k{d, idx};
        auto it = std::find(k.idx.begin(), k.idx.end(), basis);
        k.idx.erase(it);
        return k;
    }

    // Serialized as "d|i1,i2,...,ik".
    std::string str() const {
        std::ostringstream os;
        os << d << "|";
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (j) os << ",";
            os << idx[j];
        }
        return os.str();
    }

    static InvariantKey parse(const std::string& s) {
        auto bar = s.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("InvariantKey: missing '|'");
        InvariantKey k;
        k.d = std::stoi(s.substr(0, bar));
        std::string rest = s.substr(bar + 1);
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) continue;
            int i = std::stoi(tok);
            if (i < 0 || i >= orb::kDim) throw std::invalid_argument("InvariantKey: bad index");
            k.idx.push_back(i);
        }
        if (!std::is_sorted(k.idx.begin(), k.idx.end()))
            throw std::invalid_argument("InvariantKey: indices not sorted");
        return k;
    }

    friend bool operator==(const InvariantKey& a, const InvariantKey& b) {
        return a.d == b.d && a.idx == b.idx;
    }
    friend bool operator<(const InvariantKey& a, const InvariantKey& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.idx.size() != b.idx.size()) return a.idx.size() < b.idx.size();
        return a.idx < b.idx;
    }
};

inline bool parity_admissible(const InvariantKey& k) { return k.twisted_count() % 2 == 0; }

inline bool dimension_admissible(const InvariantKey& k) {
    return parity_admissible(k) && k.degree_sum() == 3 * k.d + 1 + k.n();
}

inline bool is_unstable(const InvariantKey& k) { return k.d == 0 && k.n() < 3; }

// The integral over the hyperelliptic locus of lambda_g lambda_{g-1}:
// (-1)^{g-1} (2^{2g} - 1) B_{2g} / (2g).
inline Rational fp_hodge_integral(unsigned long g) {
    if (g < 1) throw std::invalid_argument("fp_hodge_integral: g >= 1 required");
    Rational v = Rational(pow_int(2, 2 * g) - 1) * bernoulli(2 * g) / Rational(Integer(2 * g));
    return (g % 2 == 1) ? v : -v;
}

// Degree-zero all-twisted bracket <g1, g0^(2g+1)>_0 = (-1)^g (2^{2g}-1) 3 B_{2g} / (2g).
inline Rational degree_zero_twisted_value(unsigned long g) {
    return Rational(-3) * fp_hodge_integral(g);
}

enum class BaseKind { kValue, kUnstable, kNotBase };

struct BaseResult {
    BaseKind kind;
    Rational value;

    static BaseResult of(Rational v) { return {BaseKind::kValue, std::move(v)}; }
    static BaseResult unstable() { return {BaseKind::kUnstable, Rational()}; }
    static BaseResult not_base() { return {BaseKind::kNotBase, Rational()}; }
};

// Resolve a key by the axioms and the closed-form initial data alone:
//   unit and divisor axioms, degree-0 three-point integrals, the degree-0
//   vanishing lemma and twisted closed form, and the degree-1 two-point
//   table.  Anything that genuinely needs reconstruction returns kNotBase.
inline BaseResult base_value(const InvariantKey& key) {
    const int n = key.n();
    if (is_unstable(key)) return BaseResult::unstable();
    if (!dimension_admissible(key)) return BaseResult::of(Rational(0));

    if (key.d == 0 && n == 3)
        return BaseResult::of(orb::triple_integral(key.idx[0], key.idx[1], key.idx[2]));

    if (key.contains(orb::kOne)) return BaseResult::of(Rational(0));

    if (key.d == 0) {
        // n >= 4 here.  Any untwisted insertion kills the bracket; the
        // admissible all-twisted keys are exactly {g1, g0^(2g+1)}.
        for (int i : key.idx)
            if (!orb::is_twisted(i)) return BaseResult::of(Rational(0));
        int g1s = static_cast<int>(std::count(key.idx.begin(), key.idx.end(), orb::kGamma1));
        int g0s = static_cast<int>(std::count(key.idx.begin(), key.idx.end(), orb::kGamma0));
        if (g1s == 1 && g0s == n - 1) {
            unsigned long g = static_cast<unsigned long>(n - 2) / 2;
            return BaseResult::of(degree_zero_twisted_value(g));
        }
        return BaseResult::of(Rational(0));
    }

    if (key.contains(orb::kAlpha)) {
        BaseResult rest = base_value(key.without_one(orb::kAlpha));
        if (rest.kind != BaseKind::kValue) return rest;
        return BaseResult::of(Rational(key.d) * rest.value);
    }

    if (key.d == 1 && n == 2) {
        const int i = key.idx[0], j = key.idx[1];
        if (i == orb::kAlpha2 && j == orb::kAlpha4) return BaseResult::of(Rational(6));
        if (i == orb::kBeta && j == orb::kAlpha4) return BaseResult::of(Rational(0));
        if (i == orb::kAlpha3 && j == orb::kAlpha3) return BaseResult::of(Rational(9));
        if (i == orb::kGamma2 && j == orb::kGamma2) return BaseResult::of(Rational(1));
        return BaseResult::of(Rational(0));  // no other admissible two-point shapes exist
    }

    return BaseResult::not_base();
}

// A bracket whose insertions are arbitrary classes; its value is the
// multilinear extension over keys.
struct InvariantQuery {
    int d = 0;
    std::vector<orb::OrbClass> insertions;

    struct Term {
        GaussRational coeff;
        InvariantKey key;
    };

    std::vector<Term> expand() const {
        std::vector<Term> out;
        std::vector<int> choice(insertions.size());
        expand_rec(0, GaussRational(1), choice, out);
        return out;
    }

private:
    void expand_rec(std::size_t slot, const GaussRational& coeff, std::vector<int>& choice,
                    std::vector<Term>& out) const {
        if (coeff.is_zero()) return;
        if (slot == insertions.size()) {
            out.push_back(Term{coeff, InvariantKey::make(d, choice)});
            return;
        }
        for (int i = 0; i < orb::kDim; ++i) {
            const GaussRational& c = insertions[slot].coeff(i);
            if (c.is_zero()) continue;
            choice[slot] = i;
            expand_rec(slot + 1, coeff * c, choice, out);
        }
    }
};

// Translate a (d, h)-bracket into the canonical convention: append 2(h - g)
// fundamental twisted classes, where 2g + 2 is the twisted insertion count;
// for h < g the bracket is identically zero.
inline std::optional<InvariantKey> convert_notation(int d, int h, std::vector<int> insertions) {
    int t = 0;
    for (int i : insertions) t += orb::is_twisted(i) ? 1 : 0;
    if (t % 2 != 0)
        throw std::invalid_argument("convert_notation: odd twisted insertion count");
    int g = (t - 2) / 2;
    if (h < g) return std::nullopt;
    for (int k = 0; k < 2 * (h - g); ++k) insertions.push_back(orb::kGamma0);
    return InvariantKey::make(d, std::move(insertions));
}

}  // namespace sym2gw
