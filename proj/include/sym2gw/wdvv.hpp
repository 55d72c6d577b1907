#pragma once

// Reconstruction of all admissible genus-zero invariants from the initial
// data via the WDVV associativity relations.
//
// Invariants are organized into levels (d, n): curve degree and insertion
// count.  The unknowns of a level are the admissible keys with no unit and
// no divisor insertion (those reduce by the axioms).  For four distinguished
// basis classes and an extra insertion multiset S with |S| = n - 3, the
// quadratic associativity identity
//
//   sum over S1 + S2 = S, d1 + d2 = d, i of
//       <x, y, S1, xi_i>_{d1} * <dual(xi_i), z, w, S2>_{d2}
//
// is symmetric under exchanging y and z.  Writing that symmetry out, every
// product has at most one factor at the current level (the other is then a
// degree-zero three-point integral), so each identity is a *linear* relation
// among the level's unknowns with a constant folded from already-known lower
// invariants.  Enumerating these relations over all slot tuples and
// grading-compatible S and solving the resulting exact linear system
// determines the level; a level left underdetermined is reported as such,
// never guessed.
//
// Determinism: fixed enumeration order everywhere, pivoting on the first
// nonzero coefficient in key order, so two runs produce identical stores.

#include "sym2gw/gw_base.hpp"
#include "sym2gw/linalg.hpp"
#include "sym2gw/store.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sym2gw {

// Duals of the nine basis classes under the Poincare pairing, as rational
// coordinate vectors.  Twisted duals carry a factor 2 relative to the naive
// pairing partner because of the 1/2 in the twisted pairing.
inline const std::array<orb::Coords, orb::kDim>& dual_basis() {
    static const std::array<orb::Coords, orb::kDim> duals = [] {
        DenseMatrix<Rational> p(orb::kDim, std::vector<Rational>(orb::kDim));
        for (int i = 0; i < orb::kDim; ++i)
            for (int j = 0; j < orb::kDim; ++j)
                p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = orb::pairing_rational(i, j);
        auto inv = dense_inverse(p);
        if (!inv) throw std::logic_error("orbifold Poincare pairing is degenerate");
        std::array<orb::Coords, orb::kDim> out{};
        for (int i = 0; i < orb::kDim; ++i)
            for (int j = 0; j < orb::kDim; ++j)
                out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (*inv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return out;
    }();
    return duals;
}

struct WdvvRelation {
    std::string label;
    std::map<InvariantKey, Rational> unknowns;
    Rational constant;

    bool trivial() const { return unknowns.empty() && constant.is_zero(); }
};

struct Underdetermined : std::runtime_error {
    std::vector<InvariantKey> free_keys;
    Underdetermined(std::string what, std::vector<InvariantKey> keys)
        : std::runtime_error(std::move(what)), free_keys(std::move(keys)) {}
};

struct UnknownLowerInvariant : std::logic_error {
    explicit UnknownLowerInvariant(const std::string& key)
        : std::logic_error("WDVV scheduling bug: lower invariant not yet computed: " + key) {}
};

struct UnstableBracket : std::domain_error {
    explicit UnstableBracket(const std::string& key)
        : std::domain_error("unstable bracket (degree 0, fewer than 3 insertions): " + key) {}
};

class WdvvEngine {
public:
    explicit WdvvEngine(InvariantStore& store) : store_(store) {}

    InvariantStore& store() { return store_; }

    // Full resolution: axioms, base cases, then level-by-level WDVV solves.
    Rational value(const InvariantKey& key) {
        if (is_unstable(key)) throw UnstableBracket(key.str());
        BaseResult base = base_value(key);
        if (base.kind == BaseKind::kValue) return base.value;
        if (key.contains(orb::kAlpha))
            return Rational(key.d) * value(key.without_one(orb::kAlpha));
        ensure_level(key.d, key.n());
        auto v = store_.lookup(key);
        if (!v) throw UnknownLowerInvariant(key.str());
        return *v;
    }

    GaussRational value(const InvariantQuery& query) {
        GaussRational acc;
        for (const auto& term : query.expand()) acc += term.coeff * GaussRational(value(term.key));
        return acc;
    }

    bool level_solved(int d, int n) const { return solved_.count({d, n}) > 0; }

    // Admissible unit- and divisor-free keys at level (d, n), sorted.
    static std::vector<InvariantKey> level_keys(int d, int n) {
        std::vector<InvariantKey> keys;
        std::vector<int> cur;
        enumerate_multisets(orb::kAlpha2, n, 3 * d + 1 + n, cur, [&](const std::vector<int>& idx) {
            InvariantKey k{d, idx};
            if (parity_admissible(k)) keys.push_back(std::move(k));
        });
        return keys;
    }

    // Solve every level needed for (d, n), then (d, n) itself.
    void ensure_level(int d, int n) {
        if (d <= 0 || n < 3) return;
        if (solved_.count({d, n})) return;
        bool all_cached = true;
        for (const auto& k : level_keys(d, n))
            if (!store_.contains(k)) {
                all_cached = false;
                break;
            }
        if (all_cached) {
            solved_.insert({d, n});
            return;
        }
        if (solving_.count({d, n}))
            throw std::logic_error("WDVV level dependency cycle at (" + std::to_string(d) + ", " +
                                   std::to_string(n) + ")");
        solving_.insert({d, n});
        for (int dd = 1; dd < d; ++dd)
            for (int nn = 3; nn <= n; ++nn) ensure_level(dd, nn);
        for (int nn = 3; nn < n; ++nn) ensure_level(d, nn);
        solve_level(d, n);
        solving_.erase({d, n});
        solved_.insert({d, n});
    }

    // The relation of the identity F(a,b|c,e) - F(a,c|b,e) over the extra
    // multiset S at degree d.  With with_unknowns = false every bracket is
    // resolved to a value (the level must be solved) and the residual lands
    // in the constant.
    WdvvRelation build_relation(int a, int b, int c, int e, const std::vector<int>& extra, int d,
                                bool with_unknowns) {
        ResolveMemo memo;
        return build_relation_impl(a, b, c, e, extra, d, with_unknowns, memo);
    }

    // Deterministic enumeration of the relations used at level (d, n).  The
    // callback returns false to stop early.  Returns the number visited.
    std::size_t enumerate_relations(int d, int n,
                                    const std::function<bool(WdvvRelation&&)>& visit,
                                    bool with_unknowns) {
        std::size_t count = 0;
        bool stop = false;
        const int target = 3 * d + 1 + n;
        ResolveMemo memo;  // brackets recur across relations; resolve each once
        std::vector<int> tuple;
        enumerate_tuples(orb::kAlpha, 4, tuple, [&](const std::vector<int>& t) {
            if (stop) return;
            std::vector<int> extra;
            enumerate_tuples(orb::kAlpha2, n - 3, extra, [&](const std::vector<int>& s) {
                if (stop) return;
                int tw = 0, degs = 0;
                for (int x : t) tw += orb::is_twisted(x) ? 1 : 0;
                for (int x : s) {
                    tw += orb::is_twisted(x) ? 1 : 0;
                    degs += orb::degree(x);
                }
                if (tw % 2 != 0) return;
                if (!has_top_shape(t, s, degs, d, target)) return;
                // The three pair partitions of the four slots; adjacent
                // differences span all associativity constraints here.
                auto part = [&](int i, int j, int k, int l) {
                    return canonical_partition(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)],
                                               t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(l)]);
                };
                auto p1 = part(0, 1, 2, 3), p2 = part(0, 2, 1, 3), p3 = part(0, 3, 1, 2);
                if (p1 != p2) {
                    ++count;
                    if (!visit(build_relation_impl(t[0], t[1], t[2], t[3], s, d, with_unknowns, memo))) {
                        stop = true;
                        return;
                    }
                }
                if (p2 != p3) {
                    ++count;
                    if (!visit(build_relation_impl(t[0], t[2], t[3], t[1], s, d, with_unknowns, memo))) {
                        stop = true;
                        return;
                    }
                }
            });
        });
        return count;
    }

    // Re-enumerates the relations of a solved level with every bracket
    // resolved to its final value and checks that each one sums to exactly
    // zero.  Returns the number of relations checked.
    std::size_t verify_level_residuals(int d, int n) {
        if (!level_solved(d, n)) ensure_level(d, n);
        std::size_t checked = 0;
        enumerate_relations(
            d, n,
            [&](WdvvRelation&& rel) {
                if (!rel.unknowns.empty())
                    throw std::logic_error("residual check: unresolved bracket in " + rel.label);
                if (!rel.constant.is_zero())
                    throw std::runtime_error("nonzero WDVV residual " + rel.constant.str() + " in " +
                                             rel.label);
                ++checked;
                return true;
            },
            /*with_unknowns=*/false);
        return checked;
    }

private:
    using Level = std::pair<int, int>;

    struct Res {
        enum Kind { kValue, kUnstable, kUnknown } kind;
        Rational value;
    };
    using ResolveMemo = std::map<InvariantKey, Res>;

    WdvvRelation build_relation_impl(int a, int b, int c, int e, const std::vector<int>& extra,
                                     int d, bool with_unknowns, ResolveMemo& memo) {
        int n = static_cast<int>(extra.size()) + 3;
        WdvvRelation rel;
        std::ostringstream label;
        label << "d=" << d << " (" << a << "," << b << "|" << c << "," << e << ") S=[";
        for (std::size_t i = 0; i < extra.size(); ++i) label << (i ? "," : "") << extra[i];
        label << "]";
        rel.label = label.str();
        accumulate_pairing(rel, a, b, c, e, extra, d, n, Rational(1), with_unknowns, memo);
        accumulate_pairing(rel, a, c, b, e, extra, d, n, Rational(-1), with_unknowns, memo);
        prune(rel);
        return rel;
    }

    // Resolve a bracket while assembling relations for level (d, n): a value
    // via the axioms/base data/store, or a current-level unknown.
    Res resolve(const InvariantKey& key, int level_d, int level_n, bool with_unknowns,
                ResolveMemo& memo) {
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Res r = resolve_uncached(key, level_d, level_n, with_unknowns, memo);
        memo.emplace(key, r);
        return r;
    }

    Res resolve_uncached(const InvariantKey& key, int level_d, int level_n, bool with_unknowns,
                         ResolveMemo& memo) {
        if (is_unstable(key)) return {Res::kUnstable, Rational()};
        BaseResult base = base_value(key);
        if (base.kind == BaseKind::kValue) return {Res::kValue, base.value};
        if (key.contains(orb::kAlpha)) {
            Res rest = resolve(key.without_one(orb::kAlpha), level_d, level_n, with_unknowns, memo);
            if (rest.kind != Res::kValue)
                throw UnknownLowerInvariant(key.str());
            return {Res::kValue, Rational(key.d) * rest.value};
        }
        if (with_unknowns && key.d == level_d && key.n() == level_n) return {Res::kUnknown, Rational()};
        auto v = store_.lookup(key);
        if (v) return {Res::kValue, *v};
        throw UnknownLowerInvariant(key.str());
    }

    // One splitting sum F(x,y | z,w) over S1 + S2 = extra, d1 + d2 = d,
    // contracted through the dual basis, scaled by sign.
    void accumulate_pairing(WdvvRelation& rel, int x, int y, int z, int w,
                            const std::vector<int>& extra, int d, int n, const Rational& sign,
                            bool with_unknowns, ResolveMemo& memo) {
        const auto& duals = dual_basis();
        for_each_split(extra, [&](const std::vector<int>& s1, const std::vector<int>& s2,
                                  const Integer& multiplicity) {
            Rational weight = sign * Rational(multiplicity);
            for (int d1 = 0; d1 <= d; ++d1) {
                int d2 = d - d1;
                for (int i = 0; i < orb::kDim; ++i) {
                    std::vector<int> left_idx = s1;
                    left_idx.push_back(x);
                    left_idx.push_back(y);
                    left_idx.push_back(i);
                    InvariantKey left = InvariantKey::make(d1, std::move(left_idx));
                    Res lres = resolve(left, d, n, with_unknowns, memo);
                    if (lres.kind == Res::kUnstable) continue;
                    if (lres.kind == Res::kValue && lres.value.is_zero()) continue;
                    for (int j = 0; j < orb::kDim; ++j) {
                        const Rational& dij = duals[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                        if (dij.is_zero()) continue;
                        std::vector<int> right_idx = s2;
                        right_idx.push_back(j);
                        right_idx.push_back(z);
                        right_idx.push_back(w);
                        InvariantKey right = InvariantKey::make(d2, std::move(right_idx));
                        Res rres = resolve(right, d, n, with_unknowns, memo);
                        if (rres.kind == Res::kUnstable) continue;
                        if (lres.kind == Res::kValue && rres.kind == Res::kValue) {
                            rel.constant += weight * dij * lres.value * rres.value;
                        } else if (lres.kind == Res::kValue && rres.kind == Res::kUnknown) {
                            rel.unknowns[right] += weight * dij * lres.value;
                        } else if (lres.kind == Res::kUnknown && rres.kind == Res::kValue) {
                            if (!rres.value.is_zero()) rel.unknowns[left] += weight * dij * rres.value;
                        } else {
                            throw std::logic_error("WDVV: two same-level factors in one term");
                        }
                    }
                }
            }
        });
    }

    void solve_level(int d, int n) {
        std::vector<InvariantKey> keys = level_keys(d, n);
        if (keys.empty()) return;
        std::map<InvariantKey, std::size_t> column;
        for (std::size_t c = 0; c < keys.size(); ++c) column.emplace(keys[c], c);

        // Small levels keep the full relation set (the overdetermination is
        // itself a consistency check); larger ones stop once the system has
        // full rank.
        const bool exhaustive = (d <= 1 && n <= 6);
        SparseEliminator<Rational> elim(keys.size());
        enumerate_relations(
            d, n,
            [&](WdvvRelation&& rel) {
                SparseRow<Rational> row;
                row.constant = rel.constant;
                for (const auto& [key, coeff] : rel.unknowns) {
                    auto it = column.find(key);
                    if (it == column.end())
                        throw std::logic_error("WDVV: unexpected unknown " + key.str());
                    row.coeff.emplace(it->second, coeff);
                }
                try {
                    elim.add_row(std::move(row));
                } catch (const InconsistentSystem&) {
                    throw std::logic_error("WDVV: inconsistent relation system at level (" +
                                           std::to_string(d) + ", " + std::to_string(n) + "), relation " +
                                           rel.label);
                }
                return exhaustive || !elim.complete();
            },
            /*with_unknowns=*/true);

        auto solution = elim.solve();
        std::vector<InvariantKey> free;
        for (std::size_t c = 0; c < keys.size(); ++c)
            if (!solution[c].has_value()) free.push_back(keys[c]);
        if (!free.empty()) {
            std::string what = "WDVV system underdetermined at level (" + std::to_string(d) + ", " +
                               std::to_string(n) + "); free unknowns:";
            for (const auto& k : free) what += " " + k.str();
            throw Underdetermined(what, std::move(free));
        }
        for (std::size_t c = 0; c < keys.size(); ++c) store_.insert(keys[c], solution[c].value());
    }

    static void prune(WdvvRelation& rel) {
        for (auto it = rel.unknowns.begin(); it != rel.unknowns.end();)
            it = it->second.is_zero() ? rel.unknowns.erase(it) : std::next(it);
    }

    // Is there an admissible current-level key of the form {x, y, j} + S for
    // some pairing side {x, y} of the tuple and some basis j?
    static bool has_top_shape(const std::vector<int>& tuple, const std::vector<int>& extra,
                              int extra_deg, int d, int target) {
        int tw_extra = 0;
        for (int x : extra) tw_extra += orb::is_twisted(x) ? 1 : 0;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 4; ++q) {
                int x = tuple[static_cast<std::size_t>(p)], y = tuple[static_cast<std::size_t>(q)];
                if (x < orb::kAlpha2 || y < orb::kAlpha2) continue;
                int need = target - orb::degree(x) - orb::degree(y) - extra_deg;
                int tw = tw_extra + (orb::is_twisted(x) ? 1 : 0) + (orb::is_twisted(y) ? 1 : 0);
                for (int j = orb::kAlpha2; j < orb::kDim; ++j)
                    if (orb::degree(j) == need && (tw + (orb::is_twisted(j) ? 1 : 0)) % 2 == 0)
                        return true;
                (void)d;
            }
        return false;
    }

    static std::array<std::pair<int, int>, 2> canonical_partition(int x, int y, int z, int w) {
        auto pr = [](int u, int v) { return std::pair{std::min(u, v), std::max(u, v)}; };
        auto p1 = pr(x, y), p2 = pr(z, w);
        if (p2 < p1) std::swap(p1, p2);
        return {p1, p2};
    }

    // Nondecreasing tuples of the given size over [lo, kDim).
    template <typename Fn>
    static void enumerate_tuples(int lo, int size, std::vector<int>& cur, const Fn& fn) {
        if (static_cast<int>(cur.size()) == size) {
            fn(cur);
            return;
        }
        int start = cur.empty() ? lo : cur.back();
        for (int i = start; i < orb::kDim; ++i) {
            cur.push_back(i);
            enumerate_tuples(lo, size, cur, fn);
            cur.pop_back();
        }
    }

    // Nondecreasing tuples with a fixed total degree (used for level keys).
    template <typename Fn>
    static void enumerate_multisets(int lo, int size, int deg_target, std::vector<int>& cur,
                                    const Fn& fn) {
        if (static_cast<int>(cur.size()) == size) {
            if (deg_target == 0) fn(cur);
            return;
        }
        int start = cur.empty() ? lo : cur.back();
        for (int i = start; i < orb::kDim; ++i) {
            if (orb::degree(i) > deg_target) continue;
            cur.push_back(i);
            enumerate_multisets(lo, size, deg_target - orb::degree(i), cur, fn);
            cur.pop_back();
        }
    }

    // All splittings of a labeled point set carrying the multiset `s` into
    // two halves, grouped by the sub-multiset: the multiplicity is the
    // product of binomials counting the underlying label choices.
    template <typename Fn>
    static void for_each_split(const std::vector<int>& s, const Fn& fn) {
        std::vector<std::pair<int, int>> groups;  // (value, count), s is sorted
        for (int v : s) {
            if (!groups.empty() && groups.back().first == v)
                ++groups.back().second;
            else
                groups.emplace_back(v, 1);
        }
        std::vector<int> take(groups.size(), 0);
        for (;;) {
            std::vector<int> s1, s2;
            Integer multiplicity = 1;
            for (std::size_t g = 0; g < groups.size(); ++g) {
                for (int k = 0; k < take[g]; ++k) s1.push_back(groups[g].first);
                for (int k = take[g]; k < groups[g].second; ++k) s2.push_back(groups[g].first);
                multiplicity *= binomial(static_cast<unsigned long>(groups[g].second),
                                         static_cast<unsigned long>(take[g]));
            }
            fn(s1, s2, multiplicity);
            std::size_t g = 0;
            while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
            if (g == groups.size()) break;
            ++take[g];
        }
    }

    InvariantStore& store_;
    std::set<Level> solved_;
    std::set<Level> solving_;
};

}  // namespace sym2gw
