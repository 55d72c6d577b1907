#pragma once

// Small exact linear algebra: dense Gauss-Jordan over any field type with
// +,-,*,/ and is_zero(), and an incremental sparse row-reducer used for the
// WDVV systems.  Pivoting is always "first nonzero in fixed column order" so
// results are bit-for-bit reproducible.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sym2gw {

template <typename F>
using DenseMatrix = std::vector<std::vector<F>>;

template <typename F>
std::optional<DenseMatrix<F>> dense_inverse(DenseMatrix<F> a) {
    const std::size_t n = a.size();
    DenseMatrix<F> inv(n, std::vector<F>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = F(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;  // singular
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        F d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / d;
            inv[col][j] = inv[col][j] / d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            F f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] = a[row][j] - f * a[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

template <typename F>
F dense_determinant(DenseMatrix<F> a) {
    const std::size_t n = a.size();
    F det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return F(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            F f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] = a[row][j] - f * a[col][j];
        }
    }
    return det;
}

// A sparse row: coefficients indexed by unknown column, plus a constant, read
// as  sum coeff * x + constant = 0.
template <typename F>
struct SparseRow {
    std::map<std::size_t, F> coeff;
    F constant{};

    bool empty() const { return coeff.empty(); }
    std::size_t lead() const { return coeff.begin()->first; }
};

struct InconsistentSystem : std::runtime_error {
    explicit InconsistentSystem(const std::string& what) : std::runtime_error(what) {}
};

// Incremental reduction to row echelon form with unit pivots.  Rows are fed
// one by one; each is reduced against the pivots found so far, and its
// leading column becomes a new pivot if still nonzero.  A row reducing to
// 0 = c with c != 0 raises InconsistentSystem.
template <typename F>
class SparseEliminator {
public:
    explicit SparseEliminator(std::size_t num_unknowns) : n_(num_unknowns) {}

    std::size_t rank() const { return pivots_.size(); }
    bool complete() const { return pivots_.size() == n_; }

    // Returns true if the row added to the rank.
    bool add_row(SparseRow<F> row) {
        reduce(row);
        if (row.empty()) {
            if (!row.constant.is_zero())
                throw InconsistentSystem("sparse system: contradictory relation");
            return false;
        }
        std::size_t lead = row.lead();
        F inv = F(1) / row.coeff.begin()->second;
        for (auto& [c, v] : row.coeff) v = v * inv;
        row.constant = row.constant * inv;
        pivots_.emplace(lead, std::move(row));
        return true;
    }

    // Back-substitute to fully reduced form and read off all unknowns.
    // Throws nothing; unknowns without a pivot are reported via free().
    std::vector<std::optional<F>> solve() const {
        std::vector<std::optional<F>> result(n_);
        // Walk pivots from the highest column down so every row below is
        // already final when we substitute it.
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const SparseRow<F>& row = it->second;
            F value = -row.constant;
            bool determined = true;
            for (auto ct = std::next(row.coeff.begin()); ct != row.coeff.end(); ++ct) {
                const auto& sub = result[ct->first];
                if (!sub.has_value()) {
                    determined = false;
                    break;
                }
                value = value - ct->second * sub.value();
            }
            if (determined) result[it->first] = std::move(value);
        }
        return result;
    }

    std::vector<std::size_t> free_unknowns() const {
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < n_; ++c)
            if (pivots_.find(c) == pivots_.end()) free.push_back(c);
        return free;
    }

private:
    void reduce(SparseRow<F>& row) const {
        while (!row.empty()) {
            auto it = pivots_.find(row.lead());
            if (it == pivots_.end()) return;
            F f = row.coeff.begin()->second;
            const SparseRow<F>& p = it->second;
            for (const auto& [c, v] : p.coeff) {
                auto rt = row.coeff.find(c);
                F nv = (rt == row.coeff.end() ? F() : rt->second) - f * v;
                if (nv.is_zero()) {
                    if (rt != row.coeff.end()) row.coeff.erase(rt);
                } else {
                    row.coeff[c] = std::move(nv);
                }
            }
            row.constant = row.constant - f * p.constant;
        }
    }

    std::size_t n_;
    std::map<std::size_t, SparseRow<F>> pivots_;  // keyed by pivot column
};

}  // namespace sym2gw
