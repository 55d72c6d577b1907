#pragma once

// Combinatorics of set partitions into odd-size parts, and the triangular
// conversion between the invariants J(d, g) and the hyperelliptic counts
// E(d, g).
//
// A partition of [2g + 2] into 2g' + 2 parts, all of odd size, contributes
// weight (-1/4)^(g - g') (2g' + 2)! to the row entry M[g][g'].  Grouping the
// partitions by type (b_i parts of size 2i + 1) turns the row into a finite
// sum over types with
//
//     #partitions of type b = n! / (prod (2i+1)!^{b_i} * prod b_i!) .
//
// J = M E, and E recovers from J by forward substitution since the diagonal
// M[g][g] = (2g + 2)! never vanishes.

#include "sym2gw/rational.hpp"

#include <stdexcept>
#include <vector>

namespace sym2gw {

struct TypeMismatch : std::invalid_argument {
    explicit TypeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct OddPartitionType {
    std::vector<long> counts;  // counts[i] = number of parts of size 2i + 1

    long num_parts() const {
        long p = 0;
        for (long b : counts) p += b;
        return p;
    }
    long total_elements() const {
        long t = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) t += (2 * static_cast<long>(i) + 1) * counts[i];
        return t;
    }
    long weighted_index_sum() const {  // sum i * b_i = g - g'
        long s = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) s += static_cast<long>(i) * counts[i];
        return s;
    }
};

// Number of set partitions of an n-element set with the given odd type.
inline Integer partition_type_count(long n, const OddPartitionType& type) {
    if (type.total_elements() != n)
        throw TypeMismatch("partition_type_count: type covers " +
                           std::to_string(type.total_elements()) + " elements, not " +
                           std::to_string(n));
    Integer result = factorial(static_cast<unsigned long>(n));
    for (std::size_t i = 0; i < type.counts.size(); ++i) {
        long b = type.counts[i];
        if (b == 0) continue;
        Integer part_size_fact = factorial(2 * static_cast<unsigned long>(i) + 1);
        result /= pow_int(part_size_fact, static_cast<unsigned long>(b));
        result /= factorial(static_cast<unsigned long>(b));
    }
    return result;
}

// All types with sum b_i = parts and sum i b_i = excess.
inline std::vector<OddPartitionType> odd_types(long parts, long excess) {
    std::vector<OddPartitionType> out;
    std::vector<long> counts;
    // Work from the largest index down so counts come out index-aligned.
    auto rec = [&](auto&& self, long idx, long parts_left, long excess_left) -> void {
        if (idx == 0) {
            if (excess_left == 0) {
                OddPartitionType t;
                t.counts.assign(static_cast<std::size_t>(counts.size() + 1), 0);
                t.counts[0] = parts_left;
                for (std::size_t i = 0; i < counts.size(); ++i) t.counts[counts.size() - i] = counts[i];
                while (t.counts.size() > 1 && t.counts.back() == 0) t.counts.pop_back();
                out.push_back(std::move(t));
            }
            return;
        }
        for (long b = 0; b * idx <= excess_left && b <= parts_left; ++b) {
            counts.push_back(b);
            self(self, idx - 1, parts_left - b, excess_left - b * idx);
            counts.pop_back();
        }
    };
    if (parts >= 0 && excess >= 0) rec(rec, excess, parts, excess);
    return out;
}

class ConversionMatrix {
public:
    explicit ConversionMatrix(int max_genus) : max_genus_(max_genus) {
        m_.assign(static_cast<std::size_t>(max_genus + 1),
                  std::vector<Rational>(static_cast<std::size_t>(max_genus + 1)));
        for (int g = 0; g <= max_genus; ++g)
            for (int gp = 0; gp <= g; ++gp) {
                Integer total = 0;
                for (const auto& type : odd_types(2L * gp + 2, static_cast<long>(g - gp)))
                    total += partition_type_count(2L * g + 2, type);
                Rational weight = pow_rat(Rational(-1, 4), g - gp);
                m_[static_cast<std::size_t>(g)][static_cast<std::size_t>(gp)] =
                    weight * Rational(total * factorial(2 * static_cast<unsigned long>(gp) + 2));
            }
    }

    int max_genus() const { return max_genus_; }

    const Rational& at(int g, int gp) const {
        return m_[static_cast<std::size_t>(g)][static_cast<std::size_t>(gp)];
    }

    // J = M E.
    std::vector<Rational> j_from_e(const std::vector<Rational>& e) const {
        check_size(e);
        std::vector<Rational> j(e.size());
        for (std::size_t g = 0; g < e.size(); ++g)
            for (std::size_t gp = 0; gp <= g; ++gp) j[g] += m_[g][gp] * e[gp];
        return j;
    }

    // E = M^-1 J by forward substitution.
    std::vector<Rational> e_from_j(const std::vector<Rational>& j) const {
        check_size(j);
        std::vector<Rational> e(j.size());
        for (std::size_t g = 0; g < j.size(); ++g) {
            Rational acc = j[g];
            for (std::size_t gp = 0; gp < g; ++gp) acc -= m_[g][gp] * e[gp];
            e[g] = acc / m_[g][g];
        }
        return e;
    }

private:
    void check_size(const std::vector<Rational>& v) const {
        if (v.size() != static_cast<std::size_t>(max_genus_ + 1))
            throw std::invalid_argument("ConversionMatrix: vector must cover genus 0.." +
                                        std::to_string(max_genus_));
    }

    int max_genus_;
    std::vector<std::vector<Rational>> m_;
};

}  // namespace sym2gw
