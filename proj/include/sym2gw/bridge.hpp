#pragma once

// The linear bridge between the two Chow rings: a -> T2, g -> i(T2 - T1),
// extended over the monomial basis {a^p g^q} and inverted.  Built once at
// startup; construction verifies that the monomials are independent and the
// map is a degree-preserving isomorphism.

#include "sym2gw/hilb_ring.hpp"
#include "sym2gw/linalg.hpp"
#include "sym2gw/orb_ring.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace sym2gw {

class BridgeMap {
public:
    // Monomial exponents (p, q) for a^p g^q, ordered by degree.
    static constexpr std::array<std::pair<int, int>, 9> kMonomialExponents = {
        std::pair{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {4, 0}};

    static const BridgeMap& get() {
        static const BridgeMap instance;
        return instance;
    }

    // Image of a^p g^q: T2^p (i (T2 - T1))^q in normal form.
    static hilb::HilbClass monomial_image(int p, int q) {
        hilb::HilbClass img = hilb::normal_form(0, 0);
        for (int k = 0; k < p; ++k) img = img * hilb::t2();
        for (int k = 0; k < q; ++k) img = img * (GaussRational::i() * hilb::t2_minus_t1());
        return img;
    }

    hilb::HilbClass apply(const orb::OrbClass& x) const {
        hilb::HilbClass y;
        for (int j = 0; j < hilb::kDim; ++j) {
            GaussRational acc;
            for (int i = 0; i < orb::kDim; ++i)
                acc += forward_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * x.coeff(i);
            y.set_coeff(j, acc);
        }
        return y;
    }

    orb::OrbClass inverse(const hilb::HilbClass& y) const {
        orb::OrbClass x;
        for (int i = 0; i < orb::kDim; ++i) {
            GaussRational acc;
            for (int j = 0; j < hilb::kDim; ++j)
                acc += backward_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * y.coeff(j);
            x.set_coeff(i, acc);
        }
        return x;
    }

    // Degree preservation: basis classes map to homogeneous classes of the
    // same degree in both directions.
    bool degree_preserving() const {
        for (int i = 0; i < orb::kDim; ++i) {
            hilb::HilbClass img = apply(orb::OrbClass::basis(i));
            for (int j = 0; j < hilb::kDim; ++j)
                if (!img.coeff(j).is_zero() && hilb::degree(j) != orb::degree(i)) return false;
        }
        return true;
    }

private:
    BridgeMap() {
        // Columns of P: orbifold coordinates of the monomials a^p g^q.
        DenseMatrix<GaussRational> p(orb::kDim, std::vector<GaussRational>(orb::kDim));
        DenseMatrix<GaussRational> h(hilb::kDim, std::vector<GaussRational>(hilb::kDim));
        for (std::size_t col = 0; col < kMonomialExponents.size(); ++col) {
            auto [pe, qe] = kMonomialExponents[col];
            orb::OrbClass mono = orb::OrbClass::monomial(pe, qe);
            hilb::HilbClass img = monomial_image(pe, qe);
            for (int row = 0; row < orb::kDim; ++row) p[static_cast<std::size_t>(row)][col] = mono.coeff(row);
            for (int row = 0; row < hilb::kDim; ++row) h[static_cast<std::size_t>(row)][col] = img.coeff(row);
        }
        auto p_inv = dense_inverse(p);
        if (!p_inv) throw std::logic_error("bridge: monomials a^p g^q are not independent");
        // forward = H * P^-1 maps orbifold coordinates to Hilbert coordinates.
        for (std::size_t r = 0; r < hilb::kDim; ++r)
            for (std::size_t c = 0; c < orb::kDim; ++c) {
                GaussRational acc;
                for (std::size_t k = 0; k < orb::kDim; ++k) acc += h[r][k] * (*p_inv)[k][c];
                forward_[r][c] = acc;
            }
        DenseMatrix<GaussRational> fwd(orb::kDim, std::vector<GaussRational>(orb::kDim));
        for (std::size_t r = 0; r < hilb::kDim; ++r)
            for (std::size_t c = 0; c < orb::kDim; ++c) fwd[r][c] = forward_[r][c];
        auto back = dense_inverse(fwd);
        if (!back) throw std::logic_error("bridge: map is not invertible");
        for (std::size_t r = 0; r < orb::kDim; ++r)
            for (std::size_t c = 0; c < hilb::kDim; ++c) backward_[r][c] = (*back)[r][c];
    }

    std::array<std::array<GaussRational, orb::kDim>, hilb::kDim> forward_{};
    std::array<std::array<GaussRational, hilb::kDim>, orb::kDim> backward_{};
};

}  // namespace sym2gw
