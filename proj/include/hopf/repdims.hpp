#pragma once

// Irreducible representations of (k[G]^{(L,J)})* coset by coset: predicted
// dimensions from the projective classes of L and J against the actual blocks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hopf/duality.hpp"

namespace hopf {

struct CosetRow {
    Subgroup Z;
    std::size_t g = 0;  // smallest element of Z
    Subgroup M;         // K_L ∩ gK_Jg⁻¹
    std::size_t radical = 1;  // order of the radical of W's commutator form on M
    std::vector<std::size_t> predicted, actual;
};

struct DoubleCosetData {
    Subgroup K_L, K_J;
    std::vector<CosetRow> rows;

    bool agree() const {
        for (const auto& r : rows)
            if (r.predicted != r.actual) return false;
        return true;
    }
    std::size_t sum_of_squares() const {
        std::size_t s = 0;
        for (const auto& r : rows)
            for (auto d : r.actual) s += d * d;
        return s;
    }
};

namespace detail {

/// K as a group in its own right, element u of the result being k[u].
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& k) {
    std::vector<std::size_t> local(g.order(), k.size());
    for (std::size_t u = 0; u < k.size(); ++u) local[k[u]] = u;
    std::vector<std::vector<std::size_t>> table(k.size(), std::vector<std::size_t>(k.size()));
    for (std::size_t u = 0; u < k.size(); ++u)
        for (std::size_t v = 0; v < k.size(); ++v) table[u][v] = local[g.mul(k[u], k[v])];
    return FiniteGroup(table);
}

/// b(x,y) = c(x,y)c(y,x)⁻¹ for the dual twist c of J restricted to k[K]: the commutator
/// form of the projective representation attached to J. Indexed by positions in K.
template <class K>
std::vector<std::vector<K>> commutator_form(const HopfAlgebra<K>& h, const FiniteGroup& g, const Subgroup& k, const Twist<K>& j,
                                            std::uint64_t seed) {
    const std::size_t m = k.size();
    const auto local = subgroup_as_group(g, k);
    const auto hk = group_algebra(local, h.field());
    TensorElement<K> jk(m, 2, h.field().zero());
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) jk(u, v) = j.J()(k[u], k[v]);
    const auto c = dual_twist(hk, local, make_twist(hk, jk), seed).c.J();
    std::vector<std::vector<K>> b(m, std::vector<K>(m, h.field().one()));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) b[x][y] = c(x, y) * c(y, x).inverse();
    return b;
}

inline std::size_t position(const Subgroup& k, std::size_t x) {
    return static_cast<std::size_t>(std::lower_bound(k.begin(), k.end(), x) - k.begin());
}

}  // namespace detail

/// For minimal twists L, J on abelian K_L, K_J (symplectic_twist outputs): decomposes each
/// H_Z* = span{δ_x : x ∈ Z} of (k[G]^{(L,J)})* and predicts its block sizes as
/// √(|K_L||K_J|)/|M_g| · dim X over the irreducible X of the twisted group algebra of M_g.
/// W = W_L⊗W_J enters through its commutator form b_L(x,y)·b_J(g⁻¹xg, g⁻¹yg)⁻¹; the left
/// twist acts through L⁻¹, so its class enters inverted.
template <class F>
DoubleCosetData repdims(const FiniteGroup& g, const SymplecticTwistSpec& l, const SymplecticTwistSpec& j, const F& field,
                        std::uint64_t seed = 0) {
    using K = typename F::Scalar;
    const auto h = group_algebra(g, field);
    const auto tl = symplectic_twist(h, g, l);
    const auto tj = symplectic_twist(h, g, j);
    const auto bl = detail::commutator_form(h, g, l.K, tl, seed);
    const auto bj = detail::commutator_form(h, g, j.K, tj, seed);
    const auto a = dual_algebra(build_two_sided(h, tl, tj));
    const std::size_t n = g.order();

    DoubleCosetData out{l.K, j.K, {}};
    const auto cosets = g.double_cosets(l.K, j.K);
    std::vector<std::size_t> coset_of(n);
    for (std::size_t z = 0; z < cosets.size(); ++z)
        for (auto x : cosets[z]) coset_of[x] = z;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (const auto& t : a.terms(x, y)) {
                if (coset_of[x] != coset_of[y])
                    throw Error(ErrorKind::NotASubalgebra, "H_Z* H_Z'* ≠ 0 for distinct double cosets");
                if (coset_of[t.k] != coset_of[x]) throw Error(ErrorKind::NotASubalgebra, "H_Z* is not closed under multiplication");
            }

    const double root = std::sqrt(static_cast<double>(l.K.size() * j.K.size()));
    for (const auto& z : cosets) {
        CosetRow row;
        row.Z = z;
        row.g = z.front();
        row.M = g.intersection(l.K, g.conjugate(row.g, j.K));

        const std::size_t m = row.M.size();
        auto w = [&](std::size_t x, std::size_t y) {
            const std::size_t gi = g.inv(row.g);
            const auto xj = g.conj(gi, x), yj = g.conj(gi, y);
            return bl[detail::position(l.K, x)][detail::position(l.K, y)] *
                   bj[detail::position(j.K, xj)][detail::position(j.K, yj)].inverse();
        };
        row.radical = 0;
        for (auto x : row.M) {
            bool central = true;
            for (auto y : row.M) central = central && w(x, y).is_one();
            if (central) ++row.radical;
        }
        const auto dim_x = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m / row.radical))));
        const auto num = static_cast<std::size_t>(std::llround(root)) * dim_x;
        if (dim_x * dim_x * row.radical != m || num % m != 0)
            throw Error(ErrorKind::InternalInconsistency, "predicted dimension is not an integer");
        row.predicted.assign(row.radical, num / m);

        // H_Z* with its own unit, the Z-component of 1
        const std::size_t d = z.size();
        std::vector<K> mul(d * d * d, field.zero()), unit(d, field.zero());
        for (std::size_t u = 0; u < d; ++u) {
            unit[u] = a.unit()[z[u]];
            for (std::size_t v = 0; v < d; ++v)
                for (const auto& t : a.terms(z[u], z[v])) mul[(u * d + v) * d + detail::position(z, t.k)] = t.c;
        }
        const auto dec = decompose(Algebra<K>(field, d, std::move(mul), std::move(unit)), seed);
        row.actual = dec.radical_dim == 0 ? dec.block_dims : std::vector<std::size_t>{};
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace hopf
