#pragma once

// Hard-coded instances: Sweedler's H₄ with its twist family J(t), and the
// twist on A^{*op}⊗A built from dual bases.

#include "hopf/cotwist.hpp"

namespace hopf {

/// Basis {1, g, x, gx} (indices 0..3); g² = 1, x² = 0, xg = −gx,
/// Δ(x) = x⊗1 + g⊗x, S(x) = −gx.
template <class F>
HopfAlgebra<typename F::Scalar> sweedler_h4(const F& field) {
    using K = typename F::Scalar;
    if (field.characteristic() == 2) throw Error(ErrorKind::CharTwo, "Sweedler's algebra needs char ≠ 2");
    const std::size_t n = 4;
    auto idx = [](int a, int b) { return static_cast<std::size_t>(a + 2 * b); };
    std::vector<K> mul(n * n * n, field.zero()), comul(n * n * n, field.zero());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    if (b + d > 1) continue;
                    K sign = (b * c) % 2 ? -field.one() : field.one();
                    mul[(idx(a, b) * n + idx(c, d)) * n + idx((a + c) % 2, b + d)] = sign;
                }
    auto set_comul = [&](std::size_t i, std::size_t j, std::size_t k, const K& c) { comul[(i * n + j) * n + k] = c; };
    set_comul(0, 0, 0, field.one());
    set_comul(1, 1, 1, field.one());
    set_comul(2, 2, 0, field.one());  // x⊗1
    set_comul(2, 1, 2, field.one());  // g⊗x
    set_comul(3, 3, 1, field.one());  // gx⊗g
    set_comul(3, 0, 3, field.one());  // 1⊗gx
    std::vector<K> unit{field.one(), field.zero(), field.zero(), field.zero()};
    std::vector<K> counit{field.one(), field.one(), field.zero(), field.zero()};
    Matrix<K> s(n, n, field.zero());
    s(0, 0) = field.one();
    s(1, 1) = field.one();
    s(3, 2) = -field.one();  // S(x) = −gx
    s(2, 3) = field.one();   // S(gx) = x
    return HopfAlgebra<K>(field, {"1", "g", "x", "gx"}, mul, unit, comul, counit, s);
}

/// J(t) = 1⊗1 − (t/2) gx⊗x
template <class K>
TensorElement<K> sweedler_twist_element(const HopfAlgebra<K>& h4, const K& t) {
    const auto& f = h4.field();
    TensorElement<K> j = h4.one_tensor();
    j(3, 2) = -(t / f.from_int(2));
    return j;
}

template <class K>
Twist<K> sweedler_twist(const HopfAlgebra<K>& h4, const K& t) {
    return make_twist(h4, sweedler_twist_element(h4, t));
}

/// H = A^{*op}⊗A and J = Σ_i (φ_i⊗1)⊗(ε⊗a_i) for the dual bases {a_i}, {φ_i}.
template <class K>
struct DoubleTwist {
    HopfAlgebra<K> H;
    Twist<K> J;
};

template <class K>
DoubleTwist<K> double_twist(const HopfAlgebra<K>& a) {
    HopfAlgebra<K> h = hopf_tensor_product(opposite(dual_hopf(a)), a);
    const std::size_t n = a.dim(), dim = n * n;
    const auto& f = a.field();
    // Basis of H: φ_x⊗a_y at index x·n + y. 1_{A*} = ε = Σ_i ε(a_i) φ_i, 1_A = unit vector.
    TensorElement<K> j(dim, 2, f.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t y = 0; y < n; ++y) {
            if (a.unit()[y].is_zero()) continue;
            for (std::size_t x = 0; x < n; ++x) {
                if (a.counit()[x].is_zero()) continue;
                j(i * n + y, x * n + i) += a.unit()[y] * a.counit()[x];
            }
        }
    auto twist = make_twist(h, j);
    return {std::move(h), std::move(twist)};
}

/// Decomposition of (H^{(1,J)})* for the twist of double_twist(A), the Heisenberg double.
template <class K>
AlgebraDecomposition<K> heisenberg_blocks(const HopfAlgebra<K>& a, std::uint64_t seed = 0) {
    const auto d = double_twist(a);
    return decompose(dual_algebra(twisted_coalgebra(d.H, d.J)), seed);
}

/// The Heisenberg double is simple: radical 0 and one block of size dim(A).
template <class K>
bool heisenberg_check(const HopfAlgebra<K>& a, std::uint64_t seed = 0) {
    const auto d = heisenberg_blocks(a, seed);
    return d.radical_dim == 0 && d.block_dims == std::vector<std::size_t>{a.dim()};
}

}  // namespace hopf
