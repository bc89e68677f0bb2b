#pragma once

// Group algebras, symplectic twists on abelian subgroups and the alternating
// bicharacter invariant that separates their gauge classes.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "hopf/groups.hpp"
#include "hopf/twisting.hpp"

namespace hopf {

template <class F>
HopfAlgebra<typename F::Scalar> group_algebra(const FiniteGroup& g, const F& field) {
    using K = typename F::Scalar;
    const std::size_t n = g.order();
    std::vector<K> mul(n * n * n, field.zero()), comul(n * n * n, field.zero());
    std::vector<K> unit(n, field.zero()), counit(n, field.one());
    Matrix<K> s(n, n, field.zero());
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) mul[(a * n + b) * n + g.mul(a, b)] = field.one();
        comul[(a * n + a) * n + a] = field.one();
        s(g.inv(a), a) = field.one();
    }
    unit[g.identity()] = field.one();
    return HopfAlgebra<K>(field, g.labels(), mul, unit, comul, counit, s);
}

/// k^G = (k[G])*, basis δ_g.
template <class F>
HopfAlgebra<typename F::Scalar> function_algebra(const FiniteGroup& g, const F& field) {
    return dual_hopf(group_algebra(g, field));
}

/// Alternating form on the character group of an abelian subgroup K, as an
/// exponent matrix Ω (entries mod exp(K)) in the coordinates of abelian_basis(G, K):
/// ω(χ_x, χ_y) = ζ^{xᵀΩy}.
struct SymplecticTwistSpec {
    Subgroup K;
    std::vector<std::vector<long long>> omega;
};

/// Block-diagonal [[0,1],[-1,0]] ⊕ … for 2m coordinates.
std::vector<std::vector<long long>> standard_omega(std::size_t coords, long long scale = 1);

/// Checks that Ω is alternating, well defined on ∏ℤ_{n_a}, and non-degenerate.
/// Throws DegeneracyDetected (or HypothesisViolation for malformed input).
void validate_omega(const AbelianBasis& basis, const std::vector<std::vector<long long>>& omega);

namespace detail {

inline long long mod(long long a, long long m) { return ((a % m) + m) % m; }

/// ⟨x, k⟩ = Σ_a x_a k_a (e/n_a) mod e: the exponent of χ_x(k).
inline long long char_exponent(const AbelianBasis& b, const std::vector<std::size_t>& x, const std::vector<std::size_t>& k) {
    const long long e = static_cast<long long>(b.exponent);
    long long s = 0;
    for (std::size_t a = 0; a < b.orders.size(); ++a)
        s += static_cast<long long>(x[a] * k[a] * (b.exponent / b.orders[a]));
    return mod(s, e);
}

}  // namespace detail

/// J_ω ∈ k[K]⊗k[K] ⊂ k[G]⊗k[G] with (χ₁⊗χ₂)(J_ω) = F(χ₁,χ₂), where
/// F = ζ^{½xᵀΩy} for odd exponent and F = ζ^{xᵀUy} (U the strict upper part of Ω) for even.
template <class K>
Twist<K> symplectic_twist(const HopfAlgebra<K>& h, const FiniteGroup& g, const SymplecticTwistSpec& spec) {
    if (h.dim() != g.order()) throw Error(ErrorKind::AlgebraMismatch, "H is not k[G] for this G");
    const auto basis = abelian_basis(g, spec.K);
    validate_omega(basis, spec.omega);
    const auto& field = h.field();
    const std::size_t n = h.dim(), order = basis.elements.size(), r = basis.orders.size();
    const long long e = static_cast<long long>(basis.exponent);

    K size = field.from_int(static_cast<long long>(order));
    if (size.is_zero()) throw Error(ErrorKind::HypothesisViolation, "|K| is zero in the field");
    const K z = field.primitive_root_of_unity(basis.exponent);
    std::vector<K> zp(static_cast<std::size_t>(e), field.one());
    for (long long k = 1; k < e; ++k) zp[static_cast<std::size_t>(k)] = zp[static_cast<std::size_t>(k - 1)] * z;

    long long half = 1;
    if (e % 2 == 1) half = (e + 1) / 2;  // 2⁻¹ mod e
    auto f_exp = [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
        long long s = 0;
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                if (e % 2 == 0 && a >= b) continue;
                s += static_cast<long long>(x[a]) * detail::mod(spec.omega[a][b], e) % e * static_cast<long long>(y[b]);
                s %= e;
            }
        return e % 2 == 1 ? detail::mod(s * half, e) : s;
    };

    const auto& co = basis.coordinates;
    // a[x][v] = Σ_y F(x,y) χ_y(v)⁻¹
    std::vector<std::vector<K>> a(order, std::vector<K>(order, field.zero()));
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            const long long fxy = f_exp(co[x], co[y]);
            for (std::size_t v = 0; v < order; ++v)
                a[x][v] += zp[static_cast<std::size_t>(detail::mod(fxy - detail::char_exponent(basis, co[y], co[v]), e))];
        }
    const K scale = (size * size).inverse();
    TensorElement<K> j(n, 2, field.zero());
    for (std::size_t u = 0; u < order; ++u)
        for (std::size_t v = 0; v < order; ++v) {
            K acc = field.zero();
            for (std::size_t x = 0; x < order; ++x)
                acc += zp[static_cast<std::size_t>(detail::mod(-detail::char_exponent(basis, co[x], co[u]), e))] * a[x][v];
            j(basis.elements[u], basis.elements[v]) = scale * acc;
        }

    // Verify in k[K] rewritten in the character basis, where products are pointwise, then carry
    // the twist into k[G] along k[K] → k[G].
    std::vector<std::size_t> local(n, order);
    for (std::size_t u = 0; u < order; ++u) local[basis.elements[u]] = u;
    std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
    for (std::size_t u = 0; u < order; ++u)
        for (std::size_t v = 0; v < order; ++v) table[u][v] = local[g.mul(basis.elements[u], basis.elements[v])];
    const auto hk = group_algebra(FiniteGroup(table), field);
    Matrix<K> p(order, order, field.zero());
    for (std::size_t y = 0; y < order; ++y)
        for (std::size_t x = 0; x < order; ++x)
            p(x, y) = zp[static_cast<std::size_t>(detail::char_exponent(basis, co[y], co[x]))];
    const auto p_inv = inverse(p);
    TensorElement<K> jk(order, 2, field.zero());
    for (std::size_t u = 0; u < order; ++u)
        for (std::size_t v = 0; v < order; ++v) jk(u, v) = j(basis.elements[u], basis.elements[v]);
    const auto twist_hat = make_twist(change_basis(hk, p), detail::push_forward(jk, p_inv));
    Matrix<K> f(n, order, field.zero());
    for (std::size_t y = 0; y < order; ++y)
        for (std::size_t x = 0; x < order; ++x) f(basis.elements[x], y) = p(x, y);
    auto out = detail::push_forward_twist(twist_hat, f);
    if (!(out.J() == j)) throw Error(ErrorKind::InternalInconsistency, "character-basis transport changed J");
    return out;
}

/// T₂₁⁻¹T; for twists on the group algebra of an abelian group this is a gauge invariant.
template <class K>
TensorElement<K> twist_invariant(const HopfAlgebra<K>& h, const TensorElement<K>& t) {
    return tensor_mul(h.algebra(), invert(h.algebra(), flip(t)), t);
}

template <class K>
TensorElement<K> twist_invariant(const HopfAlgebra<K>& h, const Twist<K>& t) {
    return tensor_mul(h.algebra(), flip(t.J_inv()), t.J());
}

/// (χ⊗χ')(T) = Σ T(u,v) χ(u) χ'(v) for characters given as value vectors on G.
template <class K>
K evaluate_characters(const TensorElement<K>& t, const std::vector<K>& chi1, const std::vector<K>& chi2) {
    K acc = chi1.at(0) - chi1.at(0);
    for (auto fl : t.nonzeros()) {
        auto d = t.digits(fl);
        acc += t[fl] * chi1[d[0]] * chi2[d[1]];
    }
    return acc;
}

/// Smallest m ∈ [0, order) with z^m = value; throws NotScalar when value is not a power of z.
template <class K>
long long discrete_log(const K& z, std::size_t order, const K& value) {
    K p = value.field().one();
    for (std::size_t m = 0; m < order; ++m) {
        if (p == value) return static_cast<long long>(m);
        p *= z;
    }
    throw Error(ErrorKind::NotScalar, "value is not a power of the chosen root of unity");
}

namespace detail {

/// ζ^{M_ab} = eval(χ_a, χ_b) for the basis characters of K.
template <class K, class Eval>
std::vector<std::vector<long long>> bicharacter_from(const HopfAlgebra<K>& h, const FiniteGroup& g, const AbelianBasis& basis,
                                                     Eval eval) {
    const auto& field = h.field();
    const K z = field.primitive_root_of_unity(basis.exponent);
    const std::size_t r = basis.orders.size();
    auto character = [&](std::size_t a) {
        std::vector<K> chi(g.order(), field.zero());
        std::vector<std::size_t> x(r, 0);
        x[a] = 1;
        for (std::size_t i = 0; i < basis.elements.size(); ++i)
            chi[basis.elements[i]] = z.pow(static_cast<std::uint64_t>(char_exponent(basis, x, basis.coordinates[i])));
        return chi;
    };
    std::vector<std::vector<K>> chis;
    for (std::size_t a = 0; a < r; ++a) chis.push_back(character(a));
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) m[a][b] = discrete_log(z, basis.exponent, eval(chis[a], chis[b]));
    return m;
}

}  // namespace detail

/// Exponent matrix M of the alternating bicharacter B of a twist T supported on an abelian
/// subgroup K: (χ_a⊗χ_b)(T₂₁⁻¹T) = ζ^{M_ab}, over the basis characters χ_a(g_c) = ζ^{δ_ac e/n_a}.
template <class K>
std::vector<std::vector<long long>> bicharacter_matrix(const HopfAlgebra<K>& h, const FiniteGroup& g,
                                                       const AbelianBasis& basis, const TensorElement<K>& t) {
    const auto inv = twist_invariant(h, t);
    return detail::bicharacter_from(h, g, basis, [&](const auto& x, const auto& y) { return evaluate_characters(inv, x, y); });
}

/// Same matrix without forming T₂₁⁻¹T: χ⊗χ' is an algebra map on k[K]⊗k[K], which contains T
/// and T⁻¹, so (χ⊗χ')(T₂₁⁻¹T) = (χ'⊗χ)(T⁻¹)(χ⊗χ')(T).
template <class K>
std::vector<std::vector<long long>> bicharacter_matrix(const HopfAlgebra<K>& h, const FiniteGroup& g,
                                                       const AbelianBasis& basis, const Twist<K>& t) {
    for (auto fl : t.J().nonzeros()) {
        const auto d = t.J().digits(fl);
        if (!std::binary_search(basis.elements.begin(), basis.elements.end(), d[0]) ||
            !std::binary_search(basis.elements.begin(), basis.elements.end(), d[1]))
            throw Error(ErrorKind::HypothesisViolation, "twist is not supported on the abelian subgroup");
    }
    return detail::bicharacter_from(h, g, basis, [&](const auto& x, const auto& y) {
        return evaluate_characters(t.J_inv(), y, x) * evaluate_characters(t.J(), x, y);
    });
}

}  // namespace hopf
