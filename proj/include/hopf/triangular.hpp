#pragma once

// Triangular structures on twisted group algebras: R = J₂₁⁻¹J R_u, the
// quasitriangular axioms, and the Drinfeld element.

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "hopf/group_algebra.hpp"
#include "hopf/cotwist.hpp"

namespace hopf {

namespace detail {

template <class K>
void require_central_involution(const HopfAlgebra<K>& h, const Element<K>& u) {
    const auto& alg = h.algebra();
    const auto one = h.one();
    if (!(mul(alg, u, u) == one)) throw Error(ErrorKind::HypothesisViolation, "u² ≠ 1");
    if (!(comul(h, u) == outer(u, u))) throw Error(ErrorKind::HypothesisViolation, "u is not group-like");
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (!(mul(alg, u, h.basis(i)) == mul(alg, h.basis(i), u)))
            throw Error(ErrorKind::HypothesisViolation, "u is not central");
    if (h.field().characteristic() == 2 && !(u == one))
        throw Error(ErrorKind::HypothesisViolation, "u must be 1 in characteristic 2");
}

}  // namespace detail

/// R_u = ½(1⊗1 + 1⊗u + u⊗1 − u⊗u); 1⊗1 when u = 1.
template <class K>
TensorElement<K> r_u(const HopfAlgebra<K>& h, const Element<K>& u) {
    detail::require_central_involution(h, u);
    const auto one = h.one();
    if (u == one) return h.one_tensor();
    auto sum = outer(one, one) + outer(one, u) + outer(u, one) - outer(u, u);
    return h.field().from_int(2).inverse() * sum;
}

/// R = J₂₁⁻¹ J R_u, a triangular structure on H^J for H = k[G] and u a central group-like involution.
template <class K>
TensorElement<K> r_matrix(const HopfAlgebra<K>& h, const Twist<K>& j, const Element<K>& u) {
    if (!is_cocommutative(h.coalgebra())) throw Error(ErrorKind::HypothesisViolation, "H must be cocommutative");
    return tensor_mul(h.algebra(), {flip(j.J_inv()), j.J(), r_u(h, u)});
}

/// (Δ⊗id)(R) = R₁₃R₂₃, (id⊗Δ)(R) = R₁₃R₁₂, RΔ(h) = Δ^{op}(h)R on every basis element,
/// and R₂₁R = 1 (triangularity), all evaluated in the given Hopf algebra.
template <class K>
IdentityReport verify_quasitriangular(const HopfAlgebra<K>& h, const TensorElement<K>& r) {
    const auto& alg = h.algebra();
    const auto& co = h.coalgebra();
    IdentityReport rep;
    const auto r13 = embed(alg, r, 3, {0, 2});
    const auto r23 = embed(alg, r, 3, {1, 2});
    const auto r12 = embed(alg, r, 3, {0, 1});
    rep.checks.push_back(detail::compare("(Δ⊗id)(R) = R13 R23", comul_factor(co, r, 0), tensor_mul(alg, r13, r23)));
    rep.checks.push_back(detail::compare("(id⊗Δ)(R) = R13 R12", comul_factor(co, r, 1), tensor_mul(alg, r13, r12)));
    IdentityCheck c{"R Δ(h) = Δop(h) R"};
    for (std::size_t i = 0; i < h.dim() && c.pass; ++i) {
        const auto d = comul(h, h.basis(i));
        auto sub = detail::compare("", tensor_mul(alg, r, d), tensor_mul(alg, flip(d), r));
        if (!sub.pass) {
            c.pass = false;
            c.witness = {i};
        }
    }
    rep.checks.push_back(c);
    rep.checks.push_back(detail::compare("R21 R = 1", tensor_mul(alg, flip(r), r), h.one_tensor()));
    return rep;
}

/// u_D = m(S⊗id)(R₂₁) = S(R²)R¹.
template <class K>
Element<K> drinfeld_element(const HopfAlgebra<K>& h, const TensorElement<K>& r) {
    return merge_factors(h.algebra(), map_factor(flip(r), 0, h.antipode()), 0, 1);
}

/// (G, K, V, u): K a p′-subgroup of square order carrying the projective class V
/// (a symplectic form on the characters of abelian K), u central with u² = 1.
struct TriangularQuadruple {
    FiniteGroup G;
    SymplecticTwistSpec V;
    std::size_t u = 0;
};

template <class K>
struct TriangularHopf {
    HopfAlgebra<K> base;  // k[G]
    Twist<K> J;
    HopfAlgebra<K> H;  // k[G]^J
    TensorElement<K> R;
};

/// H(G,K,V,u) = (k[G]^{J(V)}, J(V)₂₁⁻¹J(V)R_u).
template <class F>
TriangularHopf<typename F::Scalar> triangular_hopf(const TriangularQuadruple& q, const F& field) {
    const auto& g = q.G;
    const std::size_t order = q.V.K.size();
    const auto p = field.characteristic();
    if (p != 0 && order % p == 0) throw Error(ErrorKind::HypothesisViolation, "K is not a p′-subgroup");
    const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(order))));
    if (root * root != order) throw Error(ErrorKind::HypothesisViolation, "|K| is not a square");
    if (!g.is_central(q.u) || g.mul(q.u, q.u) != g.identity())
        throw Error(ErrorKind::HypothesisViolation, "u must be a central element with u² = 1");
    if (p == 2 && q.u != g.identity()) throw Error(ErrorKind::HypothesisViolation, "u must be 1 in characteristic 2");
    auto base = group_algebra(g, field);
    auto j = symplectic_twist(base, g, q.V);
    auto r = r_matrix(base, j, base.basis(q.u));
    auto hj = twist_hopf(base, j);
    return {std::move(base), std::move(j), std::move(hj), std::move(r)};
}

}  // namespace hopf
