#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/hopf_algebra.hpp"

namespace hopf {

struct TwistReport {
    bool invertible = false;
    bool twist_eqn_holds = false;
    bool normalized = false;
    std::vector<std::size_t> witness;   // first mismatching basis triple of the twist equation
    std::optional<std::string> counit_scalar;  // (ε⊗ε)(J) when J is not normalized

    bool ok() const { return invertible && twist_eqn_holds && normalized; }
};

template <class K>
class Twist;

namespace detail {
template <class K>
Twist<K> push_forward_twist(const Twist<K>& t, const Matrix<K>& f);
}

/// A verified, normalized twist together with the elements derived from it.
/// Only obtainable through make_twist (or operations that call it).
template <class K>
class Twist {
public:
    const TensorElement<K>& J() const { return j_; }
    const TensorElement<K>& J_inv() const { return j_inv_; }
    const Element<K>& Q() const { return q_; }
    const Element<K>& Q_inv() const { return q_inv_; }
    const Element<K>& u() const { return u_; }
    std::size_t dim() const { return j_.dim(); }

private:
    template <class T>
    friend Twist<T> make_twist(const HopfAlgebra<T>&, const TensorElement<T>&);
    template <class T>
    friend Twist<T> detail::push_forward_twist(const Twist<T>&, const Matrix<T>&);
    Twist(TensorElement<K> j, TensorElement<K> j_inv, Element<K> q, Element<K> q_inv, Element<K> u)
        : j_(std::move(j)), j_inv_(std::move(j_inv)), q_(std::move(q)), q_inv_(std::move(q_inv)), u_(std::move(u)) {}

    TensorElement<K> j_, j_inv_;
    Element<K> q_, q_inv_, u_;
};

template <class K>
TwistReport verify_twist(const HopfAlgebra<K>& h, const TensorElement<K>& j) {
    if (j.dim() != h.dim() || j.order() != 2) throw Error(ErrorKind::ShapeError, "twist must be an element of H⊗H");
    const auto& alg = h.algebra();
    const auto& co = h.coalgebra();
    TwistReport r;
    r.invertible = try_invert(alg, j).has_value();

    const auto lhs = tensor_mul(alg, comul_factor(co, j, 0), outer(j, h.one()));
    const auto rhs = tensor_mul(alg, comul_factor(co, j, 1), outer(h.one(), j));
    r.twist_eqn_holds = true;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!(lhs[i] == rhs[i])) {
            r.twist_eqn_holds = false;
            auto d = lhs.digits(i);
            r.witness = {d[0], d[1], d[2]};
            break;
        }

    const auto one = h.one();
    r.normalized = counit_factor(co, j, 0) == one && counit_factor(co, j, 1) == one;
    if (!r.normalized) r.counit_scalar = scalar_of(counit_factor(co, counit_factor(co, j, 0), 0)).to_string();
    return r;
}

/// Q = S(J¹)J², Q⁻¹ = J⁻¹S(J⁻²), u = Q⁻¹S(Q).
template <class K>
struct QElements {
    Element<K> Q, Q_inv, u;
};

template <class K>
QElements<K> q_elements(const HopfAlgebra<K>& h, const TensorElement<K>& j, const TensorElement<K>& j_inv) {
    const auto& alg = h.algebra();
    Element<K> q = merge_factors(alg, map_factor(j, 0, h.antipode()), 0, 1);
    Element<K> q_inv = merge_factors(alg, map_factor(j_inv, 1, h.antipode()), 0, 1);
    if (!(mul(alg, q, q_inv) == h.one()) || !(mul(alg, q_inv, q) == h.one()))
        throw Error(ErrorKind::InternalInconsistency, "Q_J · Q_J⁻¹ ≠ 1");
    Element<K> u = mul(alg, q_inv, antipode(h, q));
    return {q, q_inv, u};
}

template <class K>
QElements<K> q_elements(const HopfAlgebra<K>& h, const Twist<K>& t) {
    return {t.Q(), t.Q_inv(), t.u()};
}

/// Verifies J and packages it; throws InvalidTwist with the failing property.
template <class K>
Twist<K> make_twist(const HopfAlgebra<K>& h, const TensorElement<K>& j) {
    const auto r = verify_twist(h, j);
    if (!r.invertible) throw Error(ErrorKind::InvalidTwist, "J is not invertible in H⊗H");
    if (!r.twist_eqn_holds) throw Error(ErrorKind::InvalidTwist, "twist equation fails");
    if (!r.normalized) throw Error(ErrorKind::InvalidTwist, "J is not normalized (scalar " + *r.counit_scalar + ")");
    auto j_inv = invert(h.algebra(), j);
    auto q = q_elements(h, j, j_inv);
    return Twist<K>(j, std::move(j_inv), std::move(q.Q), std::move(q.Q_inv), std::move(q.u));
}

namespace detail {

/// (f⊗…⊗f)(t) for a linear map f given as a (possibly rectangular) matrix; orders 1 and 2.
template <class K>
Tensor<K> push_forward(const Tensor<K>& t, const Matrix<K>& f) {
    if (f.cols() != t.dim() || t.order() > 2) throw Error(ErrorKind::ShapeError, "push_forward shape");
    const std::size_t m = f.rows();
    const K zero = t[0] - t[0];
    Tensor<K> out(m, t.order(), zero);
    if (t.order() == 1) {
        for (auto i : t.nonzeros())
            for (std::size_t r = 0; r < m; ++r) out[r] += f(r, i) * t[i];
        return out;
    }
    // first factor, then second
    std::vector<K> half(m * t.dim(), zero);
    for (auto fl : t.nonzeros()) {
        const auto d = t.digits(fl);
        for (std::size_t r = 0; r < m; ++r)
            if (!f(r, d[0]).is_zero()) half[r * t.dim() + d[1]] += f(r, d[0]) * t[fl];
    }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j < t.dim(); ++j) {
            const K v = half[r * t.dim() + j];
            if (v.is_zero()) continue;
            for (std::size_t s = 0; s < m; ++s) out(r, s) += v * f(s, j);
        }
    return out;
}

/// The image of a verified twist under an injective Hopf algebra map f (column i = f(e_i)).
/// Every defining identity is preserved by f, so no re-verification is needed; callers
/// establish that f is a Hopf map.
template <class K>
Twist<K> push_forward_twist(const Twist<K>& t, const Matrix<K>& f) {
    return Twist<K>(push_forward(t.J(), f), push_forward(t.J_inv(), f), push_forward(t.Q(), f), push_forward(t.Q_inv(), f),
                    push_forward(t.u(), f));
}

}  // namespace detail

template <class K>
Twist<K> trivial_twist(const HopfAlgebra<K>& h) {
    return make_twist(h, h.one_tensor());
}

/// c⁻¹J with c = (ε⊗ε)(J).
template <class K>
TensorElement<K> normalize_twist(const HopfAlgebra<K>& h, const TensorElement<K>& j) {
    const auto& co = h.coalgebra();
    K c = scalar_of(counit_factor(co, counit_factor(co, j, 0), 0));
    if (c.is_zero()) throw Error(ErrorKind::ZeroCounitScalar, "(ε⊗ε)(J) = 0");
    if (!try_invert(h.algebra(), j)) throw Error(ErrorKind::NotInvertible, "J is not invertible");
    return c.inverse() * j;
}

/// J^x = Δ(x) J (x⁻¹⊗x⁻¹)
template <class K>
Twist<K> gauge_transform(const HopfAlgebra<K>& h, const Twist<K>& t, const Element<K>& x) {
    if (!counit(h, x).is_one()) throw Error(ErrorKind::CounitNotOne, "gauge element must have ε(x) = 1");
    auto x_inv = try_invert(h.algebra(), x);
    if (!x_inv) throw Error(ErrorKind::NotInvertible, "gauge element is not invertible");
    const auto& alg = h.algebra();
    auto jx = tensor_mul(alg, tensor_mul(alg, comul(h, x), t.J()), outer(*x_inv, *x_inv));
    return make_twist(h, jx);
}

/// H^J: Δ^J(h) = J⁻¹Δ(h)J, S^J(h) = Q⁻¹S(h)Q; the result is re-verified.
template <class K>
HopfAlgebra<K> twist_hopf(const HopfAlgebra<K>& h, const Twist<K>& t) {
    const std::size_t n = h.dim();
    const auto& alg = h.algebra();
    std::vector<K> comul_j(n * n * n, h.field().zero());
    Matrix<K> s(n, n, h.field().zero());
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = h.basis(i);
        auto d = tensor_mul(alg, tensor_mul(alg, t.J_inv(), comul(h, e)), t.J());
        for (std::size_t k = 0; k < n * n; ++k) comul_j[i * n * n + k] = d[k];
        auto si = mul(alg, mul(alg, t.Q_inv(), antipode(h, e)), t.Q());
        for (std::size_t k = 0; k < n; ++k) s(k, i) = si[k];
    }
    HopfAlgebra<K> out(h.field(), h.basis_names(), alg.mul_tensor(), h.unit(), comul_j, h.counit(), s);
    const auto report = verify_hopf(out);
    if (const auto* f = report.first_failure()) throw Error(ErrorKind::AxiomFailure, "H^J fails " + f->axiom);
    return out;
}

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::vector<std::size_t> witness;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

template <class K>
IdentityCheck compare(std::string name, const Tensor<K>& a, const Tensor<K>& b) {
    IdentityCheck c{std::move(name)};
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) {
            c.pass = false;
            auto d = a.digits(i);
            c.witness.assign(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(a.order()));
            break;
        }
    return c;
}

}  // namespace detail

/// The identities derived from the twist equation: the four product
/// rearrangements, Δ(Q), Δ(u), Δ(W) for W = Q⁻¹, and, when a second twist L is
/// given, the matching identity for V = S(Q_L).
template <class K>
IdentityReport check_twist_identities(const HopfAlgebra<K>& h, const Twist<K>& t, const Twist<K>* l = nullptr) {
    const auto& alg = h.algebra();
    const auto& co = h.coalgebra();
    const auto& s = h.antipode();
    const Matrix<K> s2 = s * s;
    const auto one = h.one();
    const auto& j = t.J();
    const auto& ji = t.J_inv();
    IdentityReport r;

    {
        auto lhs = merge_factors(alg, map_factor(comul_factor(co, j, 1), 0, s), 0, 1);
        auto rhs = tensor_mul(alg, outer(t.Q(), one), ji);
        r.checks.push_back(detail::compare("S(J1)J2_(1) ⊗ J2_(2) = (Q⊗1)J⁻¹", lhs, rhs));
    }
    {
        auto lhs = merge_factors(alg, map_factor(map_factor(comul_factor(co, j, 0), 0, s), 1, s), 1, 2);
        auto rhs = tensor_mul(alg, map_all(ji, s), outer(one, t.Q()));
        r.checks.push_back(detail::compare("S(J1_(1)) ⊗ S(J1_(2))J2 = (S⊗S)(J⁻¹)(1⊗Q)", lhs, rhs));
    }
    {
        auto lhs = merge_factors(alg, map_factor(comul_factor(co, ji, 0), 2, s), 1, 2);
        auto rhs = tensor_mul(alg, j, outer(one, t.Q_inv()));
        r.checks.push_back(detail::compare("J⁻1_(1) ⊗ J⁻1_(2)S(J⁻2) = J(1⊗Q⁻¹)", lhs, rhs));
    }
    {
        auto lhs = merge_factors(alg, map_factor(map_factor(comul_factor(co, ji, 1), 1, s), 2, s), 0, 1);
        auto rhs = tensor_mul(alg, outer(t.Q_inv(), one), map_all(j, s));
        r.checks.push_back(detail::compare("J⁻1 S(J⁻2_(1)) ⊗ S(J⁻2_(2)) = (Q⁻¹⊗1)(S⊗S)(J)", lhs, rhs));
    }
    {
        auto rhs = tensor_mul(alg, {map_all(flip(ji), s), outer(t.Q(), t.Q()), ji});
        r.checks.push_back(detail::compare("Δ(Q) = (S⊗S)(J21⁻¹)(Q⊗Q)J⁻¹", comul(h, t.Q()), rhs));
    }
    {
        auto rhs = tensor_mul(alg, {j, outer(t.u(), t.u()), map_all(ji, s2)});
        r.checks.push_back(detail::compare("Δ(u) = J(u⊗u)(S²⊗S²)(J⁻¹)", comul(h, t.u()), rhs));
    }
    {
        const auto& w = t.Q_inv();
        auto rhs = tensor_mul(alg, {j, outer(w, w), map_all(flip(j), s)});
        r.checks.push_back(detail::compare("Δ(W) = J(W⊗W)(S⊗S)(J21)", comul(h, w), rhs));
    }
    if (l) {
        const auto v = antipode(h, l->Q());
        auto rhs = tensor_mul(alg, {map_all(flip(l->J_inv()), s), outer(v, v), map_all(l->J_inv(), s2)});
        r.checks.push_back(detail::compare("Δ(V) = (S⊗S)(L21⁻¹)(V⊗V)(S²⊗S²)(L⁻¹)", comul(h, v), rhs));
    }
    return r;
}

}  // namespace hopf
