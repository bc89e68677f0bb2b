#pragma once

// Skolem–Noether maps for non-degenerate twists on group algebras and the dual twist on k^G.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hopf/cotwist.hpp"
#include "hopf/group_algebra.hpp"
#include "hopf/integrals.hpp"

namespace hopf {

/// π, π̄: H → R = (H^{(J)})*, stored as columns indexed by group elements.
template <class K>
struct SkolemNoetherMap {
    Algebra<K> R;
    Matrix<K> pi;
    Matrix<K> pibar;

    Element<K> at(std::size_t g) const { return Element<K>::from_vector(pi.column(g)); }
    Element<K> bar(std::size_t g) const { return Element<K>::from_vector(pibar.column(g)); }
};

template <class K>
struct DualTwist {
    Twist<K> c;  // on dual_hopf(H), c(h⊗g) at entry (h, g)
    std::optional<bool> gauge_independent;  // empty when G is not abelian
};

namespace detail {

/// Column j = e_j · b.
template <class K>
Matrix<K> right_multiplication(const Algebra<K>& alg, const Element<K>& b) {
    const std::size_t n = alg.dim();
    Matrix<K> m(n, n, alg.field().zero());
    for (std::size_t j = 0; j < n; ++j)
        for (auto i : b.nonzeros())
            for (const auto& t : alg.terms(j, i)) m(t.k, j) += b[i] * t.c;
    return m;
}

/// ⟨a·h, c⟩ = ⟨a, hc⟩ for h = e_g.
template <class K>
Element<K> act_right(const HopfAlgebra<K>& h, const Element<K>& a, std::size_t g) {
    Element<K> out = h.zero_element();
    for (std::size_t c = 0; c < h.dim(); ++c)
        for (const auto& t : h.algebra().terms(g, c)) out[c] += t.c * a[t.k];
    return out;
}

template <class K>
void require_group_algebra(const HopfAlgebra<K>& h, const FiniteGroup& g) {
    if (h.dim() != g.order() || !same_structure(h, group_algebra(g, h.field())))
        throw Error(ErrorKind::NotGroupAlgebra, "H is not k[G] in the group basis");
}

/// The scalar s with x = s·y, or NotScalar.
template <class K>
K ratio(const Element<K>& x, const Element<K>& y, const char* what) {
    auto s = proportionality(x.coefficients(), y.coefficients());
    if (!s) throw Error(ErrorKind::NotScalar, what);
    return *s;
}

/// c(h,g) with π(hg) = c(h,g)π(h)π(g), from products of generators with all of G.
template <class K>
Matrix<K> cocycle_values(const FiniteGroup& g, const SkolemNoetherMap<K>& sn) {
    const std::size_t n = g.order();
    const auto& f = sn.R.field();
    // BFS tree: h = gen[h]·parent[h].
    std::vector<std::size_t> gens, parent(n, n), gen(n, n);
    Subgroup reached{g.identity()};
    while (reached.size() < n) {
        std::size_t next = 0;
        while (std::binary_search(reached.begin(), reached.end(), next)) ++next;
        gens.push_back(next);
        reached = g.closure(gens);
    }
    std::vector<std::size_t> order{g.identity()};
    parent[g.identity()] = g.identity();
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto s : gens) {
            const auto h = g.mul(s, order[i]);
            if (parent[h] == n) {
                parent[h] = order[i];
                gen[h] = s;
                order.push_back(h);
            }
        }
    // t[s][x]: π(sx) = t·π(s)π(x).
    std::vector<std::vector<K>> t(gens.size(), std::vector<K>(n, f.zero()));
    for (std::size_t si = 0; si < gens.size(); ++si)
        for (std::size_t x = 0; x < n; ++x)
            t[si][x] = ratio(sn.at(g.mul(gens[si], x)), mul(sn.R, sn.at(gens[si]), sn.at(x)), "π(sx) is not a multiple of π(s)π(x)");
    auto index = [&](std::size_t s) { return static_cast<std::size_t>(std::find(gens.begin(), gens.end(), s) - gens.begin()); };
    Matrix<K> c(n, n, f.zero());
    for (std::size_t x = 0; x < n; ++x) c(g.identity(), x) = f.one();
    for (std::size_t i = 1; i < order.size(); ++i) {
        const auto h = order[i], hp = parent[h], si = index(gen[h]);
        for (std::size_t x = 0; x < n; ++x)
            c(h, x) = c(hp, x) * t[si][g.mul(hp, x)] / t[si][hp];
    }
    return c;
}

/// c on H* = k^G as a tensor in the dual basis.
template <class K>
TensorElement<K> cocycle_tensor(const Matrix<K>& c) {
    const std::size_t n = c.rows();
    TensorElement<K> out(n, 2, c(0, 0) - c(0, 0));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t x = 0; x < n; ++x) out(h, x) = c(h, x);
    return out;
}

}  // namespace detail

/// π(g) solves π(g)(a·g) = aπ(g) in R; Schur fixes it up to a scalar, normalized by first nonzero
/// coordinate 1. π̄(g) = π(g)⁻¹. Both defining identities are checked on all basis elements.
template <class K>
SkolemNoetherMap<K> skolem_noether(const HopfAlgebra<K>& h, const FiniteGroup& g, const Twist<K>& j, std::uint64_t seed = 0) {
    detail::require_group_algebra(h, g);
    const auto tc = twisted_coalgebra(h, j);
    if (!is_simple(tc, seed)) throw Error(ErrorKind::DegenerateTwist, "(H^(J))* is not simple");
    const std::size_t n = h.dim();
    const auto& f = h.field();
    SkolemNoetherMap<K> sn{dual_algebra(tc), Matrix<K>(n, n, f.zero()), Matrix<K>(n, n, f.zero())};
    const auto& r = sn.R;

    std::mt19937_64 rng(seed);
    std::vector<Element<K>> probes;
    std::vector<Matrix<K>> probe_left;
    auto probe = [&](std::size_t i) {
        while (probes.size() <= i) {
            Element<K> a(n, 1, f.zero());
            for (std::size_t k = 0; k < n; ++k) a[k] = detail::random_scalar<K>(f, rng);
            probes.push_back(a);
            probe_left.push_back(left_multiplication(r, a));
        }
        return probes[i];
    };
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<std::vector<K>> ns;
        std::vector<std::vector<K>> rows;
        for (std::size_t used = 0;; ++used) {
            if (used > 4 * n + 8) throw Error(ErrorKind::SchurFailure, "conjugation system does not pin π(g)");
            const auto a = probe(used);
            const auto block = detail::right_multiplication(r, detail::act_right(h, a, x));
            const auto& la = probe_left[used];
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<K> row(n);
                for (std::size_t k = 0; k < n; ++k) row[k] = block(i, k) - la(i, k);
                rows.push_back(std::move(row));
            }
            Matrix<K> sys(rows.size(), n, f.zero());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t k = 0; k < n; ++k) sys(i, k) = rows[i][k];
            ns = nullspace(sys);
            if (ns.size() <= 1) break;
        }
        if (ns.empty()) throw Error(ErrorKind::SchurFailure, "no solution for π(g)");
        const auto p = normalize_first_nonzero(ns[0]);
        for (std::size_t k = 0; k < n; ++k) sn.pi(k, x) = p[k];
    }
    // π(e) = 1 after normalization: 1_R = ε is the all-ones vector on group-likes.
    if (!(sn.at(g.identity()) == r.one())) throw Error(ErrorKind::InternalInconsistency, "π(e) ≠ 1");

    for (std::size_t x = 0; x < n; ++x) {
        const auto p = sn.at(x);
        // π(g)π(g⁻¹) is a scalar, so π(g)⁻¹ is a multiple of π(g⁻¹).
        const auto prod = mul(r, p, sn.at(g.inv(x)));
        const auto s = proportionality(prod.coefficients(), r.one().coefficients());
        if (!s || s->is_zero()) throw Error(ErrorKind::SchurFailure, "π(g) is not invertible");
        const auto bar = s->inverse() * sn.at(g.inv(x));
        for (std::size_t k = 0; k < n; ++k) sn.pibar(k, x) = bar[k];
        if (!(mul(r, p, bar) == r.one()) || !(mul(r, bar, p) == r.one()))
            throw Error(ErrorKind::InternalInconsistency, "π̄ is not the convolution inverse");
        for (std::size_t a = 0; a < n; ++a) {
            const auto ea = r.basis(a);
            if (!(mul(r, p, detail::act_right(h, ea, x)) == mul(r, ea, p)))
                throw Error(ErrorKind::SchurFailure, "inner action fails on a basis element");
        }
    }
    return sn;
}

/// c(h⊗g) = π(hg)π̄(g)π̄(h) on H* = k^G; checks scalarity, the 2-cocycle identity and the twist
/// equations, and for abelian G that a rescaled π gives the same invariant T₂₁⁻¹T.
template <class K>
DualTwist<K> dual_twist(const HopfAlgebra<K>& h, const FiniteGroup& g, const SkolemNoetherMap<K>& sn, std::uint64_t seed = 0) {
    detail::require_group_algebra(h, g);
    const std::size_t n = h.dim();
    const auto c = detail::cocycle_values(g, sn);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t x = 0; x < n; ++x)
                if (!(c(g.mul(a, b), x) * c(a, b) == c(a, g.mul(b, x)) * c(b, x)))
                    throw Error(ErrorKind::CocycleFailure, "2-cocycle identity fails");
    const auto dual = dual_hopf(h);
    const auto t = detail::cocycle_tensor(c);
    if (!verify_twist(dual, t).ok()) throw Error(ErrorKind::InternalInconsistency, "c is not a twist on H*");
    DualTwist<K> out{make_twist(dual, t), std::nullopt};
    if (g.is_abelian()) {
        // π′(x) = η(x)π(x): c′(a,b) = η(ab)η(a)⁻¹η(b)⁻¹c(a,b), recomputed from π′.
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::vector<K> eta(n, h.field().one());
        for (std::size_t x = 0; x < n; ++x)
            if (x != g.identity())
                do eta[x] = detail::random_scalar<K>(h.field(), rng);
                while (eta[x].is_zero());
        auto moved = sn;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t k = 0; k < n; ++k) {
                moved.pi(k, x) = eta[x] * sn.pi(k, x);
                moved.pibar(k, x) = eta[x].inverse() * sn.pibar(k, x);
            }
        const auto t2 = detail::cocycle_tensor(detail::cocycle_values(g, moved));
        out.gauge_independent = twist_invariant(dual, out.c) == twist_invariant(dual, make_twist(dual, t2));
    }
    return out;
}

template <class K>
DualTwist<K> dual_twist(const HopfAlgebra<K>& h, const FiniteGroup& g, const Twist<K>& j, std::uint64_t seed = 0) {
    return dual_twist(h, g, skolem_noether(h, g, j, seed), seed);
}

/// Columns χ_y(x) = ζ^{⟨y,x⟩}: the group-likes of k^G for abelian G, indexed so that the
/// rewritten H* is k[G] again.
template <class K>
Matrix<K> character_basis(const FieldOf<K>& f, const FiniteGroup& g, const AbelianBasis& basis) {
    const std::size_t n = g.order();
    const K z = f.primitive_root_of_unity(basis.exponent);
    Matrix<K> p(n, n, f.zero());
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            p(basis.elements[x], basis.elements[y]) =
                z.pow(static_cast<std::uint64_t>(detail::char_exponent(basis, basis.coordinates[y], basis.coordinates[x])));
    return p;
}

/// D_H(J) carried to k[G] through the character basis.
template <class K>
Twist<K> dual_twist_on_characters(const HopfAlgebra<K>& h, const FiniteGroup& g, const Twist<K>& j, std::uint64_t seed = 0) {
    Subgroup all(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) all[x] = x;
    const auto basis = abelian_basis(g, all);
    const auto d = dual_twist(h, g, j, seed);
    if (d.gauge_independent && !*d.gauge_independent)
        throw Error(ErrorKind::InternalInconsistency, "dual twist class depends on π");
    const auto p = character_basis<K>(h.field(), g, basis);
    if (!same_structure(change_basis(dual_hopf(h), p), h))
        throw Error(ErrorKind::InternalInconsistency, "character basis does not identify k^G with k[G]");
    // P⁻¹ is a Hopf isomorphism k^G → k[G] by the check above.
    return detail::push_forward_twist(d.c, inverse(p));
}

struct RoundTrip {
    std::vector<std::vector<long long>> original, dual, back;
    bool ok = false;
};

/// M(J), M(D_H J) and M(D_{H*} D_H J) as alternating bicharacter exponent matrices; ok when the
/// last equals the first.
template <class K>
RoundTrip roundtrip_DH(const HopfAlgebra<K>& h, const FiniteGroup& g, const Twist<K>& j, std::uint64_t seed = 0) {
    if (!g.is_abelian()) throw Error(ErrorKind::HypothesisViolation, "round trip needs an abelian group");
    Subgroup all(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) all[x] = x;
    const auto basis = abelian_basis(g, all);
    RoundTrip r;
    r.original = bicharacter_matrix(h, g, basis, j);
    const auto d = dual_twist_on_characters(h, g, j, seed);
    r.dual = bicharacter_matrix(h, g, basis, d);
    const auto dd = dual_twist_on_characters(h, g, d, seed);
    r.back = bicharacter_matrix(h, g, basis, dd);
    r.ok = r.back == r.original;
    return r;
}

}  // namespace hopf
