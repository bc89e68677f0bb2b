#pragma once

// H-module coalgebras isomorphic to the regular module, and the twist they determine.

#include <string>
#include <vector>

#include "hopf/cotwist.hpp"

namespace hopf {

/// A coalgebra C with a left H-action and a module isomorphism i: C → H (column j = i(e_j)).
template <class K>
struct ModuleCoalgebra {
    HopfAlgebra<K> parent;
    Coalgebra<K> coalgebra;
    std::vector<K> action;  // action[(h·n + c)·n + d]: coefficient of e_d in e_h · e_c
    Matrix<K> iso;

    K act(std::size_t h, std::size_t c, std::size_t d) const {
        const std::size_t n = parent.dim();
        return action[(h * n + c) * n + d];
    }
};

namespace detail {

template <class K>
Element<K> act_on(const ModuleCoalgebra<K>& m, std::size_t h, const Element<K>& c) {
    const std::size_t n = m.parent.dim();
    Element<K> out = m.parent.zero_element();
    for (auto i : c.nonzeros())
        for (std::size_t d = 0; d < n; ++d) out[d] += c[i] * m.act(h, i, d);
    return out;
}

}  // namespace detail

/// Δ_C(h·c) = Δ(h)·Δ_C(c), ε_C(h·c) = ε(h)ε_C(c), and i(h·c) = h i(c), on basis pairs.
template <class K>
IdentityReport check_module_coalgebra(const ModuleCoalgebra<K>& m) {
    const auto& h = m.parent;
    const std::size_t n = h.dim();
    IdentityReport r;
    IdentityCheck coalg{"coalgebra"}, comul_lin{"comul_linear"}, counit_lin{"counit_linear"}, inter{"intertwines"};
    if (auto bad = first_coalgebra_failure(m.coalgebra); bad != n) {
        coalg.pass = false;
        coalg.witness = {bad};
    }
    for (std::size_t x = 0; x < n; ++x) {
        const auto dx = comul(h, h.basis(x));
        for (std::size_t c = 0; c < n; ++c) {
            const auto e = h.basis(c);
            const auto xc = detail::act_on(m, x, e);
            if (comul_lin.pass) {
                // Δ(h)·Δ_C(c): act factorwise.
                const auto dc = comul(m.coalgebra, e);
                TensorElement<K> rhs(n, 2, h.field().zero());
                for (auto f1 : dx.nonzeros()) {
                    auto a = dx.digits(f1);
                    for (auto f2 : dc.nonzeros()) {
                        auto b = dc.digits(f2);
                        const K coeff = dx[f1] * dc[f2];
                        for (std::size_t u = 0; u < n; ++u) {
                            const K cu = m.act(a[0], b[0], u);
                            if (cu.is_zero()) continue;
                            for (std::size_t v = 0; v < n; ++v) {
                                const K cv = m.act(a[1], b[1], v);
                                if (!cv.is_zero()) rhs(u, v) += coeff * cu * cv;
                            }
                        }
                    }
                }
                if (!(comul(m.coalgebra, xc) == rhs)) comul_lin = {comul_lin.name, false, {x, c}};
            }
            if (counit_lin.pass) {
                K lhs = h.field().zero();
                for (std::size_t d = 0; d < n; ++d) lhs += m.coalgebra.counit()[d] * xc[d];
                if (!(lhs == h.counit()[x] * m.coalgebra.counit()[c])) counit_lin = {counit_lin.name, false, {x, c}};
            }
            if (inter.pass && !(apply(m.iso, xc) == mul(h, h.basis(x), apply(m.iso, e)))) inter = {inter.name, false, {x, c}};
        }
    }
    r.checks = {coalg, comul_lin, counit_lin, inter};
    return r;
}

/// C = H^{(J)}: the regular module with Δ_C(c) = Δ(c)J and i = id.
template <class K>
ModuleCoalgebra<K> from_twist(const HopfAlgebra<K>& h, const Twist<K>& j) {
    auto c = twisted_coalgebra(h, j);
    ModuleCoalgebra<K> m{h, c.coalgebra(), h.algebra().mul_tensor(), Matrix<K>::identity(h.dim(), h.field())};
    if (const auto r = check_module_coalgebra(m); !r.all_pass())
        throw Error(ErrorKind::InternalInconsistency, "H^(J) is not an H-module coalgebra");
    return m;
}

/// The same module coalgebra identified with H through c ↦ i(c)·x⁻¹ (so that i⁻¹(1) = i_old⁻¹(x)).
template <class K>
ModuleCoalgebra<K> reidentify(const ModuleCoalgebra<K>& m, const Element<K>& x) {
    const auto& h = m.parent;
    const auto x_inv = invert(h.algebra(), x);
    Matrix<K> right(h.dim(), h.dim(), h.field().zero());
    for (std::size_t j = 0; j < h.dim(); ++j) {
        const auto col = mul(h, h.basis(j), x_inv);
        for (std::size_t i = 0; i < h.dim(); ++i) right(i, j) = col[i];
    }
    ModuleCoalgebra<K> out = m;
    out.iso = right * m.iso;
    return out;
}

/// J = (i⊗i)Δ_C(i⁻¹(1)). Throws GaloisFailure when J is not invertible and AxiomFailure when
/// it is not a twist.
template <class K>
TensorElement<K> extract_twist(const ModuleCoalgebra<K>& m) {
    const auto& h = m.parent;
    const auto inv = try_inverse(m.iso);
    if (!inv) throw Error(ErrorKind::HypothesisViolation, "i is not invertible");
    const auto c1 = apply(*inv, h.one());
    const auto j = map_all(comul(m.coalgebra, c1), m.iso);
    if (!try_invert(h.algebra(), j)) throw Error(ErrorKind::GaloisFailure, "J is not invertible");
    const auto rep = verify_twist(h, j);
    if (!rep.ok()) throw Error(ErrorKind::AxiomFailure, "extracted J is not a twist");
    return j;
}

struct CorrespondenceReport {
    bool ok = true;
    bool corollary_checked = false;
    std::string failed;
    std::size_t sample = 0;
};

/// For each x: extract_twist(from_twist(H,J)) = J, re-identifying by x yields exactly J^x, and
/// from_twist(H, J^x) is the re-identified coalgebra transported along i. For cosemisimple H the
/// dual of H^{(J)} is also checked to have zero radical.
template <class K>
CorrespondenceReport verify_correspondence(const HopfAlgebra<K>& h, const Twist<K>& j, const std::vector<Element<K>>& samples,
                                           std::uint64_t seed = 0) {
    CorrespondenceReport r;
    auto fail = [&](const char* what, std::size_t s) {
        if (r.ok) {
            r.ok = false;
            r.failed = what;
            r.sample = s;
        }
    };
    const auto c = from_twist(h, j);
    if (!(extract_twist(c) == j.J())) fail("round_trip", 0);
    const std::size_t n = h.dim();
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& x = samples[s];
        const auto moved = reidentify(c, x);
        const auto jx = extract_twist(moved);
        const auto expect = gauge_transform(h, j, x);
        if (!(jx == expect.J())) fail("gauge_covariance", s);
        // i: C → H^{(J^x)} is a coalgebra map: (i⊗i)Δ_C = Δ_{J^x} i.
        const auto target = from_twist(h, expect);
        for (std::size_t b = 0; b < n; ++b) {
            const auto lhs = map_all(comul(c.coalgebra, h.basis(b)), moved.iso);
            const auto rhs = comul(target.coalgebra, apply(moved.iso, h.basis(b)));
            if (!(lhs == rhs)) {
                fail("coalgebra_isomorphism", s);
                break;
            }
        }
    }
    const auto d = integrals_on(h);
    if (is_cosemisimple_via_integral(h, d)) {
        r.corollary_checked = true;
        if (decompose(dual_algebra(c.coalgebra), seed).radical_dim != 0) fail("cosemisimplicity", 0);
    }
    return r;
}

}  // namespace hopf
