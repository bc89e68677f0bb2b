#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/twisting.hpp"

namespace hopf {

/// Left/right integrals on H (functionals) and in H (elements), each
/// normalized so the first nonzero coordinate is 1.
template <class K>
struct IntegralData {
    Functional<K> lambda;
    Functional<K> rho;
    Element<K> Lambda_left;
    Element<K> Lambda_right;
};

namespace detail {

template <class K>
std::vector<K> unique_ray(const Matrix<K>& system, const char* what) {
    auto ns = nullspace(system);
    if (ns.size() != 1)
        throw Error(ErrorKind::DegenerateIntegralSpace, std::string(what) + " space has dimension " + std::to_string(ns.size()));
    return normalize_first_nonzero(ns[0]);
}

}  // namespace detail

template <class K>
IntegralData<K> integrals_on(const HopfAlgebra<K>& h) {
    const std::size_t n = h.dim();
    const auto& f = h.field();
    const auto& unit = h.unit();
    const auto& eps = h.counit();
    // Rows indexed by (i, j), columns by the unknown coordinate.
    Matrix<K> left(n * n, n, f.zero()), right(n * n, n, f.zero()), in_left(n * n, n, f.zero()), in_right(n * n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                left(row, k) += h.comul(i, j, k);   // Σ_k δ[i,j,k] λ_k  (coefficient of e_j)
                right(row, k) += h.comul(i, k, j);  // Σ_k δ[i,k,j] ρ_k
                in_left(row, k) += h.mul(i, k, j);  // e_i Λ, coefficient of e_j
                in_right(row, k) += h.mul(k, i, j); // Λ e_i
            }
            left(row, i) -= unit[j];
            right(row, i) -= unit[j];
            in_left(row, j) -= eps[i];
            in_right(row, j) -= eps[i];
        }
    IntegralData<K> out{{detail::unique_ray(left, "left integral on H")},
                        {detail::unique_ray(right, "right integral on H")},
                        Element<K>::from_vector(detail::unique_ray(in_left, "left integral in H")),
                        Element<K>::from_vector(detail::unique_ray(in_right, "right integral in H"))};
    return out;
}

/// c with v = c·w, if any (w nonzero).
template <class K>
std::optional<K> proportionality(const std::vector<K>& v, const std::vector<K>& w) {
    std::size_t pivot = w.size();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!w[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot == w.size()) return std::nullopt;
    K c = v[pivot] / w[pivot];
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!(v[i] == c * w[i])) return std::nullopt;
    return c;
}

template <class K>
bool is_unimodular(const IntegralData<K>& d) {
    return proportionality(d.Lambda_left.coefficients(), d.Lambda_right.coefficients()).has_value();
}

template <class K>
bool is_unimodular(const HopfAlgebra<K>& h) {
    return is_unimodular(integrals_on(h));
}

/// Maschke: ε(Λ) ≠ 0.
template <class K>
bool is_semisimple_via_integral(const HopfAlgebra<K>& h, const IntegralData<K>& d) {
    return !counit(h, d.Lambda_left).is_zero();
}

/// λ(1) ≠ 0.
template <class K>
bool is_cosemisimple_via_integral(const HopfAlgebra<K>& h, const IntegralData<K>& d) {
    return !d.lambda(h.one()).is_zero();
}

struct NakayamaReport {
    bool lambda_s2 = true;         // λ(gh) = λ(h S²(g))
    bool rho_s2 = true;            // ρ(gh) = ρ(S²(h) g)
    bool left_invariance = true;   // g₁ λ(h g₂) = S(h₁) λ(h₂ g)
    bool right_invariance = true;  // ρ(g₁ h) g₂ = ρ(g h₁) S(h₂)
    bool frobenius = true;         // (h, g) ↦ λ(hg) non-degenerate
    std::string failed;
    std::vector<std::size_t> witness;

    bool ok() const { return lambda_s2 && rho_s2 && left_invariance && right_invariance && frobenius; }
};

template <class K>
NakayamaReport nakayama_check(const HopfAlgebra<K>& h, const IntegralData<K>& d) {
    const std::size_t n = h.dim();
    const auto& alg = h.algebra();
    const Matrix<K> s2 = h.antipode() * h.antipode();
    NakayamaReport r;
    auto fail = [&](bool& flag, const char* name, std::vector<std::size_t> w) {
        if (flag && r.failed.empty()) {
            r.failed = name;
            r.witness = std::move(w);
        }
        flag = false;
    };
    Matrix<K> frob(n, n, h.field().zero());
    for (std::size_t gi = 0; gi < n; ++gi) {
        const auto g = h.basis(gi);
        const auto dg = comul(h, g);
        for (std::size_t hi = 0; hi < n; ++hi) {
            const auto x = h.basis(hi);
            const auto gx = mul(alg, g, x);
            frob(gi, hi) = d.lambda(gx);
            if (r.lambda_s2 && !(d.lambda(gx) == d.lambda(mul(alg, x, apply(s2, g))))) fail(r.lambda_s2, "lambda_s2", {gi, hi});
            if (r.rho_s2 && !(d.rho(gx) == d.rho(mul(alg, apply(s2, x), g)))) fail(r.rho_s2, "rho_s2", {gi, hi});
            const auto dx = comul(h, x);
            if (r.left_invariance) {
                Element<K> l = h.zero_element(), rr = h.zero_element();
                for (auto fl : dg.nonzeros()) {
                    auto dd = dg.digits(fl);
                    l += (dg[fl] * d.lambda(mul(alg, x, h.basis(dd[1])))) * h.basis(dd[0]);
                }
                for (auto fl : dx.nonzeros()) {
                    auto dd = dx.digits(fl);
                    rr += (dx[fl] * d.lambda(mul(alg, h.basis(dd[1]), g))) * antipode(h, h.basis(dd[0]));
                }
                if (!(l == rr)) fail(r.left_invariance, "left_invariance", {gi, hi});
            }
            if (r.right_invariance) {
                Element<K> l = h.zero_element(), rr = h.zero_element();
                for (auto fl : dg.nonzeros()) {
                    auto dd = dg.digits(fl);
                    l += (dg[fl] * d.rho(mul(alg, h.basis(dd[0]), x))) * h.basis(dd[1]);
                }
                for (auto fl : dx.nonzeros()) {
                    auto dd = dx.digits(fl);
                    rr += (dx[fl] * d.rho(mul(alg, g, h.basis(dd[0])))) * antipode(h, h.basis(dd[1]));
                }
                if (!(l == rr)) fail(r.right_invariance, "right_invariance", {gi, hi});
            }
        }
    }
    if (rank(frob) != n) fail(r.frobenius, "frobenius", {});
    return r;
}

template <class K>
struct TwistedIntegrals {
    Functional<K> lambda_J;  // u ⇀ λ
    Functional<K> rho_J;     // ρ ↼ u⁻¹
};

/// λ_J = u_J ⇀ λ and ρ_J = ρ ↼ u_J⁻¹, each checked to lie in the integral space of H^J
/// solved independently from the structure constants of H^J.
template <class K>
TwistedIntegrals<K> twisted_integrals(const HopfAlgebra<K>& h, const Twist<K>& t) {
    const auto d = integrals_on(h);
    if (!is_unimodular(d)) throw Error(ErrorKind::NotUnimodular, "twisted integrals need a unimodular H");
    TwistedIntegrals<K> out{hit_left(h, t.u(), d.lambda), hit_right(h, d.rho, invert(h.algebra(), t.u()))};
    const auto dj = integrals_on(twist_hopf(h, t));
    if (!proportionality(out.lambda_J.values, dj.lambda.values))
        throw Error(ErrorKind::InternalInconsistency, "u ⇀ λ is not a left integral on H^J");
    if (!proportionality(out.rho_J.values, dj.rho.values))
        throw Error(ErrorKind::InternalInconsistency, "ρ ↼ u⁻¹ is not a right integral on H^J");
    return out;
}

}  // namespace hopf
