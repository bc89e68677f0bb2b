#pragma once

// Two-sided twisted coalgebras H^{(L,J)}, the coseparability pairing, and
// semisimplicity / block structure of the dual algebra.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hopf/integrals.hpp"

namespace hopf {

/// H with Δ̃(h) = L⁻¹Δ(h)J and the counit of H.
template <class K>
class TwistedCoalgebra {
public:
    TwistedCoalgebra(HopfAlgebra<K> parent, Twist<K> left, Twist<K> right, Coalgebra<K> co)
        : parent_(std::move(parent)), left_(std::move(left)), right_(std::move(right)), co_(std::move(co)) {}

    const HopfAlgebra<K>& parent() const { return parent_; }
    const Twist<K>& left() const { return left_; }
    const Twist<K>& right() const { return right_; }
    const Coalgebra<K>& coalgebra() const { return co_; }
    std::size_t dim() const { return parent_.dim(); }
    const K& comul(std::size_t i, std::size_t j, std::size_t k) const { return co_.comul(i, j, k); }

private:
    HopfAlgebra<K> parent_;
    Twist<K> left_, right_;
    Coalgebra<K> co_;
};

namespace detail {

/// (Δ⊗id)Δ(x) = (id⊗Δ)Δ(x) and (ε⊗id)Δ(x) = x = (id⊗ε)Δ(x) for x = Σ x_i e_i.
template <class K>
bool coalgebra_axioms_at(const Coalgebra<K>& co, const Element<K>& x, std::vector<K>& buf) {
    const std::size_t n = co.dim();
    const K zero = co.field().zero();
    std::fill(buf.begin(), buf.end(), zero);
    std::vector<K> left(n, zero), right(n, zero);
    for (auto i : x.nonzeros())
        for (const auto& t : co.terms(i)) {
            const K c = x[i] * t.c;
            for (const auto& u : co.terms(t.j)) buf[(u.j * n + u.k) * n + t.k] += c * u.c;
            for (const auto& u : co.terms(t.k)) buf[(t.j * n + u.j) * n + u.k] -= c * u.c;
            left[t.k] += c * co.counit()[t.j];
            right[t.j] += c * co.counit()[t.k];
        }
    for (const auto& v : buf)
        if (!v.is_zero()) return false;
    return left == x.coefficients() && right == x.coefficients();
}

}  // namespace detail

/// Index of the first coassociativity or counit failure, or dim() if none.
template <class K>
std::size_t first_coalgebra_failure(const Coalgebra<K>& co) {
    const std::size_t n = co.dim();
    std::vector<K> buf(n * n * n, co.field().zero());
    for (std::size_t i = 0; i < n; ++i) {
        Element<K> e(n, 1, co.field().zero());
        e[i] = co.field().one();
        if (!detail::coalgebra_axioms_at(co, e, buf)) return i;
    }
    return n;
}

/// Δ̃(hc) = Δ^L(h)Δ̃(c) by construction and Δ^L is coassociative because L is a twist, so the
/// coalgebra axioms for Δ̃ reduce to the axioms at c = 1.
template <class K>
TwistedCoalgebra<K> build_two_sided(const HopfAlgebra<K>& h, const Twist<K>& left, const Twist<K>& right) {
    const std::size_t n = h.dim();
    if (left.dim() != n || right.dim() != n) throw Error(ErrorKind::AlgebraMismatch, "twists live on a different H");
    const auto& alg = h.algebra();
    std::vector<K> comul_tensor(n * n * n, h.field().zero());
    for (std::size_t i = 0; i < n; ++i) {
        auto d = tensor_mul(alg, {left.J_inv(), comul(h, h.basis(i)), right.J()});
        for (auto fl : d.nonzeros()) comul_tensor[i * n * n + fl] = d[fl];
    }
    Coalgebra<K> co(h.field(), n, std::move(comul_tensor), h.counit());
    std::vector<K> buf(n * n * n, h.field().zero());
    if (!detail::coalgebra_axioms_at(co, h.one(), buf))
        throw Error(ErrorKind::CoassociativityFailure, "twisted comultiplication fails at the unit");
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = comul(co, h.basis(i));
        if (!(counit_factor(co, d, 0) == h.basis(i)) || !(counit_factor(co, d, 1) == h.basis(i)))
            throw Error(ErrorKind::CoassociativityFailure, "twisted counit fails at basis element " + std::to_string(i));
    }
    return TwistedCoalgebra<K>(h, left, right, std::move(co));
}

/// H^{(J)} = H^{(1,J)}.
template <class K>
TwistedCoalgebra<K> twisted_coalgebra(const HopfAlgebra<K>& h, const Twist<K>& j) {
    return build_two_sided(h, trivial_twist(h), j);
}

template <class K>
struct CosepPairing {
    Matrix<K> psi;  // psi(i, j) = ψ(e_i⊗e_j)
    Element<K> V;   // S(Q_L)
    Element<K> W;   // Q_J⁻¹
};

/// ψ(g⊗h) = λ(h W S(g) V), with λ rescaled so that λ(1) = 1. Both coseparability
/// conditions are checked on all basis pairs.
template <class K>
CosepPairing<K> coseparability_pairing(const TwistedCoalgebra<K>& c, const Functional<K>& lambda) {
    const auto& h = c.parent();
    const auto d = integrals_on(h);
    if (!is_unimodular(d)) throw Error(ErrorKind::HypothesisViolation, "H is not unimodular");
    if (!is_cosemisimple_via_integral(h, d)) throw Error(ErrorKind::HypothesisViolation, "H is not cosemisimple");
    const K l1 = lambda(h.one());
    if (l1.is_zero()) throw Error(ErrorKind::HypothesisViolation, "λ(1) = 0");
    Functional<K> lam = lambda;
    for (auto& v : lam.values) v /= l1;

    const std::size_t n = h.dim();
    const auto& alg = h.algebra();
    CosepPairing<K> out{Matrix<K>(n, n, h.field().zero()), antipode(h, c.left().Q()), c.right().Q_inv()};
    for (std::size_t g = 0; g < n; ++g) {
        const auto sgv = mul(alg, antipode(h, h.basis(g)), out.V);
        for (std::size_t x = 0; x < n; ++x) out.psi(g, x) = lam(tensor_mul(alg, {h.basis(x), out.W, sgv}));
    }

    const auto& co = c.coalgebra();
    std::vector<TensorElement<K>> delta;
    for (std::size_t i = 0; i < n; ++i) delta.push_back(hopf::comul(co, h.basis(i)));
    for (std::size_t i = 0; i < n; ++i) {
        K acc = h.field().zero();
        for (auto fl : delta[i].nonzeros()) {
            auto dd = delta[i].digits(fl);
            acc += delta[i][fl] * out.psi(dd[0], dd[1]);
        }
        if (!(acc == h.counit()[i]))
            throw Error(ErrorKind::PairingConditionFailure, "ψ(Δ̃(c)) ≠ ε(c) at c = e_" + std::to_string(i));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            // c₁ ψ(c₂⊗d) against ψ(c⊗d₁) d₂ for c = e_x, d = e_y
            Element<K> lhs = h.zero_element(), rhs = h.zero_element();
            for (auto fl : delta[x].nonzeros()) {
                auto dd = delta[x].digits(fl);
                lhs[dd[0]] += delta[x][fl] * out.psi(dd[1], y);
            }
            for (auto fl : delta[y].nonzeros()) {
                auto dd = delta[y].digits(fl);
                rhs[dd[1]] += delta[y][fl] * out.psi(x, dd[0]);
            }
            if (!(lhs == rhs))
                throw Error(ErrorKind::PairingConditionFailure,
                            "c₁ψ(c₂⊗d) ≠ ψ(c⊗d₁)d₂ at (c, d) = (e_" + std::to_string(x) + ", e_" + std::to_string(y) + ")");
        }
    return out;
}

template <class K>
CosepPairing<K> coseparability_pairing(const TwistedCoalgebra<K>& c) {
    return coseparability_pairing(c, integrals_on(c.parent()).lambda);
}

namespace detail {

template <class K>
Algebra<K> transpose_coalgebra(const Coalgebra<K>& co) {
    const std::size_t n = co.dim();
    std::vector<K> m(n * n * n, co.field().zero());
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& t : co.terms(c)) m[(t.j * n + t.k) * n + c] = t.c;
    return Algebra<K>(co.field(), n, std::move(m), co.counit());
}

}  // namespace detail

/// C* with (φ_a φ_b)(e_c) = Δ̃(e_c)[a,b] and unit ε. Associativity and unitality of C* are the
/// transposes of the coalgebra axioms, checked on C.
template <class K>
Algebra<K> dual_algebra(const Coalgebra<K>& co) {
    if (first_coalgebra_failure(co) != co.dim()) throw Error(ErrorKind::InternalInconsistency, "dual algebra is not associative");
    return detail::transpose_coalgebra(co);
}

/// H^{(L,J)} was checked on construction.
template <class K>
Algebra<K> dual_algebra(const TwistedCoalgebra<K>& c) {
    return detail::transpose_coalgebra(c.coalgebra());
}

template <class K>
struct AlgebraDecomposition {
    std::size_t radical_dim = 0;
    std::vector<std::size_t> block_dims;           // sorted; empty when the radical is nonzero
    std::vector<std::vector<K>> central_idempotents;  // parallel to block_dims
};

namespace detail {

template <class K>
K random_scalar(const FieldOf<K>& f, std::mt19937_64& rng) {
    const std::uint64_t bound = f.characteristic() == 0 ? 101 : f.characteristic();
    return f.from_int(static_cast<long long>(rng() % bound));
}

template <class K>
std::vector<std::vector<K>> center_basis(const Algebra<K>& a) {
    const std::size_t n = a.dim();
    Matrix<K> sys(n * n, n, a.field().zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) sys(i * n + k, j) += a.mul(j, i, k) - a.mul(i, j, k);
    return nullspace(sys);
}

}  // namespace detail

/// Radical from the trace form tr(L_a L_b); when the radical vanishes, central
/// idempotents from a seeded generic central element.
template <class K>
AlgebraDecomposition<K> decompose(const Algebra<K>& a, std::uint64_t seed = 0) {
    const std::size_t n = a.dim();
    const auto& f = a.field();
    const auto p = f.characteristic();
    AlgebraDecomposition<K> out;
    Matrix<K> trace(n, n, f.zero());
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) {
            K acc = f.zero();
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& t : a.terms(y, k)) acc += t.c * a.mul(x, t.k, k);
            trace(x, y) = acc;
            trace(y, x) = acc;
        }
    // The radical always lies in the kernel of the trace form, so a non-degenerate form proves
    // semisimplicity in any characteristic; a degenerate one is conclusive only for char 0 or char > dim.
    out.radical_dim = n - rank(trace);
    if (out.radical_dim != 0 && p != 0 && p <= n)
        throw Error(ErrorKind::TraceCriterionInapplicable,
                    "degenerate trace form in characteristic " + std::to_string(p) + " ≤ dim " + std::to_string(n));
    if (out.radical_dim != 0) return out;

    const auto center = detail::center_basis(a);
    const std::size_t c = center.size();
    const Element<K> one = a.one();
    if (c == 1) {
        out.block_dims = {static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n))))};
        if (out.block_dims[0] * out.block_dims[0] != n)
            throw Error(ErrorKind::FieldTooSmall, "simple algebra of non-square dimension " + std::to_string(n));
        out.central_idempotents = {one.coefficients()};
        return out;
    }

    // Refine {1} by the eigenvalues of central elements: seeded random combinations of the
    // center basis first, then the basis itself, until there are as many idempotents as the
    // center has dimensions.
    std::mt19937_64 rng(seed);
    std::vector<Element<K>> idempotents{one};
    auto refine = [&](const Element<K>& z) {
        std::vector<Element<K>> next;
        for (const auto& e : idempotents) {
            const Element<K> ze = mul(a, z, e);
            auto minpoly = krylov_minimal_polynomial(e.coefficients(), [&](const std::vector<K>& v) {
                return mul(a, ze, Element<K>::from_vector(v)).coefficients();
            });
            std::vector<K> roots;
            for (const auto& r : f.roots(minpoly))
                if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            if (roots.size() + 1 != minpoly.size())
                throw Error(ErrorKind::FieldTooSmall, "center does not split over " + describe(f.spec()));
            for (std::size_t r = 0; r < roots.size(); ++r) {
                Element<K> piece = e;
                for (std::size_t s = 0; s < roots.size(); ++s) {
                    if (s == r) continue;
                    piece = mul(a, piece, (roots[r] - roots[s]).inverse() * (ze + (-roots[s]) * e));
                }
                next.push_back(std::move(piece));
            }
        }
        idempotents = std::move(next);
    };
    for (int attempt = 0; attempt < 8 && idempotents.size() < c; ++attempt) {
        Element<K> z(n, 1, f.zero());
        for (const auto& b : center) {
            const K r = detail::random_scalar<K>(f, rng);
            for (std::size_t i = 0; i < n; ++i) z[i] += r * b[i];
        }
        refine(z);
    }
    for (std::size_t t = 0; t < c && idempotents.size() < c; ++t) refine(Element<K>::from_vector(center[t]));
    if (idempotents.size() != c) throw Error(ErrorKind::InternalInconsistency, "central idempotents do not span the center");

    std::vector<std::pair<std::size_t, std::vector<K>>> blocks;
    Element<K> total(n, 1, f.zero());
    for (const auto& e : idempotents) {
        total += e;
        const std::size_t rk = rank(left_multiplication(a, e));
        const auto d = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(rk))));
        if (d * d != rk) throw Error(ErrorKind::FieldTooSmall, "block of non-square dimension " + std::to_string(rk));
        blocks.push_back({d, e.coefficients()});
    }
    for (std::size_t r = 0; r < c; ++r)
        for (std::size_t s = 0; s < c; ++s) {
            auto prod = mul(a, idempotents[r], idempotents[s]);
            if (!(prod == (r == s ? idempotents[r] : Element<K>(n, 1, f.zero()))))
                throw Error(ErrorKind::InternalInconsistency, "central idempotents are not orthogonal");
        }
    if (!(total == one)) throw Error(ErrorKind::InternalInconsistency, "central idempotents do not sum to 1");
    std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return std::lexicographical_compare(x.second.begin(), x.second.end(), y.second.begin(), y.second.end(),
                                            [](const K& u, const K& v) { return canonical_less(u, v); });
    });
    std::size_t squares = 0;
    for (auto& [d, e] : blocks) {
        squares += d * d;
        out.block_dims.push_back(d);
        out.central_idempotents.push_back(std::move(e));
    }
    if (squares != n) throw Error(ErrorKind::InternalInconsistency, "block dimensions do not add up");
    return out;
}

template <class K>
bool is_simple(const TwistedCoalgebra<K>& c, std::uint64_t seed = 0) {
    const auto d = decompose(dual_algebra(c), seed);
    return d.radical_dim == 0 && d.block_dims.size() == 1;
}

template <class K>
bool is_nondegenerate(const HopfAlgebra<K>& h, const Twist<K>& j, std::uint64_t seed = 0) {
    return is_simple(twisted_coalgebra(h, j), seed);
}

/// Group-like elements of a coalgebra (Δ(c) = c⊗c, ε(c) = 1). These are the characters of
/// the dual algebra, found as common eigenvectors of the transposed left multiplications;
/// each candidate is then checked directly against Δ.
template <class K>
std::vector<Element<K>> grouplikes(const Coalgebra<K>& co) {
    const std::size_t n = co.dim();
    const auto& f = co.field();
    const auto a = dual_algebra(co);
    // Each entry: subspace of C (columns) on which φ_b acts by the listed eigenvalues, b < depth.
    struct Piece {
        std::vector<std::vector<K>> span;
        std::vector<K> values;
    };
    std::vector<Piece> pieces{{{}, {}}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<K> e(n, f.zero());
        e[i] = f.one();
        pieces[0].span.push_back(e);
    }
    for (std::size_t b = 0; b < n && !pieces.empty(); ++b) {
        // χ(φ_b x) = χ(φ_b)χ(x): the coordinates of c are the values of χ, so c is an eigenvector
        // of the transpose of left multiplication by φ_b.
        Matrix<K> lt = transpose(left_multiplication(a, a.basis(b)));
        const auto roots = f.roots(minimal_polynomial(lt));
        std::vector<Piece> next;
        for (const auto& piece : pieces) {
            std::vector<K> seen;
            for (const auto& r : roots) {
                if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
                seen.push_back(r);
                Matrix<K> shifted = lt;
                for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= r;
                const auto basis = from_columns(piece.span, n, f.zero());
                const auto coeffs = nullspace(shifted * basis);
                if (coeffs.empty()) continue;
                Piece sub{{}, piece.values};
                sub.values.push_back(r);
                for (const auto& cf : coeffs) sub.span.push_back(basis * cf);
                next.push_back(std::move(sub));
            }
        }
        pieces = std::move(next);
    }
    std::vector<Element<K>> out;
    for (const auto& piece : pieces) {
        auto c = Element<K>::from_vector(piece.values);
        K eps = f.zero();
        for (std::size_t i = 0; i < n; ++i) eps += co.counit()[i] * c[i];
        if (!(eps == f.one())) continue;
        if (!(comul(co, c) == outer(c, c))) continue;
        out.push_back(std::move(c));
    }
    return out;
}

template <class K>
std::size_t grouplike_count(const TwistedCoalgebra<K>& c) {
    return grouplikes(c.coalgebra()).size();
}

}  // namespace hopf
