#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/tensor.hpp"

namespace hopf {

/// Finite-dimensional Hopf algebra given by structure constants.
/// Construction only checks shapes; the axioms are checked by verify_hopf.
template <class K>
class HopfAlgebra {
public:
    HopfAlgebra(FieldOf<K> field, std::vector<std::string> basis_names, std::vector<K> mul, std::vector<K> unit,
                std::vector<K> comul, std::vector<K> counit, Matrix<K> antipode)
        : names_(std::move(basis_names)),
          alg_(field, names_.size(), std::move(mul), std::move(unit)),
          co_(field, names_.size(), std::move(comul), std::move(counit)),
          s_(std::move(antipode)) {
        if (s_.rows() != dim() || s_.cols() != dim()) throw Error(ErrorKind::ShapeError, "antipode must be dim x dim");
        s_inv_ = try_inverse(s_);
    }

    const FieldOf<K>& field() const { return alg_.field(); }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Algebra<K>& algebra() const { return alg_; }
    const Coalgebra<K>& coalgebra() const { return co_; }
    const Matrix<K>& antipode() const { return s_; }
    bool antipode_bijective() const { return s_inv_.has_value(); }
    const Matrix<K>& antipode_inverse() const {
        if (!s_inv_) throw Error(ErrorKind::NotInvertible, "antipode is singular");
        return *s_inv_;
    }

    const K& mul(std::size_t i, std::size_t j, std::size_t k) const { return alg_.mul(i, j, k); }
    const K& comul(std::size_t i, std::size_t j, std::size_t k) const { return co_.comul(i, j, k); }
    const std::vector<K>& unit() const { return alg_.unit(); }
    const std::vector<K>& counit() const { return co_.counit(); }

    Element<K> one() const { return alg_.one(); }
    Element<K> basis(std::size_t i) const { return alg_.basis(i); }
    Element<K> zero_element() const { return Element<K>(dim(), 1, field().zero()); }
    TensorElement<K> one_tensor(std::size_t order = 2) const { return hopf::one_tensor(alg_, order); }

    /// Same structure tensors (basis names are ignored).
    friend bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
        return a.dim() == b.dim() && a.alg_.mul_tensor() == b.alg_.mul_tensor() && a.unit() == b.unit() &&
               a.co_ == b.co_ && a.s_ == b.s_;
    }

private:
    std::vector<std::string> names_;
    Algebra<K> alg_;
    Coalgebra<K> co_;
    Matrix<K> s_;
    std::optional<Matrix<K>> s_inv_;
};

// ---------------------------------------------------------------------------
// Element-level helpers.

template <class K>
Element<K> apply(const Matrix<K>& m, const Element<K>& x) {
    return Element<K>::from_vector(m * x.coefficients());
}

template <class K>
Element<K> mul(const HopfAlgebra<K>& h, const Element<K>& a, const Element<K>& b) {
    return tensor_mul(h.algebra(), a, b);
}

template <class K>
TensorElement<K> tensor_mul(const HopfAlgebra<K>& h, const TensorElement<K>& a, const TensorElement<K>& b) {
    return tensor_mul(h.algebra(), a, b);
}

template <class K>
TensorElement<K> tensor_invert(const HopfAlgebra<K>& h, const TensorElement<K>& a) {
    return invert(h.algebra(), a);
}

template <class K>
TensorElement<K> comul(const HopfAlgebra<K>& h, const Element<K>& x) {
    return comul_factor(h.coalgebra(), x, 0);
}

template <class K>
K counit(const HopfAlgebra<K>& h, const Element<K>& x) {
    return Functional<K>{h.counit()}(x);
}

template <class K>
Element<K> antipode(const HopfAlgebra<K>& h, const Element<K>& x) {
    return apply(h.antipode(), x);
}

/// Matrix of a functional pairing: rows = first argument, cols = second.
template <class K>
Matrix<K> tensor_as_matrix(const TensorElement<K>& t) {
    const std::size_t n = t.dim();
    Matrix<K> m(n, n, t[0] - t[0]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = t(i, j);
    return m;
}

template <class K>
TensorElement<K> matrix_as_tensor(const Matrix<K>& m) {
    const std::size_t n = m.rows();
    TensorElement<K> t(n, 2, m(0, 0) - m(0, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = m(i, j);
    return t;
}

// ---------------------------------------------------------------------------
// Axiom verification.

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::vector<std::size_t> witness;  // basis indices of the first failure
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const AxiomCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
    const AxiomCheck& operator[](const std::string& name) const {
        for (const auto& c : checks)
            if (c.axiom == name) return c;
        throw Error(ErrorKind::ShapeError, "no axiom named " + name);
    }
};

template <class K>
AxiomReport verify_hopf(const HopfAlgebra<K>& h) {
    const std::size_t n = h.dim();
    const auto& alg = h.algebra();
    const auto& co = h.coalgebra();
    const auto& f = h.field();
    AxiomReport report;
    auto fail = [&](AxiomCheck& c, std::vector<std::size_t> w) {
        if (c.pass) {
            c.pass = false;
            c.witness = std::move(w);
        }
    };

    std::vector<Element<K>> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(h.basis(i));
    std::vector<Element<K>> prod;  // e_i e_j
    prod.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod.push_back(mul(alg, basis[i], basis[j]));

    AxiomCheck assoc{"associativity"};
    for (std::size_t i = 0; i < n && assoc.pass; ++i)
        for (std::size_t j = 0; j < n && assoc.pass; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(mul(alg, prod[i * n + j], basis[k]) == mul(alg, basis[i], prod[j * n + k]))) {
                    fail(assoc, {i, j, k});
                    break;
                }
    report.checks.push_back(assoc);

    AxiomCheck unit{"unitality"};
    const Element<K> one = h.one();
    for (std::size_t i = 0; i < n; ++i)
        if (!(mul(alg, one, basis[i]) == basis[i]) || !(mul(alg, basis[i], one) == basis[i])) {
            fail(unit, {i});
            break;
        }
    report.checks.push_back(unit);

    std::vector<TensorElement<K>> delta;
    for (std::size_t i = 0; i < n; ++i) delta.push_back(comul(h, basis[i]));

    AxiomCheck coassoc{"coassociativity"};
    for (std::size_t i = 0; i < n; ++i)
        if (!(comul_factor(co, delta[i], 0) == comul_factor(co, delta[i], 1))) {
            fail(coassoc, {i});
            break;
        }
    report.checks.push_back(coassoc);

    AxiomCheck counital{"counitality"};
    for (std::size_t i = 0; i < n; ++i)
        if (!(counit_factor(co, delta[i], 0) == basis[i]) || !(counit_factor(co, delta[i], 1) == basis[i])) {
            fail(counital, {i});
            break;
        }
    report.checks.push_back(counital);

    AxiomCheck comul_mult{"comultiplication_multiplicative"};
    if (!(comul(h, one) == h.one_tensor())) fail(comul_mult, {});
    for (std::size_t i = 0; i < n && comul_mult.pass; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(comul(h, prod[i * n + j]) == tensor_mul(alg, delta[i], delta[j]))) {
                fail(comul_mult, {i, j});
                break;
            }
    report.checks.push_back(comul_mult);

    AxiomCheck counit_mult{"counit_multiplicative"};
    if (!(counit(h, one) == f.one())) fail(counit_mult, {});
    for (std::size_t i = 0; i < n && counit_mult.pass; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(counit(h, prod[i * n + j]) == h.counit()[i] * h.counit()[j])) {
                fail(counit_mult, {i, j});
                break;
            }
    report.checks.push_back(counit_mult);

    AxiomCheck anti{"antipode"};
    for (std::size_t i = 0; i < n; ++i) {
        Element<K> expect = h.counit()[i] * one;
        auto left = merge_factors(alg, map_factor(delta[i], 0, h.antipode()), 0, 1);
        auto right = merge_factors(alg, map_factor(delta[i], 1, h.antipode()), 0, 1);
        if (!(left == expect) || !(right == expect)) {
            fail(anti, {i});
            break;
        }
    }
    report.checks.push_back(anti);
    return report;
}

// ---------------------------------------------------------------------------
// Constructions.

/// H*: multiplication is the transpose of Δ, comultiplication the transpose of m.
template <class K>
HopfAlgebra<K> dual_hopf(const HopfAlgebra<K>& h) {
    const std::size_t n = h.dim();
    std::vector<K> mul(n * n * n, h.field().zero()), comul(n * n * n, h.field().zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                mul[(i * n + j) * n + k] = h.comul(k, i, j);
                comul[(k * n + i) * n + j] = h.mul(i, j, k);
            }
    std::vector<std::string> names;
    for (const auto& s : h.basis_names()) names.push_back(s + "*");
    return HopfAlgebra<K>(h.field(), names, mul, h.counit(), comul, h.unit(), transpose(h.antipode()));
}

template <class K>
HopfAlgebra<K> hopf_tensor_product(const HopfAlgebra<K>& a, const HopfAlgebra<K>& b) {
    if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "tensor product over different fields");
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    const auto& f = a.field();
    auto idx = [nb](std::size_t x, std::size_t y) { return x * nb + y; };
    std::vector<K> mul(n * n * n, f.zero()), comul(n * n * n, f.zero()), unit(n, f.zero()), counit(n, f.zero());
    Matrix<K> s(n, n, f.zero());
    std::vector<std::string> names;
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y) {
            names.push_back(a.basis_names()[x] + "⊗" + b.basis_names()[y]);
            unit[idx(x, y)] = a.unit()[x] * b.unit()[y];
            counit[idx(x, y)] = a.counit()[x] * b.counit()[y];
        }
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t x2 = 0; x2 < na; ++x2) {
            for (std::size_t y = 0; y < nb; ++y)
                for (std::size_t y2 = 0; y2 < nb; ++y2) {
                    if (!a.antipode()(x2, x).is_zero() && !b.antipode()(y2, y).is_zero())
                        s(idx(x2, y2), idx(x, y)) = a.antipode()(x2, x) * b.antipode()(y2, y);
                }
            for (const auto& ta : a.algebra().terms(x, x2))
                for (std::size_t y = 0; y < nb; ++y)
                    for (std::size_t y2 = 0; y2 < nb; ++y2)
                        for (const auto& tb : b.algebra().terms(y, y2))
                            mul[(idx(x, y) * n + idx(x2, y2)) * n + idx(ta.k, tb.k)] = ta.c * tb.c;
        }
    for (std::size_t x = 0; x < na; ++x)
        for (const auto& ta : a.coalgebra().terms(x))
            for (std::size_t y = 0; y < nb; ++y)
                for (const auto& tb : b.coalgebra().terms(y))
                    comul[(idx(x, y) * n + idx(ta.j, tb.j)) * n + idx(ta.k, tb.k)] = ta.c * tb.c;
    return HopfAlgebra<K>(f, names, mul, unit, comul, counit, s);
}

/// H^op: reversed multiplication, antipode S⁻¹.
template <class K>
HopfAlgebra<K> opposite(const HopfAlgebra<K>& h) {
    const std::size_t n = h.dim();
    std::vector<K> mul(n * n * n, h.field().zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) mul[(i * n + j) * n + k] = h.mul(j, i, k);
    return HopfAlgebra<K>(h.field(), h.basis_names(), mul, h.unit(), h.coalgebra().comul_tensor(), h.counit(),
                          h.antipode_inverse());
}

/// Rewrites H in the basis b_j = Σ_i p(i,j) e_i.
template <class K>
HopfAlgebra<K> change_basis(const HopfAlgebra<K>& h, const Matrix<K>& p, std::vector<std::string> names = {}) {
    const std::size_t n = h.dim();
    const auto& f = h.field();
    const Matrix<K> pinv = inverse(p);
    std::vector<Element<K>> b;
    for (std::size_t j = 0; j < n; ++j) b.push_back(Element<K>::from_vector(p.column(j)));
    std::vector<K> m(n * n * n, f.zero()), d(n * n * n, f.zero()), eps(n, f.zero());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            auto prod = apply(pinv, hopf::mul(h, b[a], b[c]));
            for (std::size_t k = 0; k < n; ++k) m[(a * n + c) * n + k] = prod[k];
        }
    for (std::size_t a = 0; a < n; ++a) {
        auto da = map_all(hopf::comul(h, b[a]), pinv);
        for (std::size_t k = 0; k < n * n; ++k) d[a * n * n + k] = da[k];
        eps[a] = hopf::counit(h, b[a]);
    }
    auto unit = pinv * h.unit();
    if (names.empty()) names = h.basis_names();
    return HopfAlgebra<K>(f, names, m, unit, d, eps, pinv * h.antipode() * p);
}

// ---------------------------------------------------------------------------
// Actions of H on H*.

/// (h ⇀ φ)(g) = φ(g h)
template <class K>
Functional<K> hit_left(const HopfAlgebra<K>& h, const Element<K>& x, const Functional<K>& phi) {
    const std::size_t n = h.dim();
    if (x.dim() != n || phi.values.size() != n) throw Error(ErrorKind::AlgebraMismatch, "action operands");
    std::vector<K> out(n, h.field().zero());
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : x.nonzeros())
            for (const auto& t : h.algebra().terms(i, j)) out[i] += phi.values[t.k] * t.c * x[j];
    return {out};
}

/// (φ ↼ h)(g) = φ(h g)
template <class K>
Functional<K> hit_right(const HopfAlgebra<K>& h, const Functional<K>& phi, const Element<K>& x) {
    const std::size_t n = h.dim();
    if (x.dim() != n || phi.values.size() != n) throw Error(ErrorKind::AlgebraMismatch, "action operands");
    std::vector<K> out(n, h.field().zero());
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : x.nonzeros())
            for (const auto& t : h.algebra().terms(j, i)) out[i] += phi.values[t.k] * t.c * x[j];
    return {out};
}

template <class K>
bool is_commutative(const Algebra<K>& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(a.mul(i, j, k) == a.mul(j, i, k))) return false;
    return true;
}

template <class K>
bool is_cocommutative(const Coalgebra<K>& c) {
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (!(c.comul(i, j, k) == c.comul(i, k, j))) return false;
    return true;
}

}  // namespace hopf
