#pragma once

// Elements of H^{⊗m} as dense coefficient arrays, plus the structure-constant
// carriers (Algebra, Coalgebra) that the tensor calculus contracts against.

#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hopf/linalg.hpp"

namespace hopf {

/// Σ T[i_0,…,i_{m-1}] e_{i_0}⊗…⊗e_{i_{m-1}}; flat index is row-major in the factor indices.
template <class K>
class Tensor {
public:
    Tensor(std::size_t dim, std::size_t order, const K& zero) : dim_(dim), order_(order), data_(ipow(dim, order), zero) {}

    static Tensor from_vector(std::vector<K> coeffs) {
        Tensor t;
        t.dim_ = coeffs.size();
        t.order_ = 1;
        t.data_ = std::move(coeffs);
        return t;
    }

    std::size_t dim() const { return dim_; }
    std::size_t order() const { return order_; }
    std::size_t size() const { return data_.size(); }

    K& operator[](std::size_t flat) { return data_[flat]; }
    const K& operator[](std::size_t flat) const { return data_[flat]; }

    K& operator()(std::size_t i) { return data_[i]; }
    const K& operator()(std::size_t i) const { return data_[i]; }
    K& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    K& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
    const K& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * dim_ + j) * dim_ + k]; }

    const std::vector<K>& coefficients() const { return data_; }
    std::vector<K>& coefficients() { return data_; }

    std::vector<std::size_t> nonzeros() const {
        std::vector<std::size_t> nz;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!data_[i].is_zero()) nz.push_back(i);
        return nz;
    }

    bool is_zero() const { return nonzeros().empty(); }

    /// Factor indices of a flat index.
    std::array<std::size_t, 8> digits(std::size_t flat) const {
        std::array<std::size_t, 8> d{};
        for (std::size_t f = order_; f-- > 0;) {
            d[f] = flat % dim_;
            flat /= dim_;
        }
        return d;
    }

    Tensor& operator+=(const Tensor& o) {
        check(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        check(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Tensor& operator*=(const K& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const K& s, Tensor a) { return a *= s; }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.dim_ == b.dim_ && a.order_ == b.order_ && a.data_ == b.data_;
    }

    static std::size_t ipow(std::size_t b, std::size_t e) {
        std::size_t r = 1;
        while (e--) r *= b;
        return r;
    }

private:
    Tensor() = default;
    void check(const Tensor& o) const {
        if (dim_ != o.dim_ || order_ != o.order_) throw Error(ErrorKind::ShapeError, "tensor shape mismatch");
    }

    std::size_t dim_ = 0;
    std::size_t order_ = 0;
    std::vector<K> data_;
};

/// An element of H (order-1 tensor).
template <class K>
using Element = Tensor<K>;
/// An element of H⊗H (order-2 tensor); twists live here.
template <class K>
using TensorElement = Tensor<K>;

/// A linear functional on H, by its values on the basis.
template <class K>
struct Functional {
    std::vector<K> values;

    K operator()(const Element<K>& h) const {
        K acc = values.at(0) - values.at(0);
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!h[i].is_zero()) acc += values[i] * h[i];
        return acc;
    }
    friend bool operator==(const Functional&, const Functional&) = default;
};

template <class K>
struct MulTerm {
    std::uint32_t k;
    K c;
};

template <class K>
struct ComulTerm {
    std::uint32_t j, k;
    K c;
};

/// Associative unital algebra by structure constants: e_i e_j = Σ_k mul[i,j,k] e_k.
template <class K>
class Algebra {
public:
    Algebra(FieldOf<K> field, std::size_t dim, std::vector<K> mul, std::vector<K> unit)
        : field_(std::move(field)), dim_(dim), mul_(std::move(mul)), unit_(std::move(unit)) {
        if (mul_.size() != dim_ * dim_ * dim_ || unit_.size() != dim_) throw Error(ErrorKind::ShapeError, "algebra tensor shapes");
        terms_.resize(dim_ * dim_);
        partners_.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                for (std::size_t k = 0; k < dim_; ++k) {
                    const K& c = mul_[(i * dim_ + j) * dim_ + k];
                    if (!c.is_zero()) terms_[i * dim_ + j].push_back({static_cast<std::uint32_t>(k), c});
                }
                if (!terms_[i * dim_ + j].empty()) partners_[i].push_back(static_cast<std::uint32_t>(j));
            }
    }

    const FieldOf<K>& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const K& mul(std::size_t i, std::size_t j, std::size_t k) const { return mul_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<K>& mul_tensor() const { return mul_; }
    const std::vector<K>& unit() const { return unit_; }
    std::span<const MulTerm<K>> terms(std::size_t i, std::size_t j) const { return terms_[i * dim_ + j]; }
    std::span<const std::uint32_t> partners(std::size_t i) const { return partners_[i]; }

    Element<K> one() const { return Element<K>::from_vector(unit_); }
    Element<K> basis(std::size_t i) const {
        Element<K> e(dim_, 1, field_.zero());
        e[i] = field_.one();
        return e;
    }

private:
    FieldOf<K> field_;
    std::size_t dim_;
    std::vector<K> mul_;
    std::vector<K> unit_;
    std::vector<std::vector<MulTerm<K>>> terms_;
    std::vector<std::vector<std::uint32_t>> partners_;
};

/// Coassociative counital coalgebra: Δ(e_i) = Σ comul[i,j,k] e_j⊗e_k.
template <class K>
class Coalgebra {
public:
    Coalgebra(FieldOf<K> field, std::size_t dim, std::vector<K> comul, std::vector<K> counit)
        : field_(std::move(field)), dim_(dim), comul_(std::move(comul)), counit_(std::move(counit)) {
        if (comul_.size() != dim_ * dim_ * dim_ || counit_.size() != dim_) throw Error(ErrorKind::ShapeError, "coalgebra tensor shapes");
        terms_.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    const K& c = comul_[(i * dim_ + j) * dim_ + k];
                    if (!c.is_zero()) terms_[i].push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), c});
                }
    }

    const FieldOf<K>& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const K& comul(std::size_t i, std::size_t j, std::size_t k) const { return comul_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<K>& comul_tensor() const { return comul_; }
    const std::vector<K>& counit() const { return counit_; }
    std::span<const ComulTerm<K>> terms(std::size_t i) const { return terms_[i]; }

    friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
        return a.dim_ == b.dim_ && a.comul_ == b.comul_ && a.counit_ == b.counit_;
    }

private:
    FieldOf<K> field_;
    std::size_t dim_;
    std::vector<K> comul_;
    std::vector<K> counit_;
    std::vector<std::vector<ComulTerm<K>>> terms_;
};

// ---------------------------------------------------------------------------
// Tensor calculus.

namespace detail {

template <class K>
void accumulate_product(const Algebra<K>& alg, Tensor<K>& out, const std::array<std::size_t, 8>& a,
                        const std::array<std::size_t, 8>& b, const K& coeff) {
    const std::size_t m = out.order(), n = alg.dim();
    std::array<std::span<const MulTerm<K>>, 8> lists;
    for (std::size_t f = 0; f < m; ++f) {
        lists[f] = alg.terms(a[f], b[f]);
        if (lists[f].empty()) return;
    }
    std::array<std::size_t, 8> pos{};
    while (true) {
        std::size_t flat = 0;
        K c = coeff;
        for (std::size_t f = 0; f < m; ++f) {
            const auto& t = lists[f][pos[f]];
            flat = flat * n + t.k;
            c *= t.c;
        }
        out[flat] += c;
        std::size_t f = m;
        while (f-- > 0) {
            if (++pos[f] < lists[f].size()) break;
            pos[f] = 0;
        }
        if (f == static_cast<std::size_t>(-1)) return;
    }
}

}  // namespace detail

/// Product in the algebra H^{⊗m} (componentwise multiplication).
template <class K>
Tensor<K> tensor_mul(const Algebra<K>& alg, const Tensor<K>& a, const Tensor<K>& b) {
    if (a.dim() != alg.dim() || b.dim() != alg.dim() || a.order() != b.order())
        throw Error(ErrorKind::AlgebraMismatch, "tensor_mul operands do not live in the same H^{⊗m}");
    const std::size_t m = a.order(), n = alg.dim();
    Tensor<K> out(n, m, alg.field().zero());
    const auto nza = a.nonzeros(), nzb = b.nonzeros();
    if (nza.empty() || nzb.empty()) return out;
    if (m == 1) {
        for (auto i : nza)
            for (auto j : nzb) {
                const K c = a[i] * b[j];
                for (const auto& t : alg.terms(i, j)) out[t.k] += c * t.c;
            }
        return out;
    }

    double pair_cost = static_cast<double>(nza.size()) * static_cast<double>(nzb.size());
    double partner_cost = 0;
    for (auto fa : nza) {
        auto d = a.digits(fa);
        double c = 1;
        for (std::size_t f = 0; f < m; ++f) c *= static_cast<double>(alg.partners(d[f]).size());
        partner_cost += c;
    }

    if (pair_cost <= partner_cost) {
        std::vector<std::array<std::size_t, 8>> db;
        db.reserve(nzb.size());
        for (auto fb : nzb) db.push_back(b.digits(fb));
        for (auto fa : nza) {
            auto da = a.digits(fa);
            for (std::size_t ib = 0; ib < nzb.size(); ++ib) detail::accumulate_product(alg, out, da, db[ib], a[fa] * b[nzb[ib]]);
        }
        return out;
    }
    for (auto fa : nza) {
        auto da = a.digits(fa);
        std::array<std::span<const std::uint32_t>, 8> lists;
        bool empty = false;
        for (std::size_t f = 0; f < m; ++f) {
            lists[f] = alg.partners(da[f]);
            if (lists[f].empty()) empty = true;
        }
        if (empty) continue;
        std::array<std::size_t, 8> pos{};
        while (true) {
            std::size_t flat = 0;
            std::array<std::size_t, 8> db{};
            for (std::size_t f = 0; f < m; ++f) {
                db[f] = lists[f][pos[f]];
                flat = flat * n + db[f];
            }
            if (!b[flat].is_zero()) detail::accumulate_product(alg, out, da, db, a[fa] * b[flat]);
            std::size_t f = m;
            while (f-- > 0) {
                if (++pos[f] < lists[f].size()) break;
                pos[f] = 0;
            }
            if (f == static_cast<std::size_t>(-1)) break;
        }
    }
    return out;
}

/// Element-level product a·b in H.
template <class K>
Element<K> mul(const Algebra<K>& alg, const Element<K>& a, const Element<K>& b) {
    return tensor_mul(alg, a, b);
}

/// Left-nested product of several tensors of equal order.
template <class K>
Tensor<K> tensor_mul(const Algebra<K>& alg, std::initializer_list<Tensor<K>> factors) {
    auto it = factors.begin();
    Tensor<K> acc = *it;
    for (++it; it != factors.end(); ++it) acc = tensor_mul(alg, acc, *it);
    return acc;
}

/// a⊗b
template <class K>
Tensor<K> outer(const Tensor<K>& a, const Tensor<K>& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::ShapeError, "outer product of different dimensions");
    Tensor<K> out(a.dim(), a.order() + b.order(), a[0] - a[0]);
    const std::size_t nb = b.size();
    for (auto fa : a.nonzeros())
        for (auto fb : b.nonzeros()) out[fa * nb + fb] = a[fa] * b[fb];
    return out;
}

/// 1⊗…⊗1 in H^{⊗order}.
template <class K>
Tensor<K> one_tensor(const Algebra<K>& alg, std::size_t order) {
    Tensor<K> out = alg.one();
    for (std::size_t k = 1; k < order; ++k) out = outer(out, alg.one());
    return out;
}

/// Result position k holds original factor perm[k]; e.g. {1,0} is the flip T ↦ T_21.
template <class K>
Tensor<K> permute_factors(const Tensor<K>& t, const std::vector<std::size_t>& perm) {
    if (perm.size() != t.order()) throw Error(ErrorKind::ShapeError, "permutation length");
    Tensor<K> out(t.dim(), t.order(), t[0] - t[0]);
    const std::size_t n = t.dim();
    for (auto fl : t.nonzeros()) {
        auto d = t.digits(fl);
        std::size_t flat = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) flat = flat * n + d[perm[k]];
        out[flat] = t[fl];
    }
    return out;
}

template <class K>
Tensor<K> flip(const Tensor<K>& t) {
    return permute_factors(t, {1, 0});
}

/// Applies the linear map m (columns = images of basis vectors) to one tensor factor.
template <class K>
Tensor<K> map_factor(const Tensor<K>& t, std::size_t factor, const Matrix<K>& m) {
    const std::size_t n = t.dim();
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::ShapeError, "map_factor shape");
    Tensor<K> out(n, t.order(), t[0] - t[0]);
    const std::size_t stride = Tensor<K>::ipow(n, t.order() - 1 - factor);
    for (auto fl : t.nonzeros()) {
        const std::size_t i = (fl / stride) % n;
        const std::size_t base = fl - i * stride;
        for (std::size_t r = 0; r < n; ++r)
            if (!m(r, i).is_zero()) out[base + r * stride] += m(r, i) * t[fl];
    }
    return out;
}

/// Applies the same map to every factor.
template <class K>
Tensor<K> map_all(const Tensor<K>& t, const Matrix<K>& m) {
    Tensor<K> out = t;
    for (std::size_t f = 0; f < t.order(); ++f) out = map_factor(out, f, m);
    return out;
}

/// Replaces factor f by Δ of it (order grows by one).
template <class K>
Tensor<K> comul_factor(const Coalgebra<K>& co, const Tensor<K>& t, std::size_t factor) {
    const std::size_t n = t.dim(), m = t.order();
    if (n != co.dim()) throw Error(ErrorKind::AlgebraMismatch, "comul_factor dimension");
    Tensor<K> out(n, m + 1, co.field().zero());
    for (auto fl : t.nonzeros()) {
        auto d = t.digits(fl);
        for (const auto& term : co.terms(d[factor])) {
            std::size_t flat = 0;
            for (std::size_t f = 0; f < m; ++f) {
                if (f == factor) {
                    flat = (flat * n + term.j) * n + term.k;
                } else {
                    flat = flat * n + d[f];
                }
            }
            out[flat] += t[fl] * term.c;
        }
    }
    return out;
}

/// Δ(h) for an element h.
template <class K>
TensorElement<K> comul(const Coalgebra<K>& co, const Element<K>& h) {
    return comul_factor(co, h, 0);
}

/// Applies a functional to factor f (order drops by one). Order-1 input gives an order-0 tensor holding one scalar.
template <class K>
Tensor<K> apply_functional_factor(const Tensor<K>& t, std::size_t factor, const std::vector<K>& phi) {
    const std::size_t n = t.dim(), m = t.order();
    Tensor<K> out(n, m - 1, t[0] - t[0]);
    for (auto fl : t.nonzeros()) {
        auto d = t.digits(fl);
        if (phi[d[factor]].is_zero()) continue;
        std::size_t flat = 0;
        for (std::size_t f = 0; f < m; ++f)
            if (f != factor) flat = flat * n + d[f];
        out[flat] += phi[d[factor]] * t[fl];
    }
    return out;
}

template <class K>
Tensor<K> counit_factor(const Coalgebra<K>& co, const Tensor<K>& t, std::size_t factor) {
    return apply_functional_factor(t, factor, co.counit());
}

/// Multiplies factor `left` by factor `right` (in that order); the product sits at
/// position min(left, right) and the other factor is removed.
template <class K>
Tensor<K> merge_factors(const Algebra<K>& alg, const Tensor<K>& t, std::size_t left, std::size_t right) {
    const std::size_t n = t.dim(), m = t.order();
    const std::size_t keep = std::min(left, right), drop = std::max(left, right);
    Tensor<K> out(n, m - 1, alg.field().zero());
    for (auto fl : t.nonzeros()) {
        auto d = t.digits(fl);
        for (const auto& term : alg.terms(d[left], d[right])) {
            std::size_t flat = 0;
            for (std::size_t f = 0; f < m; ++f) {
                if (f == drop) continue;
                flat = flat * n + (f == keep ? term.k : d[f]);
            }
            out[flat] += t[fl] * term.c;
        }
    }
    return out;
}

template <class K>
K scalar_of(const Tensor<K>& order0) {
    return order0[0];
}

/// Left multiplication by x in H⊗H on factor positions given; helper for embedding
/// x ∈ H^{⊗k} into H^{⊗m}: the listed positions carry x's factors, the rest carry 1.
template <class K>
Tensor<K> embed(const Algebra<K>& alg, const Tensor<K>& x, std::size_t order, const std::vector<std::size_t>& positions) {
    Tensor<K> t = x;
    for (std::size_t k = x.order(); k < order; ++k) t = outer(t, alg.one());
    // t has x's factors first; build the permutation sending them to `positions`.
    std::vector<std::size_t> perm(order);
    std::vector<bool> used(order, false);
    for (std::size_t k = 0; k < positions.size(); ++k) {
        perm[positions[k]] = k;
        used[positions[k]] = true;
    }
    std::size_t next = positions.size();
    for (std::size_t p = 0; p < order; ++p)
        if (!used[p]) perm[p] = next++;
    return permute_factors(t, perm);
}

/// Inverse in H^{⊗m} via the minimal polynomial of the element (Krylov sequence);
/// returns nullopt when the element is a zero divisor.
template <class K>
std::optional<Tensor<K>> try_invert(const Algebra<K>& alg, const Tensor<K>& a) {
    const auto& f = alg.field();
    const Tensor<K> one = one_tensor(alg, a.order());
    const std::size_t dim = a.dim(), order = a.order();
    auto multiply = [&](const std::vector<K>& v) {
        Tensor<K> t(dim, order, f.zero());
        t.coefficients() = v;
        return tensor_mul(alg, a, t).coefficients();
    };
    std::vector<std::vector<K>> powers;
    auto minpoly = krylov_minimal_polynomial(one.coefficients(), multiply, &powers);
    if (minpoly[0].is_zero()) return std::nullopt;
    // a^{-1} = -(1/c_0) Σ_{k≥1} c_k a^{k-1}
    Tensor<K> inv(dim, order, f.zero());
    for (std::size_t k = 1; k < minpoly.size(); ++k) {
        if (minpoly[k].is_zero()) continue;
        for (std::size_t i = 0; i < inv.size(); ++i)
            if (!powers[k - 1][i].is_zero()) inv[i] += minpoly[k] * powers[k - 1][i];
    }
    inv *= -minpoly[0].inverse();
    if (!(tensor_mul(alg, a, inv) == one) || !(tensor_mul(alg, inv, a) == one))
        throw Error(ErrorKind::InternalInconsistency, "Krylov inverse failed verification");
    return inv;
}

template <class K>
Tensor<K> invert(const Algebra<K>& alg, const Tensor<K>& a) {
    auto inv = try_invert(alg, a);
    if (!inv) throw Error(ErrorKind::NotInvertible, "element is a zero divisor");
    return *inv;
}

/// Matrix of left multiplication by a (column j = a·e_j).
template <class K>
Matrix<K> left_multiplication(const Algebra<K>& alg, const Element<K>& a) {
    const std::size_t n = alg.dim();
    Matrix<K> m(n, n, alg.field().zero());
    for (auto i : a.nonzeros())
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : alg.terms(i, j)) m(t.k, j) += a[i] * t.c;
    return m;
}

}  // namespace hopf
