#pragma once

// Dense exact linear algebra over any scalar type from scalars.hpp.
// Matrices are row-major; a linear map is stored column-wise, i.e. column j
// holds the image of basis vector j.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopf/scalars.hpp"

namespace hopf {

template <class K>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const K& zero) : rows_(rows), cols_(cols), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const FieldOf<K>& f) {
        Matrix m(n, n, f.zero());
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<K> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const K> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<K> column(std::size_t c) const {
        std::vector<K> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    const std::vector<K>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> data_;
};

template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeError, "matrix product shape mismatch");
    Matrix<K> c(a.rows(), b.cols(), a(0, 0) - a(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const K& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <class K>
std::vector<K> operator*(const Matrix<K>& a, const std::vector<K>& x) {
    if (a.cols() != x.size()) throw Error(ErrorKind::ShapeError, "matrix-vector shape mismatch");
    std::vector<K> y(a.rows(), x.empty() ? K() : x[0] - x[0]);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !x[k].is_zero()) y[i] += a(i, k) * x[k];
    return y;
}

template <class K>
Matrix<K> transpose(const Matrix<K>& a) {
    Matrix<K> t(a.cols(), a.rows(), a.data().empty() ? K() : a(0, 0) - a(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

template <class K>
Matrix<K> from_columns(const std::vector<std::vector<K>>& cols, std::size_t rows, const K& zero) {
    Matrix<K> m(rows, cols.size(), zero);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

/// Reduced row-echelon form in place; returns the pivot column of each nonzero row.
template <class K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        K inv = m(r, c).inverse();
        for (std::size_t k = c; k < m.cols(); ++k)
            if (!m(r, k).is_zero()) m(r, k) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            K f = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
    return rref_in_place(m).size();
}

/// Basis of {x : A x = 0}; each vector has a 1 in its free coordinate.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> a) {
    const auto f = a.data().empty() ? std::optional<FieldOf<K>>() : std::optional<FieldOf<K>>(a(0, 0).field());
    auto pivots = rref_in_place(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(a.cols(), f->zero());
        v[free] = f->one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
struct AffineSolution {
    std::vector<K> particular;
    std::vector<std::vector<K>> nullspace;
};

struct Inconsistent {};

template <class K>
using SolveResult = std::variant<AffineSolution<K>, Inconsistent>;

template <class K>
SolveResult<K> solve_linear(const Matrix<K>& a, const std::vector<K>& b) {
    if (a.rows() != b.size()) throw Error(ErrorKind::ShapeError, "solve_linear: rhs length mismatch");
    if (a.rows() == 0 && a.cols() == 0) return AffineSolution<K>{};
    const K zero = a.data().empty() ? b.at(0) - b.at(0) : a(0, 0) - a(0, 0);
    Matrix<K> aug(a.rows(), a.cols() + 1, zero);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return Inconsistent{};
    AffineSolution<K> sol{std::vector<K>(a.cols(), zero), {}};
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, a.cols());
    Matrix<K> lhs(a.rows(), a.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) lhs(i, j) = a(i, j);
    sol.nullspace = nullspace(std::move(lhs));
    return sol;
}

template <class K>
std::optional<Matrix<K>> try_inverse(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeError, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return a;
    const auto f = a(0, 0).field();
    Matrix<K> aug(n, 2 * n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = f.one();
    }
    auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<K> inv(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& a) {
    auto inv = try_inverse(a);
    if (!inv) throw Error(ErrorKind::NotInvertible, "singular matrix");
    return *inv;
}

/// Canonical representative of a nonzero vector: scaled so its first nonzero entry is 1.
template <class K>
std::vector<K> normalize_first_nonzero(std::vector<K> v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            K inv = x.inverse();
            for (auto& y : v) y *= inv;
            break;
        }
    }
    return v;
}

template <class K>
bool is_zero_vector(const std::vector<K>& v) {
    return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

// ---------------------------------------------------------------------------
// Polynomials (coefficients low degree first) and minimal polynomials.

template <class K>
K evaluate(const std::vector<K>& poly, const K& x) {
    K acc = x - x;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Incremental linear-dependency detector used to find the minimal polynomial of
/// an element of a finite-dimensional algebra from its Krylov sequence 1, a, a^2, ...
/// `multiply(v)` must return a * v as a coordinate vector.
template <class K, class MulFn>
std::vector<K> krylov_minimal_polynomial(const std::vector<K>& start, MulFn multiply, std::vector<std::vector<K>>* powers_out = nullptr) {
    const auto f = start.at(0).field();
    const std::size_t n = start.size();
    // Reduced rows: vector part + combination of powers that produced it.
    struct Row {
        std::size_t pivot;
        std::vector<K> vec;
        std::vector<K> combo;
    };
    std::vector<Row> rows;
    std::vector<std::vector<K>> powers;
    std::vector<K> current = start;
    for (std::size_t d = 0; d <= n; ++d) {
        powers.push_back(current);
        std::vector<K> vec = current;
        std::vector<K> combo(d + 1, f.zero());
        combo[d] = f.one();
        for (const auto& r : rows) {
            if (vec[r.pivot].is_zero()) continue;
            K c = vec[r.pivot];
            for (std::size_t k = 0; k < n; ++k)
                if (!r.vec[k].is_zero()) vec[k] -= c * r.vec[k];
            for (std::size_t k = 0; k < r.combo.size(); ++k)
                if (!r.combo[k].is_zero()) combo[k] -= c * r.combo[k];
        }
        std::size_t piv = 0;
        while (piv < n && vec[piv].is_zero()) ++piv;
        if (piv == n) {
            if (powers_out) *powers_out = std::move(powers);
            return combo;  // sum combo[k] a^k = 0 with combo[d] = 1
        }
        K inv = vec[piv].inverse();
        for (auto& x : vec) x *= inv;
        for (auto& x : combo) x *= inv;
        rows.push_back({piv, std::move(vec), std::move(combo)});
        current = multiply(current);
    }
    throw Error(ErrorKind::InternalInconsistency, "Krylov sequence did not terminate");
}

/// Minimal polynomial of a square matrix (monic, low degree first).
template <class K>
std::vector<K> minimal_polynomial(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeError, "minimal polynomial of non-square matrix");
    const std::size_t n = a.rows();
    const auto f = a(0, 0).field();
    auto id = Matrix<K>::identity(n, f);
    std::vector<K> start = id.data();
    auto mul = [&](const std::vector<K>& v) {
        Matrix<K> m(n, n, f.zero());
        for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = v[i];
        return (a * m).data();
    };
    return krylov_minimal_polynomial(start, mul);
}

template <class K>
struct EigenvalueMultiplicity {
    K eigenvalue;
    std::size_t generalized_dim;
};

/// Distinct eigenvalues with generalized eigenspace dimensions. Throws FailedToSplit when
/// the minimal polynomial does not split into linear factors over the field.
template <class K>
std::vector<EigenvalueMultiplicity<K>> factor_minpoly_roots(const Matrix<K>& a) {
    const std::size_t n = a.rows();
    const auto f = a(0, 0).field();
    auto minpoly = minimal_polynomial(a);
    auto roots = f.roots(minpoly);
    std::vector<EigenvalueMultiplicity<K>> out;
    std::size_t total = 0;
    for (const auto& r : roots) {
        Matrix<K> shifted = a;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= r;
        Matrix<K> power = shifted;
        for (std::size_t k = 1; k < n; ++k) power = power * shifted;
        std::size_t dim = n - rank(power);
        total += dim;
        out.push_back({r, dim});
    }
    if (total != n) throw Error(ErrorKind::FailedToSplit, "minimal polynomial does not split over " + describe(f.spec()));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return canonical_less(x.eigenvalue, y.eigenvalue); });
    return out;
}

}  // namespace hopf
