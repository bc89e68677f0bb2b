#pragma once

#include <numeric>
#include <random>

#include "hopf/group_algebra.hpp"
#include "hopf/zoo.hpp"

namespace fixtures {

using namespace hopf;

inline Cyclotomic q(long long num, long long den = 1) { return CyclotomicField(1).from_rational(num, den); }

/// Uniformly random element over a prime field, with ε(x) forced to 1 by adjusting the unit coefficient.
template <class K>
Element<K> random_counit_one(const HopfAlgebra<K>& h, std::mt19937_64& rng, std::uint32_t p) {
    const auto& f = h.field();
    Element<K> x = h.zero_element();
    for (std::size_t i = 0; i < h.dim(); ++i) x[i] = f.from_int(static_cast<long long>(rng() % p));
    // unit basis vector has counit 1 in every shipped instance
    std::size_t unit_index = 0;
    while (h.unit()[unit_index].is_zero()) ++unit_index;
    K eps = counit(h, x);
    x[unit_index] += f.one() - eps;
    return x;
}

/// Evaluates φ(g·h) by explicit structure-constant multiplication.
template <class K>
K eval_product(const HopfAlgebra<K>& h, const Functional<K>& phi, const Element<K>& a, const Element<K>& b) {
    return phi(mul(h, a, b));
}

template <class F>
struct SymplecticInstance {
    FiniteGroup G;
    HopfAlgebra<typename F::Scalar> H;
    Twist<typename F::Scalar> J;
};

/// k[ℤ_n×ℤ_n] with the twist of the standard form ω scaled by `scale`.
template <class F>
SymplecticInstance<F> symplectic(std::size_t n, const F& field, long long scale = 1) {
    auto g = FiniteGroup::abelian({n, n});
    auto h = group_algebra(g, field);
    std::vector<std::size_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    auto j = symplectic_twist(h, g, {all, standard_omega(2, scale)});
    return {g, h, j};
}

}  // namespace fixtures
