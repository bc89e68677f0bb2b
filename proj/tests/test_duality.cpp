#include "doctest.h"

#include "fixtures.hpp"
#include "hopf/duality.hpp"

using namespace hopf;
using fixtures::symplectic;

namespace {

/// Minimal polynomial-free check that x² is a scalar, by direct product in R.
template <class K>
std::optional<K> square_scalar(const Algebra<K>& r, const Element<K>& x) {
    return proportionality(mul(r, x, x).coefficients(), r.one().coefficients());
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

/// 2×2 inverse of an exponent matrix modulo p.
std::vector<std::vector<long long>> inverse_mod(const std::vector<std::vector<long long>>& m, long long p) {
    const long long det = mod(m[0][0] * m[1][1] - m[0][1] * m[1][0], p);
    long long inv = 1;
    while (mod(inv * det, p) != 1) ++inv;
    return {{mod(inv * m[1][1], p), mod(-inv * m[0][1], p)}, {mod(-inv * m[1][0], p), mod(inv * m[0][0], p)}};
}

}  // namespace

TEST_CASE("Skolem–Noether map on (ℤ₂)²") {
    PrimeField f5(5);
    auto i2 = symplectic(2, f5);
    auto sn = skolem_noether(i2.H, i2.G, i2.J);
    const auto& r = sn.R;
    CHECK(sn.at(i2.G.identity()) == r.one());
    // The three non-identity images square to nonzero scalars and pairwise anticommute.
    for (std::size_t a = 1; a < 4; ++a) {
        auto s = square_scalar(r, sn.at(a));
        REQUIRE(s.has_value());
        CHECK_FALSE(s->is_zero());
        for (std::size_t b = a + 1; b < 4; ++b)
            CHECK(mul(r, sn.at(a), sn.at(b)) == f5.from_int(-1) * mul(r, sn.at(b), sn.at(a)));
    }
    // Uniqueness up to scalar: the solution space of each conjugation system is a line.
    for (std::size_t x = 0; x < 4; ++x) {
        Matrix<Fp> sys(64, 4, f5.zero());
        for (std::size_t a = 0; a < 4; ++a) {
            auto ea = r.basis(a);
            for (std::size_t k = 0; k < 4; ++k) {
                auto lhs = mul(r, r.basis(k), detail::act_right(i2.H, ea, x));
                auto rhs = mul(r, ea, r.basis(k));
                for (std::size_t i = 0; i < 4; ++i) sys(a * 16 + i, k) = lhs[i] - rhs[i];
            }
        }
        CHECK(nullspace(sys).size() == 1);
    }
}

TEST_CASE("Skolem–Noether map of the trivial group") {
    PrimeField f7(7);
    auto g = FiniteGroup::cyclic(1);
    auto h = group_algebra(g, f7);
    auto sn = skolem_noether(h, g, trivial_twist(h));
    CHECK(sn.at(0) == sn.R.one());
    auto d = dual_twist(h, g, sn);
    CHECK(d.c.J() == trivial_twist(dual_hopf(h)).J());
    CHECK(d.gauge_independent == std::optional<bool>(true));
}

TEST_CASE("Skolem–Noether map on (ℤ₃)² is a projective representation") {
    PrimeField f7(7);
    auto i3 = symplectic(3, f7);
    auto sn = skolem_noether(i3.H, i3.G, i3.J);
    const auto& r = sn.R;
    std::size_t scalar_pairs = 0;
    for (std::size_t a = 0; a < 9; ++a)
        for (std::size_t b = 0; b < 9; ++b) {
            auto c = proportionality(mul(r, sn.at(a), sn.at(b)).coefficients(), sn.at(i3.G.mul(a, b)).coefficients());
            if (c && !c->is_zero()) ++scalar_pairs;
        }
    CHECK(scalar_pairs == 81);
    // inner action on every basis pair, by the definition ⟨a·g, c⟩ = ⟨a, gc⟩
    for (std::size_t x = 0; x < 9; ++x)
        for (std::size_t a = 0; a < 9; ++a) {
            Element<Fp> ag(9, 1, f7.zero());
            for (std::size_t c = 0; c < 9; ++c) ag[c] = r.basis(a)[i3.G.mul(x, c)];
            CHECK(mul(r, mul(r, sn.bar(x), r.basis(a)), sn.at(x)) == ag);
        }
}

TEST_CASE("Skolem–Noether preconditions") {
    PrimeField f7(7);
    auto g = FiniteGroup::cyclic(3);
    auto h = group_algebra(g, f7);
    try {
        skolem_noether(h, g, trivial_twist(h));
        FAIL("expected DegenerateTwist");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateTwist);
    }
    auto kg = function_algebra(FiniteGroup::abelian({2, 2}), f7);
    try {
        skolem_noether(kg, FiniteGroup::abelian({2, 2}), trivial_twist(kg));
        FAIL("expected NotGroupAlgebra");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotGroupAlgebra);
    }
}

TEST_CASE("dual twists are 2-cocycles") {
    PrimeField f5(5), f7(7);
    auto i2 = symplectic(2, f5);
    auto i3 = symplectic(3, f7);
    auto check = [](const auto& inst) {
        auto sn = skolem_noether(inst.H, inst.G, inst.J);
        auto d = dual_twist(inst.H, inst.G, sn);
        const auto& gg = inst.G;
        const std::size_t n = gg.order();
        // c(h,g) = π(hg)π̄(g)π̄(h), from three products per pair
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t x = 0; x < n; ++x) {
                auto v = mul(sn.R, mul(sn.R, sn.at(gg.mul(h, x)), sn.bar(x)), sn.bar(h));
                CHECK(v == d.c.J()(h, x) * sn.R.one());
            }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t x = 0; x < n; ++x)
                    CHECK(d.c.J()(gg.mul(a, b), x) * d.c.J()(a, b) == d.c.J()(a, gg.mul(b, x)) * d.c.J()(b, x));
        CHECK(verify_twist(dual_hopf(inst.H), d.c.J()).ok());
        CHECK(d.gauge_independent == std::optional<bool>(true));
        // non-degenerate class: c is not symmetric
        CHECK_FALSE(d.c.J() == flip(d.c.J()));
    };
    check(i2);
    check(i3);
}

TEST_CASE("D_H inverts the symplectic form") {
    PrimeField f11(11);
    auto i5 = symplectic(5, f11);
    auto rt = roundtrip_DH(i5.H, i5.G, i5.J);
    CHECK(rt.ok);
    CHECK(rt.dual == inverse_mod(rt.original, 5));
    CHECK(rt.original == std::vector<std::vector<long long>>{{0, 1}, {4, 0}});
    CHECK(rt.dual == std::vector<std::vector<long long>>{{0, 4}, {1, 0}});

    // both routes to the bicharacter agree
    Subgroup all(25);
    std::iota(all.begin(), all.end(), 0);
    auto basis = abelian_basis(i5.G, all);
    CHECK(bicharacter_matrix(i5.H, i5.G, basis, i5.J.J()) == bicharacter_matrix(i5.H, i5.G, basis, i5.J));

    PrimeField f5(5);
    auto i2 = symplectic(2, f5);
    CHECK(roundtrip_DH(i2.H, i2.G, i2.J).ok);
}

TEST_CASE("round trip on (ℤ₃)⁴") {
    PrimeField f7(7);
    auto g = FiniteGroup::abelian({3, 3, 3, 3});
    auto h = group_algebra(g, f7);
    Subgroup all(81);
    for (std::size_t x = 0; x < 81; ++x) all[x] = x;
    auto j = symplectic_twist(h, g, {all, standard_omega(4)});
    auto rt = roundtrip_DH(h, g, j);
    CHECK(rt.ok);
}
