#include "doctest.h"

#include "fixtures.hpp"
#include "hopf/cotwist.hpp"

using namespace hopf;
using fixtures::q;
using fixtures::symplectic;

namespace {

/// Number of e with e² = e in a 4-dim algebra over GF(5), by enumeration of all 625 elements.
std::size_t count_idempotents(const Algebra<Fp>& a) {
    const auto& f = a.field();
    std::size_t count = 0;
    for (int code = 0; code < 625; ++code) {
        Element<Fp> e(4, 1, f.zero());
        int c = code;
        for (std::size_t i = 0; i < 4; ++i, c /= 5) e[i] = f.from_int(c % 5);
        if (mul(a, e, e) == e) ++count;
    }
    return count;
}

Algebra<Fp> dual_numbers(const PrimeField& f) {
    std::vector<Fp> m(8, f.zero());
    m[(0 * 2 + 0) * 2 + 0] = f.one();
    m[(0 * 2 + 1) * 2 + 1] = f.one();
    m[(1 * 2 + 0) * 2 + 1] = f.one();
    return Algebra<Fp>(f, 2, m, {f.one(), f.zero()});
}

}  // namespace

TEST_CASE("two-sided twisted coalgebras") {
    PrimeField f5(5);
    auto i2 = symplectic(2, f5);
    auto triv = trivial_twist(i2.H);
    CHECK(build_two_sided(i2.H, triv, triv).coalgebra() == i2.H.coalgebra());
    // L = J on a commutative, cocommutative H: L⁻¹ΔJ = Δ.
    CHECK(build_two_sided(i2.H, i2.J, i2.J).coalgebra() == i2.H.coalgebra());
    auto c = build_two_sided(i2.H, triv, i2.J);
    CHECK(first_coalgebra_failure(c.coalgebra()) == 4);
    CHECK_FALSE(c.coalgebra() == i2.H.coalgebra());
}

TEST_CASE("H^(L,J) = (H^L)^(L⁻¹J)") {
    PrimeField f7(7);
    auto h4 = sweedler_h4(f7);
    auto i3 = symplectic(3, f7);
    std::mt19937_64 rng(3);
    struct Case {
        const HopfAlgebra<Fp>* h;
        Twist<Fp> l, j;
    };
    auto gauge = [&](const HopfAlgebra<Fp>& h, const Twist<Fp>& t) {
        for (;;) {
            auto x = fixtures::random_counit_one(h, rng, 7);
            if (try_invert(h.algebra(), x)) return gauge_transform(h, t, x);
        }
    };
    std::vector<Case> cases{{&h4, sweedler_twist(h4, f7.one()), sweedler_twist(h4, f7.from_int(3))},
                            {&h4, gauge(h4, sweedler_twist(h4, f7.from_int(2))), sweedler_twist(h4, f7.one())},
                            {&i3.H, i3.J, gauge(i3.H, i3.J)}};
    for (const auto& c : cases) {
        auto two_sided = build_two_sided(*c.h, c.l, c.j);
        auto hl = twist_hopf(*c.h, c.l);
        auto lj = make_twist(hl, tensor_mul(c.h->algebra(), c.l.J_inv(), c.j.J()));
        auto nested = twisted_coalgebra(hl, lj);
        CHECK(nested.coalgebra() == two_sided.coalgebra());
    }
}

TEST_CASE("coseparability pairing on group algebras") {
    PrimeField f7(7);
    auto g = FiniteGroup::symmetric(3);
    auto h = group_algebra(g, f7);
    auto triv = trivial_twist(h);
    auto p = coseparability_pairing(build_two_sided(h, triv, triv));
    CHECK(p.psi == Matrix<Fp>::identity(6, f7));

    PrimeField f5(5);
    auto i2 = symplectic(2, f5);
    auto t2 = trivial_twist(i2.H);
    auto j2 = make_twist(i2.H, flip(i2.J.J()));
    REQUIRE_FALSE(j2.J() == i2.J.J());
    for (const auto* l : {&t2, &i2.J, &j2})
        for (const auto* j : {&t2, &i2.J, &j2}) {
            auto c = build_two_sided(i2.H, *l, *j);
            CHECK_NOTHROW(coseparability_pairing(c));
            CHECK(decompose(dual_algebra(c)).radical_dim == 0);
        }
}

TEST_CASE("coseparability pairing with gauge-transformed twists") {
    // Q ≠ 1 here, so V and W are nontrivial.
    std::mt19937_64 rng(17);
    PrimeField f7(7);
    auto i3 = symplectic(3, f7);
    std::vector<Twist<Fp>> twists{trivial_twist(i3.H), i3.J};
    while (twists.size() < 4) {
        auto x = fixtures::random_counit_one(i3.H, rng, 7);
        if (try_invert(i3.H.algebra(), x)) twists.push_back(gauge_transform(i3.H, twists[twists.size() - 1], x));
    }
    CHECK_FALSE(twists[3].Q() == i3.H.one());
    for (const auto& l : twists)
        for (const auto& j : twists) {
            auto c = build_two_sided(i3.H, l, j);
            auto p = coseparability_pairing(c);
            CHECK(p.V == antipode(i3.H, l.Q()));
            CHECK(p.W == j.Q_inv());
            auto d = decompose(dual_algebra(c));
            CHECK(d.radical_dim == 0);
            std::size_t squares = 0;
            for (auto b : d.block_dims) squares += b * b;
            CHECK(squares == 9);
        }
}

TEST_CASE("coseparability pairing hypotheses") {
    CyclotomicField f(1);
    auto h4 = sweedler_h4(f);
    auto c = twisted_coalgebra(h4, sweedler_twist(h4, q(1)));
    try {
        coseparability_pairing(c);
        FAIL("expected HypothesisViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolation);
    }

    // A wrong functional breaks the first condition.
    PrimeField f5(5);
    auto kz2 = group_algebra(FiniteGroup::cyclic(2), f5);
    auto t = trivial_twist(kz2);
    try {
        coseparability_pairing(build_two_sided(kz2, t, t), Functional<Fp>{{f5.one(), f5.one()}});
        FAIL("expected PairingConditionFailure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PairingConditionFailure);
    }
}

TEST_CASE("dual algebras") {
    PrimeField f5(5);
    auto g = FiniteGroup::abelian({2, 2});
    auto h = group_algebra(g, f5);
    auto a = dual_algebra(h.coalgebra());
    CHECK(a.mul_tensor() == function_algebra(g, f5).algebra().mul_tensor());
    CHECK(is_commutative(a));
}

TEST_CASE("block decomposition") {
    PrimeField f5(5);
    auto kg = dual_algebra(group_algebra(FiniteGroup::abelian({2, 2}), f5).coalgebra());
    auto d = decompose(kg);
    CHECK(d.radical_dim == 0);
    CHECK(d.block_dims == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(count_idempotents(kg) == 16);

    auto i2 = symplectic(2, f5);
    auto tw = dual_algebra(twisted_coalgebra(i2.H, i2.J));
    auto dt = decompose(tw);
    CHECK(dt.radical_dim == 0);
    CHECK(dt.block_dims == std::vector<std::size_t>{2});
    // M₂(GF(5)) has 0, 1 and 6·5 rank-one idempotents.
    CHECK(count_idempotents(tw) == 32);
    CHECK_FALSE(is_commutative(tw));

    auto dn = decompose(dual_numbers(f5));
    CHECK(dn.radical_dim == 1);
    CHECK(dn.block_dims.empty());

    PrimeField f7(7);
    auto s3 = dual_algebra(function_algebra(FiniteGroup::symmetric(3), f7).coalgebra());
    auto ds3 = decompose(s3);
    CHECK(ds3.block_dims == std::vector<std::size_t>{1, 1, 2});
    Element<Fp> total(6, 1, f7.zero());
    for (const auto& e : ds3.central_idempotents) total += Element<Fp>::from_vector(e);
    CHECK(total == s3.one());
    // same answer for other seeds
    CHECK(decompose(s3, 12345).block_dims == ds3.block_dims);
}

TEST_CASE("decomposition errors") {
    // k^G over GF(3) is still certified semisimple: its trace form is the identity.
    PrimeField f3(3);
    CHECK(decompose(dual_algebra(group_algebra(FiniteGroup::abelian({2, 2}), f3).coalgebra())).block_dims.size() == 4);
    // The modular group algebra k[ℤ₃] over GF(3) has a degenerate trace form and char ≤ dim.
    try {
        decompose(group_algebra(FiniteGroup::cyclic(3), f3).algebra());
        FAIL("expected TraceCriterionInapplicable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TraceCriterionInapplicable);
    }
    // k[ℤ₃] over GF(5): x² + x + 1 is irreducible.
    PrimeField f5(5);
    try {
        decompose(dual_algebra(function_algebra(FiniteGroup::cyclic(3), f5).coalgebra()));
        FAIL("expected FieldTooSmall");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldTooSmall);
    }
}

TEST_CASE("simplicity and non-degenerate twists") {
    PrimeField f7(7);
    auto kg = group_algebra(FiniteGroup::cyclic(3), f7);
    CHECK_FALSE(is_nondegenerate(kg, trivial_twist(kg)));
    CHECK(grouplike_count(twisted_coalgebra(kg, trivial_twist(kg))) == 3);

    auto i3 = symplectic(3, f7);
    CHECK(is_nondegenerate(i3.H, i3.J));
    CHECK(decompose(dual_algebra(twisted_coalgebra(i3.H, i3.J))).block_dims == std::vector<std::size_t>{3});
    CHECK(grouplike_count(twisted_coalgebra(i3.H, i3.J)) == 0);

    CyclotomicField f(1);
    auto h4 = sweedler_h4(f);
    for (long long t : {1, 2, -3}) {
        auto c = twisted_coalgebra(h4, sweedler_twist(h4, q(t)));
        auto d = decompose(dual_algebra(c));
        CHECK(d.radical_dim == 0);
        CHECK(d.block_dims == std::vector<std::size_t>{2});
        CHECK(is_simple(c));
        CHECK(grouplike_count(c) == 0);
    }
    auto c0 = twisted_coalgebra(h4, sweedler_twist(h4, q(0)));
    CHECK_FALSE(is_simple(c0));
    CHECK(decompose(dual_algebra(c0)).radical_dim > 0);
    auto g0 = grouplikes(c0.coalgebra());
    REQUIRE(g0.size() == 2);
    CHECK(g0[0] + g0[1] == h4.one() + h4.basis(1));
}

TEST_CASE("grouplikes of function algebras") {
    // Group-likes of k^G are the characters of G: for S₃, the trivial and sign characters.
    PrimeField f7(7);
    auto ks3 = function_algebra(FiniteGroup::symmetric(3), f7);
    auto g = grouplikes(ks3.coalgebra());
    CHECK(g.size() == 2);
    for (const auto& x : g) CHECK(comul(ks3, x) == outer(x, x));
}
