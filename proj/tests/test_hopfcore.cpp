#include "doctest.h"

#include "fixtures.hpp"

using namespace hopf;
using fixtures::q;

namespace {

/// Direct triple-loop product from the raw structure tensor; independent of the sparse caches.
template <class K>
Element<K> naive_mul(const HopfAlgebra<K>& h, const Element<K>& a, const Element<K>& b) {
    Element<K> out = h.zero_element();
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j)
            for (std::size_t k = 0; k < h.dim(); ++k) out[k] += a[i] * b[j] * h.mul(i, j, k);
    return out;
}

}  // namespace

TEST_CASE("verify_hopf on group algebras and Sweedler's algebra") {
    PrimeField f5(5);
    auto kz2 = group_algebra(FiniteGroup::cyclic(2), f5);
    CHECK(verify_hopf(kz2).all_pass());
    CHECK(verify_hopf(sweedler_h4(CyclotomicField(1))).all_pass());
    CHECK(verify_hopf(sweedler_h4(PrimeField(7))).all_pass());
    CHECK(verify_hopf(group_algebra(FiniteGroup::symmetric(3), PrimeField(7))).all_pass());
    CHECK_THROWS_AS(sweedler_h4(PrimeField(2)), Error);
}

TEST_CASE("verify_hopf reports the first counterexample") {
    CyclotomicField f(1);
    auto h4 = sweedler_h4(f);
    HopfAlgebra<Cyclotomic> broken(f, h4.basis_names(), h4.algebra().mul_tensor(), h4.unit(), h4.coalgebra().comul_tensor(),
                                   h4.counit(), Matrix<Cyclotomic>::identity(4, f));
    auto report = verify_hopf(broken);
    CHECK_FALSE(report.all_pass());
    const auto& anti = report["antipode"];
    CHECK_FALSE(anti.pass);
    CHECK(anti.witness == std::vector<std::size_t>{2});
    CHECK(report["associativity"].pass);
    CHECK(report["coassociativity"].pass);

    // Non-associative multiplication on a 2-dim space.
    PrimeField f5(5);
    std::vector<Fp> mul(8, f5.zero());
    mul[0] = f5.one();                 // e0 e0 = e0
    mul[(0 * 2 + 1) * 2 + 1] = f5.one();
    mul[(1 * 2 + 0) * 2 + 1] = f5.one();
    mul[(1 * 2 + 1) * 2 + 1] = f5.one();  // e1 e1 = e1 (instead of e0)
    auto kz2 = group_algebra(FiniteGroup::cyclic(2), f5);
    HopfAlgebra<Fp> bad(f5, {"e", "g"}, mul, kz2.unit(), kz2.coalgebra().comul_tensor(), kz2.counit(), kz2.antipode());
    auto r2 = verify_hopf(bad);
    CHECK(r2["associativity"].pass);
    CHECK_FALSE(r2["antipode"].pass);
}

TEST_CASE("shape errors") {
    PrimeField f(5);
    CHECK_THROWS_AS(HopfAlgebra<Fp>(f, {"a"}, std::vector<Fp>(2, f.zero()), {f.one()}, {f.one()}, {f.one()}, Matrix<Fp>::identity(1, f)), Error);
    auto kz2 = group_algebra(FiniteGroup::cyclic(2), f);
    CHECK_THROWS_AS(tensor_mul(kz2, kz2.one_tensor(), kz2.one_tensor(3)), Error);
}

TEST_CASE("multiplication and tensor inversion") {
    PrimeField f5(5);
    auto kz2 = group_algebra(FiniteGroup::cyclic(2), f5);
    auto g = kz2.basis(1);
    CHECK(mul(kz2, g, g) == kz2.one());
    CHECK(mul(kz2, kz2.one(), g) == g);
    auto gg = outer(g, g);
    CHECK(tensor_invert(kz2, gg) == gg);
    CHECK(tensor_invert(kz2, kz2.one_tensor()) == kz2.one_tensor());

    CyclotomicField qf(1);
    auto h4 = sweedler_h4(qf);
    for (long long t : {0, 1, 2, 3}) {
        auto j = sweedler_twist_element(h4, q(t));
        CHECK(tensor_mul(h4, h4.one_tensor(), j) == j);
        auto inv = tensor_invert(h4, j);
        TensorElement<Cyclotomic> expect = h4.one_tensor();
        expect(3, 2) = q(t, 2);
        CHECK(inv == expect);
        CHECK(tensor_mul(h4, inv, j) == h4.one_tensor());
    }
    // 1⊗1 + x⊗x... zero divisor: (1+g)⊗1 in k[Z2].
    auto zd = outer(kz2.one() + g, kz2.one());
    try {
        tensor_invert(kz2, zd);
        FAIL("expected NotInvertible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInvertible);
    }
}

TEST_CASE("products agree with a naive structure-constant oracle") {
    std::mt19937_64 rng(7);
    PrimeField f7(7);
    auto s3 = group_algebra(FiniteGroup::symmetric(3), f7);
    auto h4 = sweedler_h4(f7);
    for (const auto* h : {&s3, &h4}) {
        for (int trial = 0; trial < 20; ++trial) {
            Element<Fp> a = h->zero_element(), b = h->zero_element();
            for (std::size_t i = 0; i < h->dim(); ++i) {
                if (rng() % 3) a[i] = f7.from_int(static_cast<long long>(rng() % 7));
                if (rng() % 3) b[i] = f7.from_int(static_cast<long long>(rng() % 7));
            }
            CHECK(mul(*h, a, b) == naive_mul(*h, a, b));
        }
    }
}

TEST_CASE("dual Hopf algebras") {
    PrimeField f5(5);
    auto kz2 = group_algebra(FiniteGroup::cyclic(2), f5);
    auto d = dual_hopf(kz2);
    CHECK(verify_hopf(d).all_pass());
    CHECK(is_commutative(d.algebra()));
    // δ_e, δ_g are orthogonal idempotents.
    CHECK(mul(d, d.basis(0), d.basis(0)) == d.basis(0));
    CHECK(mul(d, d.basis(0), d.basis(1)) == d.zero_element());
    CHECK(same_structure(dual_hopf(d), kz2));

    CyclotomicField qf(1);
    auto h4 = sweedler_h4(qf);
    CHECK(verify_hopf(dual_hopf(h4)).all_pass());
    CHECK(same_structure(dual_hopf(dual_hopf(h4)), h4));

    auto ks3 = function_algebra(FiniteGroup::symmetric(3), PrimeField(7));
    CHECK(verify_hopf(ks3).all_pass());
    CHECK(is_commutative(ks3.algebra()));
    CHECK_FALSE(is_cocommutative(ks3.coalgebra()));
}

TEST_CASE("tensor products and opposites") {
    PrimeField f5(5);
    auto z2 = FiniteGroup::cyclic(2);
    auto kz2 = group_algebra(z2, f5);
    auto prod = hopf_tensor_product(kz2, kz2);
    CHECK(verify_hopf(prod).all_pass());
    CHECK(same_structure(prod, group_algebra(FiniteGroup::direct_product(z2, z2), f5)));
    CHECK(same_structure(opposite(kz2), kz2));

    auto mixed = hopf_tensor_product(opposite(dual_hopf(kz2)), kz2);
    CHECK(mixed.dim() == 4);
    CHECK(verify_hopf(mixed).all_pass());

    auto h4 = sweedler_h4(f5);
    auto op = opposite(h4);
    CHECK(verify_hopf(op).all_pass());
    CHECK_FALSE(same_structure(op, h4));
    CHECK(verify_hopf(hopf_tensor_product(h4, kz2)).all_pass());
    CHECK_THROWS_AS(hopf_tensor_product(kz2, group_algebra(z2, PrimeField(7))), Error);
}

TEST_CASE("change of basis preserves the axioms") {
    PrimeField f5(5);
    auto kz2 = group_algebra(FiniteGroup::cyclic(2), f5);
    // Idempotent basis of k[Z2]: (1 ± g)/2.
    Matrix<Fp> p(2, 2, f5.zero());
    Fp half = f5.from_int(2).inverse();
    p(0, 0) = half;
    p(1, 0) = half;
    p(0, 1) = half;
    p(1, 1) = -half;
    auto h = change_basis(kz2, p);
    CHECK(verify_hopf(h).all_pass());
    CHECK(mul(h, h.basis(0), h.basis(0)) == h.basis(0));
    CHECK(mul(h, h.basis(0), h.basis(1)) == h.zero_element());
    // k^{Z2} in the character basis is a group algebra: Δ(χ) = χ⊗χ.
    auto d = dual_hopf(kz2);
    Matrix<Fp> c(2, 2, f5.zero());
    c(0, 0) = f5.one();
    c(1, 0) = f5.one();
    c(0, 1) = f5.one();
    c(1, 1) = -f5.one();
    auto chars = change_basis(d, c);
    CHECK(same_structure(chars, kz2));
}

TEST_CASE("actions of H on H*") {
    std::mt19937_64 rng(11);
    PrimeField f7(7);
    auto kz2 = group_algebra(FiniteGroup::cyclic(2), f7);
    auto h4 = sweedler_h4(f7);
    auto s3 = group_algebra(FiniteGroup::symmetric(3), f7);
    auto d4 = group_algebra(FiniteGroup::dihedral(4), f7);
    for (const auto* h : {&kz2, &h4, &s3, &d4}) {
        const std::size_t n = h->dim();
        Functional<Fp> phi{std::vector<Fp>(n, f7.zero())};
        for (auto& v : phi.values) v = f7.from_int(static_cast<long long>(rng() % 7));
        CHECK(hit_left(*h, h->one(), phi) == phi);
        CHECK(hit_right(*h, phi, h->one()) == phi);
        for (std::size_t x = 0; x < n; ++x) {
            auto left = hit_left(*h, h->basis(x), phi);
            auto right = hit_right(*h, phi, h->basis(x));
            for (std::size_t g = 0; g < n; ++g) {
                CHECK(left.values[g] == phi(naive_mul(*h, h->basis(g), h->basis(x))));
                CHECK(right.values[g] == phi(naive_mul(*h, h->basis(x), h->basis(g))));
            }
        }
    }
    // g ⇀ δ_g = δ_e in k[Z2]: (g ⇀ δ_g)(e) = δ_g(e·g) = 1.
    Functional<Fp> delta_g{{f7.zero(), f7.one()}};
    CHECK(hit_left(kz2, kz2.basis(1), delta_g).values == std::vector<Fp>{f7.one(), f7.zero()});
}
