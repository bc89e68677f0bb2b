#include "doctest.h"

#include "fixtures.hpp"
#include "hopf/repdims.hpp"

using namespace hopf;

namespace {

Subgroup everything(const FiniteGroup& g) {
    Subgroup all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

SymplecticTwistSpec trivial_spec(const FiniteGroup& g) { return {{g.identity()}, {}}; }

std::vector<std::vector<std::size_t>> actual(const DoubleCosetData& d) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& r : d.rows) out.push_back(r.actual);
    return out;
}

}  // namespace

TEST_CASE("repdims on (ℤ₂)²") {
    PrimeField f5(5);
    auto g = FiniteGroup::abelian({2, 2});
    const SymplecticTwistSpec full{everything(g), standard_omega(2)};

    auto one_sided = repdims(g, trivial_spec(g), full, f5);
    REQUIRE(one_sided.rows.size() == 1);
    CHECK(one_sided.rows[0].M == Subgroup{g.identity()});
    CHECK(one_sided.rows[0].predicted == std::vector<std::size_t>{2});
    CHECK(one_sided.rows[0].actual == std::vector<std::size_t>{2});
    CHECK(one_sided.sum_of_squares() == 4);

    auto both = repdims(g, full, full, f5);
    REQUIRE(both.rows.size() == 1);
    CHECK(both.rows[0].M == everything(g));
    CHECK(both.rows[0].predicted == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(both.rows[0].actual == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(both.sum_of_squares() == 4);

    auto none = repdims(g, trivial_spec(g), trivial_spec(g), f5);
    CHECK(none.rows.size() == 4);
    for (const auto& r : none.rows) {
        CHECK(r.Z.size() == 1);
        CHECK(r.actual == std::vector<std::size_t>{1});
    }
    CHECK(none.agree());
}

TEST_CASE("repdims on (ℤ₃)² separates ω⊗ω from ω⊗2ω") {
    PrimeField f7(7);
    auto g = FiniteGroup::abelian({3, 3});
    const SymplecticTwistSpec w1{everything(g), standard_omega(2)}, w2{everything(g), standard_omega(2, 2)};
    // L = J: the twisted coproduct L⁻¹ΔJ is Δ on an abelian group, so the dual is k^G
    auto same = repdims(g, w1, w1, f7);
    CHECK(same.rows[0].actual == std::vector<std::size_t>(9, 1));
    CHECK(same.agree());
    auto mixed = repdims(g, w1, w2, f7);
    CHECK(mixed.rows[0].radical == 1);
    CHECK(mixed.rows[0].actual == std::vector<std::size_t>{3});
    CHECK(mixed.agree());
    CHECK(mixed.sum_of_squares() == 9);
}

TEST_CASE("repdims on ℤ₃×S₃ with K = (ℤ₃)²") {
    PrimeField f7(7);
    auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::symmetric(3));
    Subgroup k9;
    for (const auto& k : g.subgroups())
        if (k.size() == 9) k9 = k;
    const SymplecticTwistSpec w{k9, standard_omega(2)};

    auto one_sided = repdims(g, trivial_spec(g), w, f7);
    REQUIRE(one_sided.rows.size() == 2);
    for (const auto& r : one_sided.rows) {
        CHECK(r.Z.size() == 9);
        CHECK(r.actual == std::vector<std::size_t>{3});
    }
    CHECK(one_sided.agree());

    // the identity coset sees W trivial; the other sees the form squared
    auto both = repdims(g, w, w, f7);
    REQUIRE(both.rows.size() == 2);
    CHECK(both.rows[0].actual == std::vector<std::size_t>(9, 1));
    CHECK(both.rows[1].actual == std::vector<std::size_t>{3});
    CHECK(both.agree());
    CHECK(both.sum_of_squares() == 18);
}

TEST_CASE("repdims on D₄ with a Klein four subgroup") {
    PrimeField f5(5);
    auto g = FiniteGroup::dihedral(4);
    const SymplecticTwistSpec w{{0, 2, 4, 6}, standard_omega(2)};
    auto d = repdims(g, trivial_spec(g), w, f5);
    CHECK(actual(d) == std::vector<std::vector<std::size_t>>{{2}, {2}});
    CHECK(d.agree());
    auto e = repdims(g, w, w, f5);
    CHECK(e.agree());
    CHECK(e.sum_of_squares() == 8);
}
