// Runs the ten acceptance criteria and prints one line per criterion.

#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "census_oracle.hpp"
#include "hopf/census.hpp"
#include "hopf/repdims.hpp"
#include "hopf/triangular.hpp"
#include "hopf/zoo.hpp"

using namespace hopf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

Subgroup everything(const FiniteGroup& g) {
    Subgroup all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

template <class F>
struct Symplectic {
    FiniteGroup G;
    HopfAlgebra<typename F::Scalar> H;
    Twist<typename F::Scalar> J;
};

template <class F>
Symplectic<F> symplectic(std::size_t n, const F& field) {
    auto g = FiniteGroup::abelian({n, n});
    auto h = group_algebra(g, field);
    auto j = symplectic_twist(h, g, {everything(g), standard_omega(2)});
    return {g, h, j};
}

/// Σ R(a,b) S(e_b) e_a from structure constants.
template <class K>
Element<K> drinfeld_by_sum(const HopfAlgebra<K>& h, const TensorElement<K>& r) {
    Element<K> out = h.zero_element();
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = 0; b < h.dim(); ++b) {
            if (r(a, b).is_zero()) continue;
            for (std::size_t s = 0; s < h.dim(); ++s) {
                if (h.antipode()(s, b).is_zero()) continue;
                for (std::size_t k = 0; k < h.dim(); ++k) out[k] += r(a, b) * h.antipode()(s, b) * h.mul(s, a, k);
            }
        }
    return out;
}

Outcome twist_axioms() {
    Outcome o;
    const std::vector<std::pair<std::size_t, std::uint32_t>> cases{{2, 5}, {3, 7}, {5, 11}};
    for (auto [n, q] : cases) {
        PrimeField f(q);
        auto s = symplectic(n, f);
        o.require(verify_twist(s.H, s.J.J()).ok(), "J_omega on (Z" + std::to_string(n) + ")^2 over GF(" + std::to_string(q) + ")");
    }
    CyclotomicField rationals(1);
    auto h4 = sweedler_h4(rationals);
    for (long long t : {0, 1, 2})
        o.require(verify_twist(h4, sweedler_twist_element(h4, rationals.from_int(t))).ok(), "Sweedler J(" + std::to_string(t) + ")");
    return o;
}

Outcome identity_battery() {
    Outcome o;
    auto run = [&](const auto& h, const auto& j, const std::string& name) {
        for (const auto& c : check_twist_identities(h, j, &j).checks) o.require(c.pass, name + ": " + c.name);
    };
    const std::vector<std::pair<std::size_t, std::uint32_t>> cases{{2, 5}, {3, 7}, {5, 11}};
    for (auto [n, q] : cases) {
        PrimeField f(q);
        auto s = symplectic(n, f);
        run(s.H, s.J, "J_omega on (Z" + std::to_string(n) + ")^2");
    }
    CyclotomicField rationals(1);
    auto h4 = sweedler_h4(rationals);
    for (long long t : {0, 1, 2}) run(h4, sweedler_twist(h4, rationals.from_int(t)), "Sweedler J(" + std::to_string(t) + ")");
    return o;
}

Outcome integrals() {
    Outcome o;
    auto run = [&](std::size_t n, std::uint32_t q) {
        PrimeField f(q);
        auto s = symplectic(n, f);
        const auto d = integrals_on(s.H);
        const auto tw = twisted_integrals(s.H, s.J);
        const auto dj = integrals_on(twist_hopf(s.H, s.J));
        const auto name = "(Z" + std::to_string(n) + ")^2";
        o.require(proportionality(tw.lambda_J.values, dj.lambda.values).has_value(), name + ": u -> lambda");
        o.require(proportionality(tw.rho_J.values, dj.rho.values).has_value(), name + ": rho <- u^-1");
        o.require(tw.lambda_J(s.H.one()) == d.lambda(s.H.one()), name + ": <lambda_J,1> = <lambda,1>");
    };
    run(3, 7);
    run(2, 5);
    return o;
}

Outcome cosemisimplicity() {
    Outcome o;
    PrimeField f5(5);
    auto s = symplectic(2, f5);
    const std::vector<Twist<Fp>> twists{trivial_twist(s.H), s.J, make_twist(s.H, flip(s.J.J()))};
    o.require(!(twists[1].J() == twists[2].J()), "J_omega' distinct from J_omega");
    for (std::size_t l = 0; l < 3; ++l)
        for (std::size_t j = 0; j < 3; ++j) {
            const auto c = build_two_sided(s.H, twists[l], twists[j]);
            const auto pair = "(" + std::to_string(l) + "," + std::to_string(j) + ")";
            try {
                coseparability_pairing(c);
            } catch (const Error& e) {
                o.require(false, pair + ": " + e.what());
            }
            o.require(decompose(dual_algebra(c)).radical_dim == 0, pair + ": radical");
        }
    return o;
}

Outcome blattner_montgomery() {
    Outcome o;
    CyclotomicField rationals(1);
    auto h4 = sweedler_h4(rationals);
    const auto d = decompose(dual_algebra(build_two_sided(h4, trivial_twist(h4), sweedler_twist(h4, rationals.one()))));
    o.require(d.radical_dim == 0, "radical of (H^(1,J))*");
    o.require(d.block_dims == std::vector<std::size_t>{2}, "blocks [2]");
    for (long long t : {0, 1, 2}) {
        const auto count = grouplike_count(twisted_coalgebra(h4, sweedler_twist(h4, rationals.from_int(t))));
        o.require(count == (t == 0 ? 2u : 0u), "grouplike count at t = " + std::to_string(t));
    }
    return o;
}

Outcome duality() {
    Outcome o;
    PrimeField f11(11);
    auto s = symplectic(5, f11);
    const auto rt = roundtrip_DH(s.H, s.G, s.J);
    o.require(rt.ok, "D_H* D_H = id");
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            long long v = 0;
            for (std::size_t k = 0; k < 2; ++k) v += rt.dual[i][k] * rt.original[k][j];
            o.require(((v % 5) + 5) % 5 == (i == j ? 1 : 0), "dual bicharacter is the inverse form");
        }
    const auto d = dual_twist(s.H, s.G, s.J);
    o.require(d.gauge_independent == std::optional<bool>(true), "class independent of pi");
    const auto& c = d.c.J();
    const std::size_t n = s.G.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t x = 0; x < n; ++x)
                o.require(c(s.G.mul(a, b), x) * c(a, b) == c(a, s.G.mul(b, x)) * c(b, x), "2-cocycle identity");
    o.require(verify_twist(dual_hopf(s.H), c).ok(), "dual twist on k^V");
    return o;
}

Outcome rep_dimensions() {
    Outcome o;
    PrimeField f5(5);
    auto g = FiniteGroup::abelian({2, 2});
    const SymplecticTwistSpec trivial{{g.identity()}, {}};
    const SymplecticTwistSpec full{everything(g), standard_omega(2)};
    auto run = [&](const SymplecticTwistSpec& l, const std::vector<std::size_t>& want, const std::string& name) {
        const auto d = repdims(g, l, full, f5);
        o.require(d.rows.size() == 1, name + ": one double coset");
        if (d.rows.size() != 1) return;
        o.require(d.rows[0].predicted == want, name + ": predicted");
        o.require(d.rows[0].actual == want, name + ": decomposition");
        o.require(d.sum_of_squares() == 4, name + ": sum of squares");
    };
    run(trivial, {2}, "({e},G)");
    run(full, {1, 1, 1, 1}, "(G,G)");
    return o;
}

Outcome census() {
    Outcome o;
    auto klein = FiniteGroup::abelian({2, 2});
    const std::vector<std::tuple<std::string, FiniteGroup, std::uint64_t, std::size_t>> cases{
        {"Z2xZ2 char 0", klein, 0, 2},
        {"Z2xZ2 char 2", klein, 2, 1},
        {"Z4 char 0", FiniteGroup::cyclic(4), 0, 1},
        {"S3 char 0", FiniteGroup::symmetric(3), 0, 1},
    };
    for (const auto& [name, g, p, want] : cases) {
        const auto c = classify_twists(g, p);
        o.require(c.classes.size() == want, name + ": class count");
        o.require(oracle::brute_force_classes(g, p) == want, name + ": brute force");
        for (const auto& e : c.classes) o.require(e.certified, name + ": certified");
    }
    return o;
}

Outcome drinfeld_double() {
    Outcome o;
    auto run = [&](std::size_t n, std::uint32_t q) {
        PrimeField f(q);
        const auto a = group_algebra(FiniteGroup::cyclic(n), f);
        const auto d = double_twist(a);
        const auto name = "k[Z" + std::to_string(n) + "]";
        o.require(verify_twist(d.H, d.J.J()).ok(), name + ": twist");
        o.require(heisenberg_check(a), name + ": Heisenberg double simple");
    };
    run(2, 5);
    run(3, 7);
    return o;
}

Outcome triangular() {
    Outcome o;
    PrimeField f7(7);
    auto s = symplectic(3, f7);
    const auto hj = twist_hopf(s.H, s.J);
    const auto r = r_matrix(s.H, s.J, s.H.one());
    for (const auto& c : verify_quasitriangular(hj, r).checks) o.require(c.pass, "(Z3)^2: " + c.name);
    o.require(drinfeld_element(hj, r) == s.J.u(), "(Z3)^2: u_D = u_J");
    o.require(drinfeld_by_sum(hj, r) == s.J.u(), "(Z3)^2: u_D by structure constants");

    PrimeField f5(5);
    const TriangularQuadruple quad{FiniteGroup::abelian({2, 2, 2}), {{0, 2, 4, 6}, standard_omega(2)}, 1};
    const auto t = triangular_hopf(quad, f5);
    for (const auto& c : verify_quasitriangular(t.H, t.R).checks) o.require(c.pass, "H(G,K,V,u): " + c.name);
    o.require(!integrals_on(t.H).lambda(t.H.one()).is_zero(), "lambda(1) != 0");
    o.require(t.H.antipode() * t.H.antipode() == Matrix<Fp>::identity(t.H.dim(), f5), "S^2 = id");
    o.require(antipode(t.base, t.J.Q()) == t.J.Q(), "S(Q) = Q");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"twist axioms", twist_axioms},
        {"twist identity battery", identity_battery},
        {"twisted integrals", integrals},
        {"two-sided cosemisimplicity", cosemisimplicity},
        {"Sweedler twist, blocks and grouplikes", blattner_montgomery},
        {"dual twist and round trip", duality},
        {"representation dimensions", rep_dimensions},
        {"twist census", census},
        {"Drinfeld double twist", drinfeld_double},
        {"triangular structures", triangular},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %2zu %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.pass ? "" : ": ",
                    o.detail.c_str());
        if (!o.pass) ++failed;
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
