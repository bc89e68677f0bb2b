#include "hopf/census.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "hopf/cotwist.hpp"
#include "hopf/group_algebra.hpp"
#include "hopf/repdims.hpp"

namespace hopf {

namespace {

bool is_square(std::size_t n) {
    const auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    return r * r == n;
}

/// (K, ω) as K together with ω tabulated on characters listed by their sorted value vectors.
using Key = std::pair<Subgroup, std::vector<long long>>;

/// chars[i] = exponents of character i on the elements of k (in order); form[i][j] = ω exponent.
Key make_key(const Subgroup& k, const std::vector<std::vector<long long>>& chars, const std::vector<std::vector<long long>>& form) {
    std::vector<std::size_t> order(chars.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return chars[a] < chars[b]; });
    std::vector<long long> t;
    t.reserve(order.size() * order.size());
    for (auto a : order)
        for (auto b : order) t.push_back(form[a][b]);
    return {k, std::move(t)};
}

struct Pair {
    Subgroup K;
    AbelianBasis basis;
    std::vector<std::vector<long long>> omega;
    std::vector<std::vector<long long>> chars;  // per coordinate vector of the basis
    std::vector<std::vector<long long>> form;
};

Pair tabulate(const FiniteGroup& g, const Subgroup& k, const std::vector<std::vector<long long>>& omega) {
    Pair p{k, abelian_basis(g, k), omega, {}, {}};
    const auto& b = p.basis;
    const std::size_t m = k.size(), r = b.orders.size();
    const long long e = static_cast<long long>(b.exponent);
    std::vector<std::size_t> at(g.order(), m);
    for (std::size_t i = 0; i < m; ++i) at[b.elements[i]] = i;
    p.chars.assign(m, std::vector<long long>(m));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t i = 0; i < m; ++i)
            p.chars[x][i] = detail::char_exponent(b, b.coordinates[x], b.coordinates[at[k[i]]]);
    p.form.assign(m, std::vector<long long>(m));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            long long s = 0;
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t c = 0; c < r; ++c)
                    s = detail::mod(s + static_cast<long long>(b.coordinates[x][a]) * detail::mod(omega[a][c], e) % e *
                                            static_cast<long long>(b.coordinates[y][c]),
                                    e);
            p.form[x][y] = s;
        }
    return p;
}

/// Key of x·(K, ω): K ↦ xKx⁻¹ and χ ↦ χ(x⁻¹ · x).
Key conjugated_key(const FiniteGroup& g, const Pair& p, std::size_t x) {
    const auto k2 = g.conjugate(x, p.K);
    const std::size_t m = p.K.size();
    const std::size_t xi = g.inv(x);
    std::vector<std::vector<long long>> chars(m, std::vector<long long>(m));
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t j = 0; j < m; ++j) chars[c][j] = p.chars[c][detail::position(p.K, g.conj(xi, k2[j]))];
    return make_key(k2, chars, p.form);
}

template <class F>
bool certify_with(const FiniteGroup& g, const AlternatingForm& f, const F& field) {
    const auto h = group_algebra(g, field);
    const auto j = symplectic_twist(h, g, {f.K, f.omega});
    const auto local = detail::subgroup_as_group(g, f.K);
    const auto hk = group_algebra(local, field);
    const std::size_t m = f.K.size();
    TensorElement<typename F::Scalar> jk(m, 2, field.zero());
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) jk(u, v) = j.J()(f.K[u], f.K[v]);
    return is_nondegenerate(hk, make_twist(hk, jk));
}

void certify(const FiniteGroup& g, CensusEntry& entry, std::uint64_t characteristic) {
    const std::size_t e = abelian_basis(g, entry.form.K).exponent;
    if (characteristic == 0) {
        entry.certified = certify_with(g, entry.form, CyclotomicField(static_cast<std::uint32_t>(e)));
        entry.certified_over = "Q(zeta_" + std::to_string(e) + ")";
        return;
    }
    // GF(p) when it has the e-th roots; otherwise the smallest prime q ≡ 1 (mod e)
    std::uint64_t q = characteristic;
    if ((q - 1) % e != 0) {
        q = e + 1;
        while (!is_prime(q)) q += e;
    }
    entry.certified = certify_with(g, entry.form, PrimeField(static_cast<std::uint32_t>(q)));
    entry.certified_over = "GF(" + std::to_string(q) + ")";
}

}  // namespace

std::vector<std::vector<std::vector<long long>>> nondegenerate_forms(const AbelianBasis& basis) {
    const std::size_t r = basis.orders.size();
    const long long e = static_cast<long long>(basis.exponent);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<long long> step, count;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b) {
            const auto gcd = static_cast<long long>(std::gcd(basis.orders[a], basis.orders[b]));
            slots.emplace_back(a, b);
            step.push_back(e / gcd);
            count.push_back(gcd);
        }
    std::vector<std::vector<std::vector<long long>>> out;
    std::vector<long long> digit(slots.size(), 0);
    while (true) {
        std::vector<std::vector<long long>> omega(r, std::vector<long long>(r, 0));
        for (std::size_t s = 0; s < slots.size(); ++s) {
            omega[slots[s].first][slots[s].second] = digit[s] * step[s];
            omega[slots[s].second][slots[s].first] = detail::mod(-digit[s] * step[s], e);
        }
        try {
            validate_omega(basis, omega);
            out.push_back(omega);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::DegeneracyDetected) throw;
        }
        std::size_t s = 0;
        while (s < slots.size() && ++digit[s] == count[s]) digit[s++] = 0;
        if (s == slots.size()) break;
    }
    return out;
}

TwistCensus classify_twists(const FiniteGroup& g, std::uint64_t characteristic, bool certify_entries) {
    TwistCensus census;
    census.characteristic = characteristic;
    std::vector<Pair> pairs;
    std::vector<Subgroup> nonabelian;
    for (const auto& k : g.subgroups()) {
        if (!is_square(k.size())) continue;
        if (characteristic != 0 && k.size() % characteristic == 0) continue;
        if (!g.is_abelian(k)) {
            nonabelian.push_back(k);
            continue;
        }
        const auto basis = abelian_basis(g, k);
        const auto forms = k.size() == 1 ? std::vector<std::vector<std::vector<long long>>>{{}} : nondegenerate_forms(basis);
        if (!forms.empty() && !is_square_abelian(g, k))
            throw Error(ErrorKind::InternalInconsistency, "non-degenerate form on an abelian group not of the form A×A");
        for (const auto& omega : forms) pairs.push_back(tabulate(g, k, omega));
    }

    std::map<Key, std::size_t> index;
    for (std::size_t i = 0; i < pairs.size(); ++i) index[make_key(pairs[i].K, pairs[i].chars, pairs[i].form)] = i;
    std::vector<bool> seen(pairs.size(), false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (seen[i]) continue;
        CensusEntry entry{{pairs[i].K, pairs[i].omega}, 0, false, {}};
        for (std::size_t x = 0; x < g.order(); ++x) {
            const auto it = index.find(conjugated_key(g, pairs[i], x));
            if (it == index.end()) throw Error(ErrorKind::InternalInconsistency, "conjugate pair missing from the census");
            if (!seen[it->second]) {
                seen[it->second] = true;
                ++entry.orbit_size;
            }
        }
        if (certify_entries) certify(g, entry, characteristic);
        census.classes.push_back(std::move(entry));
    }

    std::vector<bool> covered(nonabelian.size(), false);
    for (std::size_t i = 0; i < nonabelian.size(); ++i) {
        if (covered[i]) continue;
        census.unclassified.push_back(nonabelian[i]);
        for (std::size_t x = 0; x < g.order(); ++x) {
            const auto c = g.conjugate(x, nonabelian[i]);
            for (std::size_t j = i; j < nonabelian.size(); ++j)
                if (nonabelian[j] == c) covered[j] = true;
        }
    }
    return census;
}

}  // namespace hopf
