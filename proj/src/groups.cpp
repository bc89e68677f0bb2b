#include "hopf/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hopf/error.hpp"
#include "json.hpp"

namespace hopf {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidCayleyTable, what); }

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
    const std::size_t n = table_.size();
    if (n == 0) invalid("empty table");
    for (const auto& row : table_) {
        if (row.size() != n) invalid("table is not square");
        for (auto x : row)
            if (x >= n) invalid("entry out of range");
    }
    if (labels_.empty())
        for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    if (labels_.size() != n) invalid("label count differs from order");

    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) invalid("no identity element");

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    invalid("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");

    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] == n) invalid("element " + std::to_string(a) + " has no inverse");
    }
    orders_.assign(n, 1);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t x = a;
        while (x != identity_) {
            x = table_[x][a];
            ++orders_[a];
        }
    }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) { return abelian({n}); }

FiniteGroup FiniteGroup::abelian(const std::vector<std::size_t>& orders) {
    std::size_t n = 1;
    for (auto m : orders) n *= m;
    auto decode = [&](std::size_t idx) {
        std::vector<std::size_t> c(orders.size());
        for (std::size_t f = orders.size(); f-- > 0;) {
            c[f] = idx % orders[f];
            idx /= orders[f];
        }
        return c;
    };
    auto encode = [&](const std::vector<std::size_t>& c) {
        std::size_t idx = 0;
        for (std::size_t f = 0; f < orders.size(); ++f) idx = idx * orders[f] + c[f];
        return idx;
    };
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        auto ca = decode(a);
        std::string l = "(";
        for (std::size_t f = 0; f < ca.size(); ++f) l += (f ? "," : "") + std::to_string(ca[f]);
        labels.push_back(l + ")");
        for (std::size_t b = 0; b < n; ++b) {
            auto cb = decode(b);
            for (std::size_t f = 0; f < orders.size(); ++f) cb[f] = (ca[f] + cb[f]) % orders[f];
            t[a][b] = encode(cb);
        }
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    const std::size_t order = 2 * n;
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < order; ++x) {
        std::size_t a = x % n, b = x / n;
        labels.push_back("r" + std::to_string(a) + (b ? "s" : ""));
        for (std::size_t y = 0; y < order; ++y) {
            std::size_t c = y % n, d = y / n;
            std::size_t ra = b ? (a + n - c) % n : (a + c) % n;
            t[x][y] = ra + n * ((b + d) % 2);
        }
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<std::size_t>, std::size_t> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        index[perms[i]] = i;
        std::string l = "[";
        for (std::size_t k = 0; k < n; ++k) l += (k ? " " : "") + std::to_string(perms[i][k]);
        labels.push_back(l + "]");
    }
    std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<std::size_t> c(n);
            for (std::size_t k = 0; k < n; ++k) c[k] = perms[a][perms[b][k]];  // a∘b
            t[a][b] = index[c];
        }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order();
    std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < na * nb; ++x) {
        labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
        for (std::size_t y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

std::size_t FiniteGroup::pow(std::size_t a, long long k) const {
    const long long m = static_cast<long long>(orders_[a]);
    k = ((k % m) + m) % m;
    std::size_t x = identity_;
    for (long long i = 0; i < k; ++i) x = mul(x, a);
    return x;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::is_central(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::size_t FiniteGroup::exponent() const {
    std::size_t e = 1;
    for (auto o : orders_) e = std::lcm(e, o);
    return e;
}

Subgroup FiniteGroup::closure(const std::vector<std::size_t>& generators) const {
    std::vector<bool> in(order(), false);
    std::vector<std::size_t> elems{identity_};
    in[identity_] = true;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto g : generators) {
            std::size_t x = mul(elems[i], g);
            if (!in[x]) {
                in[x] = true;
                elems.push_back(x);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<Subgroup> FiniteGroup::subgroups() const {
    std::set<Subgroup> found;
    std::vector<Subgroup> frontier{closure({})};
    found.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& h : frontier) {
            std::vector<bool> in(order(), false);
            for (auto x : h) in[x] = true;
            for (std::size_t g = 0; g < order(); ++g) {
                if (in[g]) continue;
                auto gens = h;
                gens.push_back(g);
                auto s = closure(gens);
                if (found.insert(s).second) next.push_back(std::move(s));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

bool FiniteGroup::is_abelian(const Subgroup& k) const {
    for (auto a : k)
        for (auto b : k)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

Subgroup FiniteGroup::conjugate(std::size_t g, const Subgroup& k) const {
    Subgroup out;
    for (auto a : k) out.push_back(conj(g, a));
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup FiniteGroup::intersection(const Subgroup& a, const Subgroup& b) const {
    Subgroup out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Subgroup> FiniteGroup::double_cosets(const Subgroup& kl, const Subgroup& kj) const {
    std::vector<bool> seen(order(), false);
    std::vector<Subgroup> out;
    for (std::size_t g = 0; g < order(); ++g) {
        if (seen[g]) continue;
        Subgroup z;
        for (auto a : kl)
            for (auto b : kj) {
                std::size_t x = mul(mul(a, g), b);
                if (!seen[x]) {
                    seen[x] = true;
                    z.push_back(x);
                }
            }
        std::sort(z.begin(), z.end());
        out.push_back(std::move(z));
    }
    return out;
}

FiniteGroup FiniteGroup::permuted(const std::vector<std::size_t>& perm) const {
    const std::size_t n = order();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
        labels[perm[a]] = labels_[a];
        for (std::size_t b = 0; b < n; ++b) t[perm[a]][perm[b]] = perm[mul(a, b)];
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

// ---------------------------------------------------------------------------

namespace {

bool is_prime_power(std::size_t n) {
    if (n < 2) return false;
    std::size_t p = 2;
    while (n % p) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

AbelianBasis abelian_basis(const FiniteGroup& g, const Subgroup& k) {
    if (!g.is_abelian(k)) throw Error(ErrorKind::HypothesisViolation, "subgroup is not abelian");
    // Candidates: elements of prime-power order, largest order first.
    std::vector<std::size_t> cand;
    for (auto x : k)
        if (is_prime_power(g.element_order(x))) cand.push_back(x);
    std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) { return g.element_order(a) > g.element_order(b); });

    std::vector<std::size_t> chosen;
    std::function<bool(const Subgroup&)> search = [&](const Subgroup& span) {
        if (span.size() == k.size()) return true;
        for (auto x : cand) {
            auto gens = chosen;
            gens.push_back(x);
            auto s = g.closure(gens);
            if (s.size() != span.size() * g.element_order(x)) continue;
            // Canonical choice order: next generator's order never exceeds the previous one.
            if (!chosen.empty() && g.element_order(x) > g.element_order(chosen.back())) continue;
            chosen.push_back(x);
            if (search(s)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(g.closure({}))) throw Error(ErrorKind::InternalInconsistency, "no cyclic decomposition found");

    AbelianBasis basis;
    basis.generators = chosen;
    for (auto x : chosen) {
        basis.orders.push_back(g.element_order(x));
        basis.exponent = std::lcm(basis.exponent, g.element_order(x));
    }
    // Enumerate coordinates.
    std::vector<std::size_t> c(chosen.size(), 0);
    std::map<std::size_t, std::vector<std::size_t>> coords;
    while (true) {
        std::size_t x = g.identity();
        for (std::size_t a = 0; a < chosen.size(); ++a) x = g.mul(x, g.pow(chosen[a], static_cast<long long>(c[a])));
        coords[x] = c;
        std::size_t a = chosen.size();
        while (a-- > 0) {
            if (++c[a] < basis.orders[a]) break;
            c[a] = 0;
        }
        if (a == static_cast<std::size_t>(-1)) break;
    }
    for (auto& [x, cx] : coords) {
        basis.elements.push_back(x);
        basis.coordinates.push_back(cx);
    }
    return basis;
}

std::vector<std::size_t> primary_invariants(const FiniteGroup& g, const Subgroup& k) {
    auto b = abelian_basis(g, k);
    auto o = b.orders;
    std::sort(o.begin(), o.end());
    return o;
}

bool is_square_abelian(const FiniteGroup& g, const Subgroup& k) {
    if (!g.is_abelian(k)) return false;
    std::map<std::size_t, std::size_t> count;
    for (auto o : primary_invariants(g, k)) ++count[o];
    for (auto& [o, c] : count)
        if (c % 2) return false;
    return true;
}

FiniteGroup parse_cayley_table(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error(ErrorKind::ParseError, "empty Cayley table input");
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::string> labels;
    if (text[first] == '{' || text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
        const nlohmann::json& t = j.is_object() ? j.at("table") : j;
        try {
            table = t.get<std::vector<std::vector<std::size_t>>>();
            if (j.is_object() && j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
    } else {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::vector<std::size_t> row;
            std::istringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ',')) {
                try {
                    std::size_t pos = 0;
                    long long v = std::stoll(cell, &pos);
                    if (v < 0) throw Error(ErrorKind::ParseError, "negative index in CSV table");
                    row.push_back(static_cast<std::size_t>(v));
                } catch (const std::logic_error&) {
                    throw Error(ErrorKind::ParseError, "bad CSV cell '" + cell + "'");
                }
            }
            table.push_back(std::move(row));
        }
    }
    return FiniteGroup(std::move(table), std::move(labels));
}

std::string cayley_table_json(const FiniteGroup& g) {
    nlohmann::json j;
    j["labels"] = g.labels();
    j["table"] = g.table();
    return j.dump();
}

}  // namespace hopf
