// hopf: command-line front end over the interchange JSON format.
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input or usage error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "hopf/census.hpp"
#include "hopf/interchange.hpp"
#include "hopf/repdims.hpp"
#include "hopf/zoo.hpp"

using namespace hopf;

namespace {

constexpr int kPass = 0, kFail = 1, kInputError = 2;

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const Json& j) { std::cout << dump_json(j); }

bool is_input_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::ShapeError:
        case ErrorKind::InvalidCayleyTable:
        case ErrorKind::FieldMismatch:
        case ErrorKind::AlgebraMismatch:
        case ErrorKind::NoSuchRoot:
        case ErrorKind::FieldTooSmall:
        case ErrorKind::CharTwo:
            return true;
        default:
            return false;
    }
}

template <class Fn>
int with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::PrimeField) return fn(PrimeField(spec.p));
    return fn(CyclotomicField(spec.n));
}

/// Loads a Hopf document and hands (field, document) to fn.
template <class Fn>
int with_document(const std::string& path, Fn&& fn) {
    const auto doc = parse_json(read_text(path));
    if (!doc.is_object() || !doc.contains("field")) throw Error(ErrorKind::ParseError, "document has no field");
    return with_field(field_from_json(doc.at("field")), [&](const auto& field) { return fn(field, hopf_from_json(field, doc)); });
}

template <class K>
const Tensor<K>& named(const NamedTensors<K>& tensors, const std::string& name) {
    const auto it = tensors.find(name);
    if (it == tensors.end()) throw Error(ErrorKind::ParseError, "no tensor element named \"" + name + "\"");
    return it->second;
}

template <class K>
Twist<K> twist_or_trivial(const HopfAlgebra<K>& h, const NamedTensors<K>& tensors, const std::string& name) {
    return name.empty() ? trivial_twist(h) : make_twist(h, named(tensors, name));
}

template <class K>
Json scalars(const std::vector<K>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_to_string(x));
    return out;
}

Json identity_json(const IdentityReport& r) {
    Json out = Json::array();
    for (const auto& c : r.checks) out.push_back({{"identity", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return out;
}

/// The group G when h is k[G] in its group basis: e_i e_j = e_k.
template <class K>
FiniteGroup group_of(const HopfAlgebra<K>& h) {
    const std::size_t n = h.dim();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto terms = h.algebra().terms(i, j);
            if (terms.size() != 1 || !terms[0].c.is_one())
                throw Error(ErrorKind::NotGroupAlgebra, "basis is not closed under multiplication");
            table[i][j] = terms[0].k;
        }
    return FiniteGroup(table, h.basis_names());
}

Subgroup parse_subgroup(const FiniteGroup& g, const std::string& text) {
    std::vector<std::size_t> gens;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item == "e") continue;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v >= g.order()) throw Error(ErrorKind::ParseError, "bad subgroup element '" + item + "'");
        gens.push_back(v);
    }
    return g.closure(gens);
}

/// Standard form on the characters of K (trivial when K = {e}).
SymplecticTwistSpec standard_spec(const FiniteGroup& g, const Subgroup& k, long long scale) {
    if (k.size() == 1) return {k, {}};
    if (!is_square_abelian(g, k)) throw Error(ErrorKind::HypothesisViolation, "subgroup is not abelian of the form A×A");
    return {k, standard_omega(abelian_basis(g, k).orders.size(), scale)};
}

/// Smallest prime q ≡ 1 (mod m).
std::uint32_t prime_with_roots(std::size_t m) {
    std::uint32_t q = static_cast<std::uint32_t>(m) + 1;
    while (!is_prime(q)) q += static_cast<std::uint32_t>(m);
    return q;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with twists of finite-dimensional Hopf algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "decomposition seed")->envname("HOPF_SEED");

    std::function<int()> action;
    std::string input, twist, left, right, out_file, kl, kj, t_value = "1";
    std::uint32_t characteristic = 0, n_param = 2;
    long long scale_l = 1, scale_j = 1;

    auto* verify = app.add_subcommand("verify", "check the Hopf algebra axioms");
    verify->add_option("input", input, "Hopf document or -")->required();
    verify->callback([&] {
        action = [&] {
            return with_document(input, [&](const auto&, const auto& d) {
                const auto r = verify_hopf(d.H);
                Json checks = Json::array();
                for (const auto& c : r.checks) checks.push_back({{"axiom", c.axiom}, {"pass", c.pass}, {"witness", c.witness}});
                emit({{"command", "verify"}, {"pass", r.all_pass()}, {"checks", checks}});
                return r.all_pass() ? kPass : kFail;
            });
        };
    });

    auto* tverify = app.add_subcommand("twist-verify", "check the twist equation, normalization and derived identities");
    tverify->add_option("input", input)->required();
    tverify->add_option("--twist", twist, "name of the tensor element")->required();
    tverify->callback([&] {
        action = [&] {
            return with_document(input, [&](const auto&, const auto& d) {
                const auto& j = named(d.tensors, twist);
                const auto r = verify_twist(d.H, j);
                Json out{{"command", "twist-verify"},  {"twist", twist},          {"invertible", r.invertible},
                         {"twist_equation", r.twist_eqn_holds}, {"normalized", r.normalized}, {"witness", r.witness}};
                bool pass = r.ok();
                if (pass) {
                    const auto ids = check_twist_identities(d.H, make_twist(d.H, j));
                    out["identities"] = identity_json(ids);
                    pass = ids.all_pass();
                }
                out["pass"] = pass;
                emit(out);
                return pass ? kPass : kFail;
            });
        };
    });

    auto* tapply = app.add_subcommand("twist-apply", "emit H^J");
    tapply->add_option("input", input)->required();
    tapply->add_option("--twist", twist)->required();
    tapply->add_option("--out", out_file, "write the document here instead of stdout");
    tapply->callback([&] {
        action = [&] {
            return with_document(input, [&](const auto&, const auto& d) {
                const auto hj = twist_hopf(d.H, make_twist(d.H, named(d.tensors, twist)));
                const auto text = dump_json(hopf_to_json(hj));
                if (out_file.empty()) {
                    std::cout << text;
                } else {
                    std::ofstream(out_file) << text;
                    emit({{"command", "twist-apply"}, {"written", out_file}, {"pass", true}});
                }
                return kPass;
            });
        };
    });

    auto* integrals = app.add_subcommand("integrals", "integrals of H and, with --twist, of H^J");
    integrals->add_option("input", input)->required();
    integrals->add_option("--twist", twist);
    integrals->callback([&] {
        action = [&] {
            return with_document(input, [&](const auto&, const auto& d) {
                const auto data = integrals_on(d.H);
                Json out{{"command", "integrals"},
                         {"lambda", scalars(data.lambda.values)},
                         {"rho", scalars(data.rho.values)},
                         {"Lambda_left", scalars(data.Lambda_left.coefficients())},
                         {"Lambda_right", scalars(data.Lambda_right.coefficients())},
                         {"unimodular", is_unimodular(data)},
                         {"semisimple", is_semisimple_via_integral(d.H, data)},
                         {"cosemisimple", is_cosemisimple_via_integral(d.H, data)}};
                if (!twist.empty()) {
                    const auto t = twisted_integrals(d.H, make_twist(d.H, named(d.tensors, twist)));
                    out["lambda_J"] = scalars(t.lambda_J.values);
                    out["rho_J"] = scalars(t.rho_J.values);
                }
                out["pass"] = true;
                emit(out);
                return kPass;
            });
        };
    });

    auto* cosep = app.add_subcommand("cosep", "coseparability pairing of H^{(L,J)}");
    cosep->add_option("input", input)->required();
    cosep->add_option("--left", left, "L (trivial when omitted)");
    cosep->add_option("--right", right, "J (trivial when omitted)");
    cosep->callback([&] {
        action = [&] {
            return with_document(input, [&](const auto&, const auto& d) {
                const auto c = build_two_sided(d.H, twist_or_trivial(d.H, d.tensors, left), twist_or_trivial(d.H, d.tensors, right));
                const auto p = coseparability_pairing(c);
                Json psi = Json::array();
                for (std::size_t i = 0; i < d.H.dim(); ++i)
                    for (std::size_t j = 0; j < d.H.dim(); ++j)
                        if (!p.psi(i, j).is_zero()) psi.push_back(Json::array({i, j, scalar_to_string(p.psi(i, j))}));
                emit({{"command", "cosep"}, {"psi", psi}, {"pass", true}});
                return kPass;
            });
        };
    });

    auto* blocks = app.add_subcommand("blocks", "radical and simple blocks of (H^{(L,J)})*");
    blocks->add_option("input", input)->required();
    blocks->add_option("--left", left);
    blocks->add_option("--right", right);
    blocks->callback([&] {
        action = [&] {
            return with_document(input, [&](const auto&, const auto& d) {
                const auto c = build_two_sided(d.H, twist_or_trivial(d.H, d.tensors, left), twist_or_trivial(d.H, d.tensors, right));
                const auto dec = decompose(dual_algebra(c), seed);
                emit({{"command", "blocks"},
                      {"radical_dim", dec.radical_dim},
                      {"blocks", dec.block_dims},
                      {"grouplikes", grouplike_count(c)},
                      {"pass", dec.radical_dim == 0}});
                return dec.radical_dim == 0 ? kPass : kFail;
            });
        };
    });

    auto* dtwist = app.add_subcommand("dual-twist", "dual 2-cocycle of a non-degenerate twist of k[G]");
    dtwist->add_option("input", input)->required();
    dtwist->add_option("--twist", twist)->required();
    dtwist->callback([&] {
        action = [&] {
            return with_document(input, [&](const auto& field, const auto& d) {
                using K = typename std::decay_t<decltype(field)>::Scalar;
                const auto g = group_of(d.H);
                const auto dt = dual_twist(d.H, g, make_twist(d.H, named(d.tensors, twist)), seed);
                const auto cocycle = verify_twist(dual_hopf(d.H), dt.c.J()).ok();
                NamedTensors<K> tensors{{"c", dt.c.J()}};
                Json out{{"command", "dual-twist"}, {"dual", hopf_to_json(dual_hopf(d.H), tensors)}, {"pass", cocycle}};
                out["gauge_independent"] = dt.gauge_independent ? Json(*dt.gauge_independent) : Json(nullptr);
                emit(out);
                return cocycle ? kPass : kFail;
            });
        };
    });

    auto* classify = app.add_subcommand("classify", "census of twist classes of k[G]");
    classify->add_option("input", input, "Cayley table (JSON or CSV) or -")->required();
    classify->add_option("--char", characteristic, "characteristic (0 or a prime)");
    classify->callback([&] {
        action = [&] {
            if (characteristic != 0 && !is_prime(characteristic)) throw Error(ErrorKind::ParseError, "--char must be 0 or a prime");
            const auto g = parse_cayley_table(read_text(input));
            const auto c = classify_twists(g, characteristic);
            Json classes = Json::array(), unclassified = Json::array();
            bool certified = true;
            for (const auto& e : c.classes) {
                classes.push_back({{"K", e.form.K},
                                   {"omega", e.form.omega},
                                   {"orbit_size", e.orbit_size},
                                   {"certified", e.certified},
                                   {"certified_over", e.certified_over}});
                certified = certified && e.certified;
            }
            for (const auto& k : c.unclassified) unclassified.push_back(k);
            emit({{"command", "classify"},
                  {"characteristic", characteristic},
                  {"class_count", c.classes.size()},
                  {"classes", classes},
                  {"unclassified_candidates", unclassified},
                  {"pass", certified}});
            return certified ? kPass : kFail;
        };
    });

    auto* rd = app.add_subcommand("repdims", "predicted against actual block sizes per double coset");
    rd->add_option("input", input, "Cayley table or -")->required();
    rd->add_option("--kl", kl, "generators of K_L, comma separated (empty or e: trivial)")->required();
    rd->add_option("--kj", kj, "generators of K_J")->required();
    rd->add_option("--scale-l", scale_l, "L = J_{cω}");
    rd->add_option("--scale-j", scale_j, "J = J_{cω}");
    auto* rd_p = rd->add_option("--p", characteristic, "field GF(p); 0 for Q(ζ_e); default: smallest p ≡ 1 mod exp(G)");
    rd->callback([&] {
        action = [&] {
            const auto g = parse_cayley_table(read_text(input));
            const auto l = standard_spec(g, parse_subgroup(g, kl), scale_l);
            const auto j = standard_spec(g, parse_subgroup(g, kj), scale_j);
            FieldSpec spec{FieldSpec::Kind::PrimeField, prime_with_roots(g.exponent()), 1};
            if (rd_p->count() > 0) spec = characteristic == 0 ? FieldSpec{FieldSpec::Kind::CyclotomicRational, 0, static_cast<std::uint32_t>(g.exponent())}
                                                    : FieldSpec{FieldSpec::Kind::PrimeField, characteristic, 1};
            return with_field(spec, [&](const auto& field) {
                const auto data = repdims(g, l, j, field, seed);
                Json rows = Json::array();
                for (const auto& r : data.rows)
                    rows.push_back({{"Z", r.Z}, {"g", r.g}, {"M", r.M}, {"radical", r.radical}, {"predicted", r.predicted}, {"actual", r.actual}});
                const bool pass = data.agree() && data.sum_of_squares() == g.order();
                emit({{"command", "repdims"},
                      {"field", field_to_json(spec)},
                      {"K_L", data.K_L},
                      {"K_J", data.K_J},
                      {"rows", rows},
                      {"sum_of_squares", data.sum_of_squares()},
                      {"pass", pass}});
                return pass ? kPass : kFail;
            });
        };
    });

    std::string zoo_name;
    auto* zoo = app.add_subcommand("zoo", "emit a built-in instance with its twist J");
    zoo->add_option("name", zoo_name, "sweedler | double | symplectic")->required()->check(CLI::IsMember({"sweedler", "double", "symplectic"}));
    zoo->add_option("--t", t_value, "parameter of J(t) for sweedler");
    zoo->add_option("--n", n_param, "A = k[ℤ_n] for double; (ℤ_n)² for symplectic");
    auto* zoo_p = zoo->add_option("--p", characteristic, "field GF(p); 0 for the rationals or Q(ζ_n)");
    zoo->callback([&] {
        action = [&] {
            FieldSpec spec{FieldSpec::Kind::CyclotomicRational, 0, 1};
            if (zoo_name == "symplectic") spec = {FieldSpec::Kind::PrimeField, prime_with_roots(n_param), 1};
            if (zoo_p->count() > 0)
                spec = characteristic == 0 ? FieldSpec{FieldSpec::Kind::CyclotomicRational, 0, zoo_name == "symplectic" ? n_param : 1}
                                           : FieldSpec{FieldSpec::Kind::PrimeField, characteristic, 1};
            return with_field(spec, [&](const auto& field) {
                using K = typename std::decay_t<decltype(field)>::Scalar;
                if (zoo_name == "sweedler") {
                    const auto h4 = sweedler_h4(field);
                    const auto j = sweedler_twist(h4, scalar_from_string(field, t_value));
                    emit(hopf_to_json(h4, NamedTensors<K>{{"J", j.J()}}));
                } else if (zoo_name == "double") {
                    const auto d = double_twist(group_algebra(FiniteGroup::cyclic(n_param), field));
                    emit(hopf_to_json(d.H, NamedTensors<K>{{"J", d.J.J()}}));
                } else {
                    const auto g = FiniteGroup::abelian({n_param, n_param});
                    const auto h = group_algebra(g, field);
                    Subgroup all(g.order());
                    std::iota(all.begin(), all.end(), 0);
                    const auto j = symplectic_twist(h, g, {all, standard_omega(2)});
                    emit(hopf_to_json(h, NamedTensors<K>{{"J", j.J()}}));
                }
                return kPass;
            });
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    }
    try {
        return action();
    } catch (const Error& e) {
        emit({{"error", to_string(e.kind())}, {"detail", e.what()}, {"pass", false}});
        return is_input_error(e.kind()) ? kInputError : kFail;
    } catch (const std::exception& e) {
        emit({{"error", "InputError"}, {"detail", e.what()}, {"pass", false}});
        return kInputError;
    }
}
