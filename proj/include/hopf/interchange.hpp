#pragma once

// JSON interchange: Hopf algebras as sparse structure constants with scalar
// strings, plus named tensor elements. Keys are emitted sorted.

#include <map>
#include <string>

#include "json.hpp"
#include "hopf/hopf_algebra.hpp"

namespace hopf {

using Json = nlohmann::json;

/// {"type":"Fp","p":N} or {"type":"cyclotomic","n":N}.
Json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const Json& j);

/// Fp: the residue in [0, p). Q(ζ_n): "a/b" when rational, else "[c_0,…,c_{φ(n)-1}]" in powers of ζ_n.
std::string scalar_to_string(const Fp& x);
std::string scalar_to_string(const Cyclotomic& x);
Fp scalar_from_string(const PrimeField& f, const std::string& s);
Cyclotomic scalar_from_string(const CyclotomicField& f, const std::string& s);

/// Parses JSON text; throws ParseError.
Json parse_json(const std::string& text);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& j);

template <class K>
using NamedTensors = std::map<std::string, Tensor<K>>;

template <class K>
Json tensor_to_json(const Tensor<K>& t) {
    Json entries = Json::array();
    for (auto fl : t.nonzeros()) {
        const auto d = t.digits(fl);
        Json e = Json::array();
        for (std::size_t f = 0; f < t.order(); ++f) e.push_back(d[f]);
        e.push_back(scalar_to_string(t[fl]));
        entries.push_back(std::move(e));
    }
    return Json{{"order", t.order()}, {"entries", std::move(entries)}};
}

namespace detail {

[[noreturn]] inline void bad_document(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

inline std::size_t index_at(const Json& e, std::size_t pos, std::size_t dim, const char* what) {
    if (!e.at(pos).is_number_unsigned()) bad_document(std::string(what) + ": index is not a non-negative integer");
    const auto i = e.at(pos).get<std::size_t>();
    if (i >= dim) bad_document(std::string(what) + ": index " + std::to_string(i) + " out of range");
    return i;
}

template <class F>
typename F::Scalar scalar_at(const F& field, const Json& v, const char* what) {
    if (!v.is_string()) bad_document(std::string(what) + ": coefficients are strings");
    return scalar_from_string(field, v.get<std::string>());
}

/// Sparse [i_1,…,i_m,"c"] entries into a dense vector of size dim^m.
template <class F>
std::vector<typename F::Scalar> sparse(const F& field, const Json& list, std::size_t dim, std::size_t m, const char* what) {
    if (!list.is_array()) bad_document(std::string(what) + " must be an array");
    std::size_t size = 1;
    for (std::size_t k = 0; k < m; ++k) size *= dim;
    std::vector<typename F::Scalar> out(size, field.zero());
    for (const auto& e : list) {
        if (!e.is_array() || e.size() != m + 1) bad_document(std::string(what) + ": entries have " + std::to_string(m) + " indices and a coefficient");
        std::size_t flat = 0;
        for (std::size_t k = 0; k < m; ++k) flat = flat * dim + index_at(e, k, dim, what);
        out[flat] += scalar_at(field, e.at(m), what);
    }
    return out;
}

template <class F>
std::vector<typename F::Scalar> dense(const F& field, const Json& list, std::size_t dim, const char* what) {
    if (!list.is_array() || list.size() != dim) bad_document(std::string(what) + " must have dim entries");
    std::vector<typename F::Scalar> out;
    for (const auto& v : list) out.push_back(scalar_at(field, v, what));
    return out;
}

}  // namespace detail

template <class F>
Tensor<typename F::Scalar> tensor_from_json(const F& field, const Json& j, std::size_t dim) {
    if (!j.is_object() || !j.contains("order") || !j.contains("entries")) detail::bad_document("tensor needs order and entries");
    const auto m = j.at("order").get<std::size_t>();
    Tensor<typename F::Scalar> t(dim, m, field.zero());
    t.coefficients() = detail::sparse(field, j.at("entries"), dim, m, "tensor");
    return t;
}

template <class K>
Json hopf_to_json(const HopfAlgebra<K>& h, const NamedTensors<K>& tensors = {}) {
    const std::size_t n = h.dim();
    auto triples = [&](const auto& get) {
        Json list = Json::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const K& c = get(i, j, k);
                    if (!c.is_zero()) list.push_back(Json::array({i, j, k, scalar_to_string(c)}));
                }
        return list;
    };
    Json doc;
    doc["field"] = field_to_json(h.field().spec());
    doc["dim"] = n;
    doc["basis"] = h.basis_names();
    doc["mul"] = triples([&](std::size_t i, std::size_t j, std::size_t k) -> const K& { return h.mul(i, j, k); });
    doc["comul"] = triples([&](std::size_t i, std::size_t j, std::size_t k) -> const K& { return h.comul(i, j, k); });
    Json unit = Json::array(), counit = Json::array(), s = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        unit.push_back(scalar_to_string(h.unit()[i]));
        counit.push_back(scalar_to_string(h.counit()[i]));
    }
    // S(e_j) = Σ_i S[i,j] e_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!h.antipode()(i, j).is_zero()) s.push_back(Json::array({i, j, scalar_to_string(h.antipode()(i, j))}));
    doc["unit"] = std::move(unit);
    doc["counit"] = std::move(counit);
    doc["antipode"] = std::move(s);
    if (!tensors.empty()) {
        Json named = Json::object();
        for (const auto& [name, t] : tensors) named[name] = tensor_to_json(t);
        doc["tensor_elements"] = std::move(named);
    }
    return doc;
}

template <class F>
struct HopfDocument {
    HopfAlgebra<typename F::Scalar> H;
    NamedTensors<typename F::Scalar> tensors;
};

template <class F>
HopfDocument<F> hopf_from_json(const F& field, const Json& doc) {
    using K = typename F::Scalar;
    if (!doc.is_object()) detail::bad_document("document must be an object");
    for (const char* key : {"field", "dim", "basis", "mul", "comul", "unit", "counit", "antipode"})
        if (!doc.contains(key)) detail::bad_document(std::string("missing key \"") + key + "\"");
    if (!(field_from_json(doc.at("field")) == field.spec())) detail::bad_document("field does not match");
    if (!doc.at("dim").is_number_unsigned()) detail::bad_document("dim must be a non-negative integer");
    const auto n = doc.at("dim").get<std::size_t>();
    if (n == 0) detail::bad_document("dim must be positive");
    std::vector<std::string> basis;
    try {
        basis = doc.at("basis").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
        detail::bad_document("basis must be a list of strings");
    }
    if (basis.size() != n) detail::bad_document("basis must have dim names");
    auto mul = detail::sparse(field, doc.at("mul"), n, 3, "mul");
    auto comul = detail::sparse(field, doc.at("comul"), n, 3, "comul");
    auto unit = detail::dense(field, doc.at("unit"), n, "unit");
    auto counit = detail::dense(field, doc.at("counit"), n, "counit");
    const auto s_entries = detail::sparse(field, doc.at("antipode"), n, 2, "antipode");
    Matrix<K> s(n, n, field.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = s_entries[i * n + j];
    HopfDocument<F> out{HopfAlgebra<K>(field, std::move(basis), std::move(mul), std::move(unit), std::move(comul), std::move(counit), s), {}};
    if (doc.contains("tensor_elements")) {
        const auto& named = doc.at("tensor_elements");
        if (!named.is_object()) detail::bad_document("tensor_elements must be an object");
        for (const auto& [name, t] : named.items()) out.tensors.emplace(name, tensor_from_json(field, t, n));
    }
    return out;
}

}  // namespace hopf
