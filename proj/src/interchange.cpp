#include "hopf/interchange.hpp"

namespace hopf {

Json field_to_json(const FieldSpec& spec) {
    if (spec.kind == FieldSpec::Kind::PrimeField) return Json{{"type", "Fp"}, {"p", spec.p}};
    return Json{{"type", "cyclotomic"}, {"n", spec.n}};
}

FieldSpec field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) throw Error(ErrorKind::ParseError, "field needs a type");
    const auto type = j.at("type").get<std::string>();
    auto number = [&](const char* key) {
        if (!j.contains(key) || !j.at(key).is_number_unsigned()) throw Error(ErrorKind::ParseError, std::string("field needs ") + key);
        return j.at(key).get<std::uint32_t>();
    };
    if (type == "Fp") {
        const auto p = number("p");
        if (!is_prime(p)) throw Error(ErrorKind::ParseError, "Fp needs a prime p");
        return {FieldSpec::Kind::PrimeField, p, 1};
    }
    if (type == "cyclotomic") {
        const auto n = number("n");
        if (n == 0) throw Error(ErrorKind::ParseError, "cyclotomic conductor must be positive");
        return {FieldSpec::Kind::CyclotomicRational, 0, n};
    }
    throw Error(ErrorKind::ParseError, "unknown field type \"" + type + "\"");
}

std::string scalar_to_string(const Fp& x) { return x.to_string(); }

std::string scalar_to_string(const Cyclotomic& x) {
    if (x.is_rational()) return rational_to_string(x.coefficients().empty() ? mpq_class(0) : x.coefficients()[0]);
    return x.to_string();
}

Fp scalar_from_string(const PrimeField& f, const std::string& s) {
    const auto q = parse_rational(s);
    const mpz_class p(f.p());
    const mpz_class num = ((q.get_num() % p) + p) % p, den = q.get_den() % p;
    if (den == 0) throw Error(ErrorKind::ParseError, "denominator of '" + s + "' vanishes mod p");
    return f.from_rational(num.get_si(), den.get_si());
}

Cyclotomic scalar_from_string(const CyclotomicField& f, const std::string& s) {
    if (s.empty() || s.front() != '[') return f.from_rational(parse_rational(s));
    if (s.back() != ']') throw Error(ErrorKind::ParseError, "unterminated coefficient list '" + s + "'");
    std::vector<mpq_class> coeffs;
    std::size_t start = 1;
    while (start < s.size() - 1) {
        auto end = s.find(',', start);
        if (end == std::string::npos) end = s.size() - 1;
        coeffs.push_back(parse_rational(s.substr(start, end - start)));
        start = end + 1;
    }
    if (coeffs.size() > f.degree()) throw Error(ErrorKind::ParseError, "too many coefficients in '" + s + "'");
    return f.from_coefficients(std::move(coeffs));
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hopf
