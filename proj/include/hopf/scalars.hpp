#pragma once

// Exact scalar types. Two field families are supported:
//   * GF(p) for a prime p < 2^31 (type Fp, field PrimeField)
//   * Q(zeta_n), the n-th cyclotomic field (type Cyclotomic, field CyclotomicField);
//     n = 1 gives the rationals.
// All algebra code in the library is templated on the scalar type K and reaches
// the field through K::Field / a.field().

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hopf/error.hpp"

namespace hopf {

struct FieldSpec {
    enum class Kind { PrimeField, CyclotomicRational };
    Kind kind = Kind::PrimeField;
    std::uint32_t p = 0;  // characteristic; 0 for cyclotomic
    std::uint32_t n = 1;  // conductor of Q(zeta_n) for cyclotomic

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

std::string describe(const FieldSpec& spec);

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// GF(p)

class PrimeField;

class Fp {
public:
    using Field = PrimeField;

    Fp() = default;
    Fp(std::uint32_t value, std::uint32_t p) : v_(value % p), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    PrimeField field() const;

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }
    Fp& operator+=(const Fp& o) {
        check(o);
        std::uint32_t s = v_ + o.v_;
        v_ = s >= p_ ? s - p_ : s;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    std::string to_string() const { return std::to_string(v_); }

private:
    struct raw_tag {};
    Fp(std::uint32_t value, std::uint32_t p, raw_tag) : v_(value), p_(p) {}
    void check(const Fp& o) const {
        if (p_ != o.p_ || p_ == 0) throw Error(ErrorKind::FieldMismatch, "GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

class PrimeField {
public:
    using Scalar = Fp;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::uint32_t characteristic() const { return p_; }
    FieldSpec spec() const { return {FieldSpec::Kind::PrimeField, p_, 1}; }

    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp from_int(long long v) const;
    Fp from_rational(long long num, long long den) const { return from_int(num) / from_int(den); }

    /// Smallest residue of multiplicative order exactly n.
    Fp primitive_root_of_unity(std::uint64_t n) const;

    /// Distinct roots of the polynomial (coefficients low degree first), by exhaustive scan.
    std::vector<Fp> roots(const std::vector<Fp>& poly) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

inline PrimeField Fp::field() const { return PrimeField(p_); }

// ---------------------------------------------------------------------------
// Q(zeta_n)

struct CyclotomicContext {
    std::uint32_t n;
    std::uint32_t degree;                 // phi(n)
    std::vector<mpz_class> cyclotomic;    // Phi_n, low degree first, monic
};

class CyclotomicField;

class Cyclotomic {
public:
    using Field = CyclotomicField;

    Cyclotomic() = default;
    Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, std::vector<mpq_class> coeffs);

    const std::vector<mpq_class>& coefficients() const { return c_; }
    std::uint32_t conductor() const { return ctx_ ? ctx_->n : 0; }
    CyclotomicField field() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Cyclotomic inverse() const;
    Cyclotomic pow(std::uint64_t e) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Coefficient strings "num/den" (den omitted when 1), one per power of zeta.
    std::vector<std::string> coefficient_strings() const;
    std::string to_string() const;

private:
    void check(const Cyclotomic& o) const;

    std::shared_ptr<const CyclotomicContext> ctx_;
    std::vector<mpq_class> c_;
};

class CyclotomicField {
public:
    using Scalar = Cyclotomic;

    explicit CyclotomicField(std::uint32_t n);
    explicit CyclotomicField(std::shared_ptr<const CyclotomicContext> ctx) : ctx_(std::move(ctx)) {}

    std::uint32_t conductor() const { return ctx_->n; }
    std::uint32_t degree() const { return ctx_->degree; }
    std::uint32_t characteristic() const { return 0; }
    FieldSpec spec() const { return {FieldSpec::Kind::CyclotomicRational, 0, ctx_->n}; }
    const std::shared_ptr<const CyclotomicContext>& context() const { return ctx_; }

    Cyclotomic zero() const;
    Cyclotomic one() const;
    Cyclotomic from_int(long long v) const;
    Cyclotomic from_rational(const mpq_class& q) const;
    Cyclotomic from_rational(long long num, long long den) const {
        return from_rational(mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))));
    }
    Cyclotomic from_coefficients(std::vector<mpq_class> coeffs) const;
    /// zeta_n^k
    Cyclotomic zeta_power(std::int64_t k) const;

    /// The canonical generator zeta_n^{n/order} (or -zeta_n^{...} for the odd-conductor doubling).
    Cyclotomic primitive_root_of_unity(std::uint64_t order) const;

    /// Distinct rational roots of the polynomial; non-rational roots are not found.
    std::vector<Cyclotomic> roots(const std::vector<Cyclotomic>& poly) const;

    friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) { return a.conductor() == b.conductor(); }

private:
    std::shared_ptr<const CyclotomicContext> ctx_;
};

inline CyclotomicField Cyclotomic::field() const { return CyclotomicField(ctx_); }

/// Parses "a", "-a", "a/b" into a canonical rational; throws ParseError.
mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& q);

// ---------------------------------------------------------------------------
// Helpers shared by the templated code.

template <class K>
using FieldOf = typename K::Field;

template <class K>
K pow(const K& a, std::uint64_t e) {
    return a.pow(e);
}

/// Total order on canonical forms; used only to make outputs deterministic.
bool canonical_less(const Fp& a, const Fp& b);
bool canonical_less(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace hopf
