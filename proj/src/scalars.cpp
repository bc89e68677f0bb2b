#include "hopf/scalars.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace hopf {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NoSuchRoot: return "NoSuchRoot";
        case ErrorKind::FailedToSplit: return "FailedToSplit";
        case ErrorKind::ShapeError: return "ShapeError";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::ZeroCounitScalar: return "ZeroCounitScalar";
        case ErrorKind::CounitNotOne: return "CounitNotOne";
        case ErrorKind::InvalidTwist: return "InvalidTwist";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::AxiomFailure: return "AxiomFailure";
        case ErrorKind::NotUnimodular: return "NotUnimodular";
        case ErrorKind::DegenerateIntegralSpace: return "DegenerateIntegralSpace";
        case ErrorKind::CoassociativityFailure: return "CoassociativityFailure";
        case ErrorKind::HypothesisViolation: return "HypothesisViolation";
        case ErrorKind::PairingConditionFailure: return "PairingConditionFailure";
        case ErrorKind::FieldTooSmall: return "FieldTooSmall";
        case ErrorKind::TraceCriterionInapplicable: return "TraceCriterionInapplicable";
        case ErrorKind::GaloisFailure: return "GaloisFailure";
        case ErrorKind::NotGroupAlgebra: return "NotGroupAlgebra";
        case ErrorKind::DegenerateTwist: return "DegenerateTwist";
        case ErrorKind::SchurFailure: return "SchurFailure";
        case ErrorKind::NotScalar: return "NotScalar";
        case ErrorKind::CocycleFailure: return "CocycleFailure";
        case ErrorKind::InvalidCayleyTable: return "InvalidCayleyTable";
        case ErrorKind::DegeneracyDetected: return "DegeneracyDetected";
        case ErrorKind::NotASubalgebra: return "NotASubalgebra";
        case ErrorKind::CharTwo: return "CharTwo";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string describe(const FieldSpec& spec) {
    if (spec.kind == FieldSpec::Kind::PrimeField) return "GF(" + std::to_string(spec.p) + ")";
    if (spec.n == 1) return "Q";
    return "Q(zeta_" + std::to_string(spec.n) + ")";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// GF(p)

Fp Fp::inverse() const {
    if (v_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p_) + ")");
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
        std::int64_t q = a / m;
        std::int64_t t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    std::int64_t r = x0 % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fp(static_cast<std::uint32_t>(r), p_, raw_tag{});
}

Fp Fp::pow(std::uint64_t e) const {
    Fp base = *this, acc(1 % p_, p_, raw_tag{});
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) throw Error(ErrorKind::FieldMismatch, std::to_string(p) + " is not a supported prime");
}

Fp PrimeField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Fp(static_cast<std::uint32_t>(r), p_);
}

Fp PrimeField::primitive_root_of_unity(std::uint64_t n) const {
    if (n == 0 || (p_ - 1) % n != 0)
        throw Error(ErrorKind::NoSuchRoot, "no primitive " + std::to_string(n) + "-th root of unity in GF(" + std::to_string(p_) + ")");
    std::vector<std::uint64_t> proper;
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0) proper.push_back(d);
    for (std::uint32_t r = 1; r < p_; ++r) {
        Fp z(r, p_);
        if (!z.pow(n).is_one()) continue;
        if (std::none_of(proper.begin(), proper.end(), [&](std::uint64_t d) { return z.pow(d).is_one(); })) return z;
    }
    throw Error(ErrorKind::NoSuchRoot, "scan failed");
}

std::vector<Fp> PrimeField::roots(const std::vector<Fp>& poly) const {
    std::vector<Fp> out;
    for (std::uint32_t r = 0; r < p_; ++r) {
        Fp x(r, p_), acc = zero();
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
        if (acc.is_zero()) out.push_back(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Q(zeta_n)

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {0};
    IntPoly q(num.size() - dd, 0);
    for (std::size_t k = num.size() - 1;; --k) {
        mpz_class c = num[k];
        const std::size_t shift = k - dd;
        q[shift] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= dd; ++j) num[shift + j] -= c * den[j];
        if (k == dd) break;
    }
    return q;
}

IntPoly cyclotomic_polynomial(std::uint32_t n) {
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
    trim(p);
    return p;
}

std::shared_ptr<const CyclotomicContext> context_for(std::uint32_t n) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::shared_ptr<const CyclotomicContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto phi = cyclotomic_polynomial(n);
    auto ctx = std::make_shared<CyclotomicContext>(CyclotomicContext{n, static_cast<std::uint32_t>(phi.size() - 1), phi});
    cache.emplace(n, ctx);
    return ctx;
}

mpz_class lcm_of_denominators(const std::vector<mpq_class>& v) {
    mpz_class l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

// Positive divisors of |n| by trial division; empty when n is too large to factor here.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    if (n > mpz_class("1000000000000")) return std::nullopt;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, std::vector<mpq_class> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    // Reduce modulo the monic cyclotomic polynomial.
    const auto& phi = ctx_->cyclotomic;
    const std::size_t d = ctx_->degree;
    for (std::size_t k = c_.size(); k-- > d;) {
        if (c_[k] == 0) continue;
        mpq_class lead = c_[k];
        for (std::size_t j = 0; j <= d; ++j) c_[k - d + j] -= lead * mpq_class(phi[j]);
    }
    c_.resize(d, mpq_class(0));
    for (auto& q : c_) q.canonicalize();
}

void Cyclotomic::check(const Cyclotomic& o) const {
    if (!ctx_ || !o.ctx_ || ctx_->n != o.ctx_->n)
        throw Error(ErrorKind::FieldMismatch, "cyclotomic conductor mismatch");
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool Cyclotomic::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
    return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(), [](const mpq_class& q) { return q == 0; });
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check(o);
    const std::size_t d = c_.size();
    if (d == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    *this = Cyclotomic(ctx_, std::move(prod));
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in " + describe(field().spec()));
    const std::size_t d = c_.size();
    // Column j of M is this * zeta^j; solve M x = e_0 by Gauss-Jordan over Q.
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<mpq_class> shifted(d + j, mpq_class(0));
        for (std::size_t i = 0; i < d; ++i) shifted[i + j] = c_[i];
        Cyclotomic col(ctx_, std::move(shifted));
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
    }
    m[0][d] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && m[piv][col] == 0) ++piv;
        if (piv == d) throw Error(ErrorKind::InternalInconsistency, "singular multiplication matrix in cyclotomic inverse");
        std::swap(m[piv], m[col]);
        mpq_class inv = 1 / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (std::size_t k = col; k <= d; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<mpq_class> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d];
    return Cyclotomic(ctx_, std::move(x));
}

Cyclotomic Cyclotomic::pow(std::uint64_t e) const {
    Cyclotomic base = *this, acc = field().one();
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::vector<std::string> Cyclotomic::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& q : c_) out.push_back(rational_to_string(q));
    return out;
}

std::string Cyclotomic::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + rational_to_string(c_[i]);
    return s + "]";
}

CyclotomicField::CyclotomicField(std::uint32_t n) {
    if (n == 0) throw Error(ErrorKind::FieldMismatch, "cyclotomic conductor must be >= 1");
    ctx_ = context_for(n);
}

Cyclotomic CyclotomicField::zero() const { return Cyclotomic(ctx_, {}); }
Cyclotomic CyclotomicField::one() const { return from_int(1); }
Cyclotomic CyclotomicField::from_int(long long v) const { return Cyclotomic(ctx_, {mpq_class(static_cast<long>(v))}); }
Cyclotomic CyclotomicField::from_rational(const mpq_class& q) const { return Cyclotomic(ctx_, {q}); }
Cyclotomic CyclotomicField::from_coefficients(std::vector<mpq_class> coeffs) const { return Cyclotomic(ctx_, std::move(coeffs)); }

Cyclotomic CyclotomicField::zeta_power(std::int64_t k) const {
    const std::int64_t n = ctx_->n;
    std::int64_t e = ((k % n) + n) % n;
    std::vector<mpq_class> v(static_cast<std::size_t>(e) + 1, mpq_class(0));
    v[static_cast<std::size_t>(e)] = 1;
    return Cyclotomic(ctx_, std::move(v));
}

Cyclotomic CyclotomicField::primitive_root_of_unity(std::uint64_t order) const {
    const std::uint64_t m = ctx_->n;
    if (order == 0) throw Error(ErrorKind::NoSuchRoot, "order 0");
    if (m % order == 0) return zeta_power(static_cast<std::int64_t>(m / order));
    // -zeta_m has order 2m when m is odd.
    if (m % 2 == 1 && order % 2 == 0 && m % (order / 2) == 0)
        return -zeta_power(static_cast<std::int64_t>(m / (order / 2)));
    throw Error(ErrorKind::NoSuchRoot, "no primitive " + std::to_string(order) + "-th root of unity in " + describe(spec()));
}

std::vector<Cyclotomic> CyclotomicField::roots(const std::vector<Cyclotomic>& poly) const {
    // A rational root r of sum_j p_j(x) zeta^j must be a root of every coordinate polynomial p_j.
    const std::size_t d = ctx_->degree;
    std::vector<mpq_class> coord;
    for (std::size_t j = 0; j < d && coord.empty(); ++j) {
        std::vector<mpq_class> cand;
        bool nonzero = false;
        for (const auto& a : poly) {
            cand.push_back(a.coefficients()[j]);
            if (a.coefficients()[j] != 0) nonzero = true;
        }
        if (nonzero) coord = std::move(cand);
    }
    std::vector<Cyclotomic> out;
    if (coord.empty()) return out;  // zero polynomial: no meaningful root set
    while (!coord.empty() && coord.back() == 0) coord.pop_back();

    auto evaluate = [&](const Cyclotomic& x) {
        Cyclotomic acc = zero();
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
        return acc;
    };

    std::size_t low = 0;
    while (low < coord.size() && coord[low] == 0) ++low;
    if (low > 0 && evaluate(zero()).is_zero()) out.push_back(zero());
    if (low + 1 >= coord.size()) return out;

    mpz_class l = lcm_of_denominators(coord);
    mpq_class c0 = coord[low] * l, cn = coord.back() * l;
    auto num_divs = divisors(c0.get_num());
    auto den_divs = divisors(cn.get_num());
    if (!num_divs || !den_divs) return out;
    std::vector<mpq_class> seen;
    for (const auto& a : *num_divs) {
        for (const auto& b : *den_divs) {
            for (int sign : {1, -1}) {
                mpq_class r(a * sign, b);
                r.canonicalize();
                if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
                seen.push_back(r);
                Cyclotomic x = from_rational(r);
                if (evaluate(x).is_zero()) out.push_back(x);
            }
        }
    }
    return out;
}

mpq_class parse_rational(const std::string& text) {
    try {
        if (text.empty()) throw std::invalid_argument("empty");
        mpq_class q(text, 10);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "bad rational literal '" + text + "'");
    }
}

std::string rational_to_string(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool canonical_less(const Fp& a, const Fp& b) { return a.value() < b.value(); }

bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
    return x.size() < y.size();
}

}  // namespace hopf
