#include "hopf/group_algebra.hpp"

namespace hopf {

std::vector<std::vector<long long>> standard_omega(std::size_t coords, long long scale) {
    if (coords % 2) throw Error(ErrorKind::HypothesisViolation, "symplectic forms need an even number of coordinates");
    std::vector<std::vector<long long>> m(coords, std::vector<long long>(coords, 0));
    for (std::size_t a = 0; a < coords; a += 2) {
        m[a][a + 1] = scale;
        m[a + 1][a] = -scale;
    }
    return m;
}

void validate_omega(const AbelianBasis& basis, const std::vector<std::vector<long long>>& omega) {
    const std::size_t r = basis.orders.size();
    const long long e = static_cast<long long>(basis.exponent);
    if (omega.size() != r) throw Error(ErrorKind::HypothesisViolation, "omega must be " + std::to_string(r) + "x" + std::to_string(r));
    for (const auto& row : omega)
        if (row.size() != r) throw Error(ErrorKind::HypothesisViolation, "omega must be square");
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            const long long w = detail::mod(omega[a][b], e);
            if (detail::mod(w * static_cast<long long>(basis.orders[a]), e) != 0 ||
                detail::mod(w * static_cast<long long>(basis.orders[b]), e) != 0)
                throw Error(ErrorKind::HypothesisViolation, "omega is not well defined on the character group");
            if (a == b && w != 0) throw Error(ErrorKind::DegeneracyDetected, "omega is not alternating (diagonal)");
            if (detail::mod(omega[a][b] + omega[b][a], e) != 0) throw Error(ErrorKind::DegeneracyDetected, "omega is not alternating");
        }
    for (std::size_t i = 0; i < basis.coordinates.size(); ++i) {
        const auto& x = basis.coordinates[i];
        bool zero = true;
        for (auto c : x) zero = zero && c == 0;
        if (zero) continue;
        bool pairs = false;
        for (std::size_t b = 0; b < r && !pairs; ++b) {
            long long s = 0;
            for (std::size_t a = 0; a < r; ++a) s += static_cast<long long>(x[a]) * detail::mod(omega[a][b], e);
            pairs = detail::mod(s, e) != 0;
        }
        if (!pairs) throw Error(ErrorKind::DegeneracyDetected, "omega is degenerate");
    }
}

}  // namespace hopf
