#pragma once

// Census of twists of k[G] up to gauge equivalence and inner automorphisms:
// pairs (K, class) with K an abelian p′-subgroup of central type.

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/groups.hpp"

namespace hopf {

/// A non-degenerate alternating form on the characters of K, in the coordinates of abelian_basis(G, K).
struct AlternatingForm {
    Subgroup K;
    std::vector<std::vector<long long>> omega;
};

struct CensusEntry {
    AlternatingForm form;     // class representative
    std::size_t orbit_size = 1;  // number of (K', ω') pairs conjugate to it
    bool certified = false;      // symplectic_twist built and non-degenerate on k[K]
    std::string certified_over;  // "GF(q)" or "Q(zeta_n)"
};

struct TwistCensus {
    std::uint64_t characteristic = 0;
    std::vector<CensusEntry> classes;
    /// Non-abelian p′-subgroups of square order, one per conjugacy class; not classified.
    std::vector<Subgroup> unclassified;
};

/// Every non-degenerate alternating form on the characters of abelian K.
std::vector<std::vector<std::vector<long long>>> nondegenerate_forms(const AbelianBasis& basis);

/// Pairs (K, ω) for abelian p′-subgroups K of square order, grouped into orbits under
/// conjugation by G.
TwistCensus classify_twists(const FiniteGroup& g, std::uint64_t characteristic, bool certify = true);

}  // namespace hopf
