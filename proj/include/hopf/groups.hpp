#pragma once

// Finite groups given by Cayley tables.

#include <cstddef>
#include <string>
#include <vector>

namespace hopf {

/// Sorted list of element indices.
using Subgroup = std::vector<std::size_t>;

class FiniteGroup {
public:
    /// table[a][b] = index of a·b. Validated: closure, associativity, identity, inverses.
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {});

    static FiniteGroup cyclic(std::size_t n);
    /// ℤ_{n_1} × … × ℤ_{n_r}, elements ordered lexicographically (last coordinate fastest).
    static FiniteGroup abelian(const std::vector<std::size_t>& orders);
    /// Dihedral group of order 2n: r^a s^b at index a + n·b.
    static FiniteGroup dihedral(std::size_t n);
    static FiniteGroup symmetric(std::size_t n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    std::size_t order() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    std::size_t pow(std::size_t a, long long k) const;
    std::size_t element_order(std::size_t a) const { return orders_[a]; }
    /// g a g⁻¹
    std::size_t conj(std::size_t g, std::size_t a) const { return mul(mul(g, a), inv(g)); }
    const std::string& label(std::size_t a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    bool is_abelian() const;
    bool is_central(std::size_t a) const;
    std::size_t exponent() const;

    /// Smallest subgroup containing the generators.
    Subgroup closure(const std::vector<std::size_t>& generators) const;
    /// All subgroups, sorted by (order, elements).
    std::vector<Subgroup> subgroups() const;
    bool is_abelian(const Subgroup& k) const;
    Subgroup conjugate(std::size_t g, const Subgroup& k) const;
    Subgroup intersection(const Subgroup& a, const Subgroup& b) const;
    /// Double cosets K_L g K_J, each sorted, ordered by smallest element.
    std::vector<Subgroup> double_cosets(const Subgroup& kl, const Subgroup& kj) const;

    /// Relabels elements: new index of old element a is perm[a].
    FiniteGroup permuted(const std::vector<std::size_t>& perm) const;

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::string> labels_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> orders_;
};

/// A decomposition of an abelian subgroup as an internal direct sum of cyclic groups.
struct AbelianBasis {
    std::vector<std::size_t> generators;
    std::vector<std::size_t> orders;
    std::size_t exponent = 1;

    /// Coordinates k with element = ∏ g_a^{k_a}, for every element of the subgroup.
    std::vector<std::vector<std::size_t>> coordinates;  // parallel to `elements`
    std::vector<std::size_t> elements;
};

/// Throws HypothesisViolation when k is not abelian.
AbelianBasis abelian_basis(const FiniteGroup& g, const Subgroup& k);

/// Sorted orders of the cyclic p-power summands (the elementary divisors).
std::vector<std::size_t> primary_invariants(const FiniteGroup& g, const Subgroup& k);

/// K ≅ A×A for some abelian A (each elementary divisor occurs an even number of times).
bool is_square_abelian(const FiniteGroup& g, const Subgroup& k);

/// Parses a Cayley table from JSON ({"table": [[...]], "labels": [...]}, or a bare array) or CSV of 0-based ints.
FiniteGroup parse_cayley_table(const std::string& text);
std::string cayley_table_json(const FiniteGroup& g);

}  // namespace hopf
