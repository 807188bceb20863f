#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace ramfilt {

/// Finite group given by its Cayley table; element 0 is the identity.
class FiniteGroup {
public:
    /// Subgroup enumeration and associativity checks cover orders up to this.
    static constexpr std::size_t kMaxOrder = 64;

    /// table[a][b] = a * b. Validates identity, Latin square, and (for
    /// order <= kMaxOrder) associativity.
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

    std::size_t order() const noexcept { return table_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t power(std::size_t a, std::uint64_t k) const;
    std::size_t element_order(std::size_t a) const;
    bool is_commutative() const;

    const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

    friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

private:
    std::vector<std::vector<std::size_t>> table_;
};

/// A subgroup as its sorted list of element indices.
using Subgroup = std::vector<std::size_t>;

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Symmetries of the regular n-gon, order 2n.
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup quaternion_group();
/// Upper unitriangular 3x3 matrices over F_p, order p^3.
FiniteGroup heisenberg_group(std::uint64_t p);

/// Named groups: "trivial", "klein4", "q8", "d<n>" (order 2n), "heis<p>",
/// "c<n>", and products of these joined with 'x' (e.g. "c4xc2").
FiniteGroup builtin_group(const std::string& name);

/// Plain text: the order n, then n rows of n space-separated indices.
FiniteGroup parse_cayley_table(std::istream& in);
std::string format_cayley_table(const FiniteGroup& group);

/// If order = p^k for a prime p, that p; 0 for the trivial group or a non-p-group.
std::uint64_t prime_of_p_group(const FiniteGroup& group);

/// Every subgroup once, sorted by size then lexicographically.
std::vector<Subgroup> all_subgroups(const FiniteGroup& group);

/// Subgroups of order |G|/p. Throws if p does not divide a nontrivial order.
std::vector<Subgroup> index_p_subgroups(const FiniteGroup& group, std::uint64_t p);

/// Whether each subgroup equals the intersection of the index-p subgroups
/// containing it (the empty intersection being G). Throws unless G is a p-group.
bool has_intersection_property(const FiniteGroup& group, std::uint64_t p);

/// Commutative with every non-identity element of order p.
bool is_elementary_abelian(const FiniteGroup& group, std::uint64_t p);

}  // namespace ramfilt
