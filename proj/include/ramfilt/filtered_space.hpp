#pragma once

#include "ramfilt/fp_linalg.hpp"
#include "ramfilt/profile.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace ramfilt {

/// G = F_p^m with its upper-numbering flag
///   G = G^{t_1} > G^{t_2} > ... > G^{t_n} > {0},
/// each step G^{t_i} given by an explicit spanning set. G^{t_i+} is G^{t_{i+1}}
/// (and {0} for the last break).
class FilteredSpace {
public:
    struct Step {
        std::int64_t t = 0;
        std::vector<FpVector> span;
    };

    /// Checks that G^{t_1} is the whole space, the flag is strictly
    /// decreasing, and breaks strictly increase.
    FilteredSpace(std::int64_t p, std::size_t m, std::vector<Step> steps);

    /// G^{t_i} spanned by the last m - s_{i-1} standard basis vectors.
    static FilteredSpace canonical(const RamificationProfile& profile);

    std::int64_t p() const noexcept { return field_.p(); }
    std::size_t dimension() const noexcept { return m_; }
    const PrimeField& field() const noexcept { return field_; }
    std::span<const Step> steps() const noexcept { return steps_; }

    /// The same flag after the change of basis v -> v * matrix (matrix invertible).
    FilteredSpace transformed(std::span<const FpVector> matrix) const;

    /// Reads off (t_i, f_i) with f_i = dim G^{t_i} - dim G^{t_i+}.
    RamificationProfile profile() const;

private:
    PrimeField field_;
    std::size_t m_;
    std::vector<Step> steps_;
};

/// Upper breaks of G/H: the t_i with G^{t_i} + H != G^{t_i+} + H.
std::set<std::int64_t> quotient_breaks(const FilteredSpace& space, std::span<const FpVector> subspace);

using BreakCensus = std::map<std::int64_t, std::uint64_t>;

inline constexpr std::uint64_t kDefaultHyperplaneBudget = 1'000'000;

/// For every index-p subspace H of G, the unique break of G/H, tallied.
/// Parallel over hyperplanes with OpenMP; deterministic result.
BreakCensus degree_p_break_census(const FilteredSpace& space,
                                  std::uint64_t budget = kDefaultHyperplaneBudget);

/// Single-threaded reference kernel for degree_p_break_census.
BreakCensus degree_p_break_census_serial(const FilteredSpace& space,
                                         std::uint64_t budget = kDefaultHyperplaneBudget);

/// Break t(H) of the hyperplane with the given normal vector.
std::int64_t hyperplane_break(const FilteredSpace& space, const FpVector& normal);

}  // namespace ramfilt
