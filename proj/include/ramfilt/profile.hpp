#pragma once

#include "ramfilt/arith.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ramfilt {

/// One upper ramification break t together with the codimension f of
/// G^{t+} in G^t.
struct UpperBreak {
    std::int64_t t = 0;
    std::int64_t f = 0;

    friend bool operator==(const UpperBreak&, const UpperBreak&) = default;
};

/// Upper breaks t_1 < ... < t_n of a totally ramified elementary abelian
/// p-extension with their codimensions f_i. The empty profile stands for
/// the trivial extension.
class RamificationProfile {
public:
    /// Validates and stores. Throws ValidationError listing every violation.
    RamificationProfile(std::int64_t p, std::vector<UpperBreak> breaks);

    static RamificationProfile trivial(std::int64_t p) { return RamificationProfile(p, {}); }

    std::int64_t p() const noexcept { return p_; }
    std::span<const UpperBreak> breaks() const noexcept { return breaks_; }
    std::size_t size() const noexcept { return breaks_.size(); }
    bool empty() const noexcept { return breaks_.empty(); }

    /// m = f_1 + ... + f_n, the F_p-dimension of the Galois group.
    std::int64_t dimension() const noexcept;

    /// s_i = f_1 + ... + f_i; codim_prefix(0) = 0.
    std::int64_t codim_prefix(std::size_t i) const;

    friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;

private:
    std::int64_t p_;
    std::vector<UpperBreak> breaks_;
};

}  // namespace ramfilt
