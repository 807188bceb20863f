#pragma once

#include "ramfilt/profile.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ramfilt {

/// Numerical invariants of the base local field K with residue characteristic p.
class FieldProfile {
public:
    /// Characteristic-0 field with absolute ramification index e over Q_p.
    /// Requires (p - 1) | e when zeta_p is in K, and zeta_p in K when p = 2.
    static FieldProfile mixed(std::int64_t p, std::int64_t e, bool zeta_p_in_K);

    /// Characteristic-p field (F_p((T)) and friends).
    static FieldProfile equal(std::int64_t p);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t characteristic() const noexcept { return equal_char_ ? p_ : 0; }
    bool is_equal_characteristic() const noexcept { return equal_char_; }

    /// Absent in characteristic p.
    std::optional<std::int64_t> e() const noexcept { return e_; }
    bool zeta_p_in_K() const noexcept { return zeta_; }

    /// e / (p - 1), the ramification index of K over Q_p(zeta); only with zeta in K.
    std::optional<std::int64_t> e1() const noexcept;

    friend bool operator==(const FieldProfile&, const FieldProfile&) = default;

private:
    FieldProfile(std::int64_t p, bool equal_char, std::optional<std::int64_t> e, bool zeta)
        : p_(p), equal_char_(equal_char), e_(e), zeta_(zeta) {}

    std::int64_t p_;
    bool equal_char_;
    std::optional<std::int64_t> e_;
    bool zeta_;
};

/// i-th positive integer prime to p: i + floor((i - 1)/(p - 1)).
std::int64_t b_value(std::int64_t p, std::int64_t i);

/// Break values t possible for a ramified cyclic degree-p extension of K.
/// In characteristic p the set is infinite and a bound is required; when a
/// bound is given it caps the result in either characteristic.
std::set<std::int64_t> admissible_set(const FieldProfile& field, std::optional<std::int64_t> bound = std::nullopt);

bool is_admissible(std::int64_t t, const FieldProfile& field);

/// One message per break of the profile that no degree-p extension of K can
/// have. Throws ValidationError on a prime mismatch.
std::vector<std::string> validate_profile(const RamificationProfile& profile, const FieldProfile& field);

}  // namespace ramfilt
