#include "ramfilt/admissible.hpp"

#include "ramfilt/arith.hpp"

namespace ramfilt {

FieldProfile FieldProfile::mixed(std::int64_t p, std::int64_t e, bool zeta_p_in_K) {
    std::vector<std::string> problems;
    if (!is_prime(p)) problems.push_back("p = " + std::to_string(p) + " is not prime");
    if (e < 1) problems.push_back("e = " + std::to_string(e) + " must be >= 1");
    if (is_prime(p) && p == 2 && !zeta_p_in_K) {
        problems.push_back("p = 2: -1 lies in every field, so zeta_p_in_K must be true");
    }
    if (is_prime(p) && zeta_p_in_K && e >= 1 && e % (p - 1) != 0) {
        problems.push_back("zeta_p in K forces (p - 1) | e, but e = " + std::to_string(e));
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
    return FieldProfile(p, false, e, zeta_p_in_K);
}

FieldProfile FieldProfile::equal(std::int64_t p) {
    require_prime(p, "FieldProfile");
    return FieldProfile(p, true, std::nullopt, false);
}

std::optional<std::int64_t> FieldProfile::e1() const noexcept {
    if (equal_char_ || !zeta_) return std::nullopt;
    return *e_ / (p_ - 1);
}

std::int64_t b_value(std::int64_t p, std::int64_t i) {
    require_prime(p, "b_value");
    if (i < 1) throw ValidationError("b_value index i = " + std::to_string(i) + " must be >= 1");
    return i + (i - 1) / (p - 1);
}

std::set<std::int64_t> admissible_set(const FieldProfile& field, std::optional<std::int64_t> bound) {
    if (bound && *bound < 1) throw ValidationError("bound must be >= 1");
    std::set<std::int64_t> out;
    const std::int64_t p = field.p();
    if (field.is_equal_characteristic()) {
        if (!bound) throw ValidationError("characteristic p admits infinitely many breaks; a bound is required");
        for (std::int64_t i = 1;; ++i) {
            const auto b = b_value(p, i);
            if (b > *bound) break;
            out.insert(b);
        }
        return out;
    }
    const std::int64_t e = *field.e();
    for (std::int64_t i = 1; i <= e; ++i) {
        const auto b = b_value(p, i);
        if (bound && b > *bound) break;
        out.insert(b);
    }
    if (field.zeta_p_in_K()) {
        const auto extra = p * *field.e1();  // = b_value(p, e) + 1
        if (!bound || extra <= *bound) out.insert(extra);
    }
    return out;
}

bool is_admissible(std::int64_t t, const FieldProfile& field) {
    if (t < 1) return false;
    const std::int64_t p = field.p();
    if (field.is_equal_characteristic()) return t % p != 0;
    const std::int64_t top = b_value(p, *field.e());
    if (t <= top) return t % p != 0;
    return field.zeta_p_in_K() && t == p * *field.e1();
}

std::vector<std::string> validate_profile(const RamificationProfile& profile, const FieldProfile& field) {
    if (profile.p() != field.p()) {
        throw ValidationError("prime mismatch: profile has p = " + std::to_string(profile.p()) +
                              ", field has p = " + std::to_string(field.p()));
    }
    std::vector<std::string> violations;
    for (const auto& b : profile.breaks()) {
        if (!is_admissible(b.t, field)) {
            violations.push_back("t = " + std::to_string(b.t) + " is not an admissible break over this field");
        }
    }
    return violations;
}

}  // namespace ramfilt
