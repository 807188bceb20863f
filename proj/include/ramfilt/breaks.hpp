#pragma once

#include "ramfilt/arith.hpp"
#include "ramfilt/profile.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramfilt {

/// A lower ramification break l with the codimension f of its jump.
struct LowerBreak {
    Integer l;
    std::int64_t f = 0;

    friend bool operator==(const LowerBreak& a, const LowerBreak& b) { return a.l == b.l && a.f == b.f; }
};

/// Lower breaks l_1 < ... < l_n: l_1 = t_1 and
/// l_i = l_{i-1} + (t_i - t_{i-1}) p^{f_1 + ... + f_{i-1}}.
std::vector<Integer> lower_breaks(const RamificationProfile& profile);

/// Inverse recurrence. Throws NonRealizableError when some t_i fails to be an
/// integer strictly above t_{i-1}.
RamificationProfile upper_breaks_from_lower(std::int64_t p, const std::vector<LowerBreak>& lower);

class NonRealizableError : public ValidationError {
public:
    NonRealizableError(std::size_t index, const std::string& what)
        : ValidationError(what), index_(index) {}

    /// 1-based position of the first offending lower break.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Interval of the w-axis: [0,t1], ]t1,t2], ..., ]tn,+inf[.
struct Interval {
    std::int64_t lo = 0;
    std::optional<std::int64_t> hi;  // nullopt: +inf
    bool lo_closed = false;

    friend bool operator==(const Interval&, const Interval&) = default;
};

std::string render(const Interval& iv);

struct IndexRow {
    Interval interval;
    Integer index;  // (G^0 : G^w) on the interval

    friend bool operator==(const IndexRow& a, const IndexRow& b) {
        return a.interval == b.interval && a.index == b.index;
    }
};

std::vector<IndexRow> index_table(const RamificationProfile& profile);

/// d = (1 + t)(p - 1) for a ramified cyclic degree-p extension with break t.
Integer different_exponent_degree_p(std::int64_t t, std::int64_t p);

/// Recovers t from d. Throws ValidationError if (p - 1) does not divide d
/// or the resulting t is below 1.
std::int64_t break_from_different(const Integer& d, std::int64_t p);

/// Sum over u >= 0 of (|G_u| - 1), in closed form from the lower breaks.
Integer total_different_exponent(const RamificationProfile& profile);

/// Sum over index-p subgroups H of (p - 1)(1 + t(H)), in closed form.
Integer disc_exponent_via_conductors(const RamificationProfile& profile);

}  // namespace ramfilt
