#pragma once

#include "ramfilt/arith.hpp"
#include "ramfilt/profile.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ramfilt {

/// Strictly increasing, continuous, piecewise-linear function on [0, +inf)
/// with exact rational breakpoints and slopes.
class PiecewiseLinearFn {
public:
    struct Segment {
        Rational start;
        std::optional<Rational> end;  // nullopt: the segment runs to +inf
        Rational slope;

        friend bool operator==(const Segment&, const Segment&) = default;
    };

    /// Segments must start at 0, be contiguous, end with an unbounded
    /// segment, and have positive slopes.
    PiecewiseLinearFn(std::vector<Segment> segments, Rational value_at_zero);

    std::span<const Segment> segments() const noexcept { return segments_; }
    const Rational& value_at_zero() const noexcept { return start_values_.front(); }

    /// Value at the left end of segment i.
    const Rational& start_value(std::size_t i) const { return start_values_.at(i); }

    /// Throws ValidationError for v < 0.
    Rational operator()(const Rational& v) const;

    /// The unique v >= 0 with (*this)(v) = u. Throws for u below value_at_zero().
    Rational solve(const Rational& u) const;

    /// The functional inverse, again piecewise-linear on [value_at_zero, +inf);
    /// only defined here when value_at_zero() = 0.
    PiecewiseLinearFn inverse() const;

    bool is_convex() const;
    bool is_concave() const;

    friend bool operator==(const PiecewiseLinearFn&, const PiecewiseLinearFn&) = default;

private:
    std::vector<Segment> segments_;
    std::vector<Rational> start_values_;
};

/// psi(v) = integral over [0, v] of the index (G^0 : G^w).
PiecewiseLinearFn build_psi(const RamificationProfile& profile);

Rational psi_eval(const PiecewiseLinearFn& fn, const Rational& v);
Rational phi_eval(const PiecewiseLinearFn& fn, const Rational& u);

}  // namespace ramfilt
