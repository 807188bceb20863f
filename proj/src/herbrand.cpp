#include "ramfilt/herbrand.hpp"

#include <algorithm>
#include <string>

namespace ramfilt {

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Segment> segments, Rational value_at_zero)
    : segments_(std::move(segments)) {
    if (segments_.empty()) throw ValidationError("piecewise-linear function needs at least one segment");
    if (segments_.front().start != 0) throw ValidationError("first segment must start at 0");
    if (segments_.back().end.has_value()) throw ValidationError("last segment must be unbounded");

    start_values_.reserve(segments_.size());
    Rational value = value_at_zero;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const Segment& s = segments_[i];
        if (s.slope <= 0) throw ValidationError("segment " + std::to_string(i) + " has non-positive slope");
        if (i + 1 < segments_.size()) {
            if (!s.end) throw ValidationError("only the last segment may be unbounded");
            if (*s.end <= s.start) throw ValidationError("segment " + std::to_string(i) + " is empty");
            if (segments_[i + 1].start != *s.end) {
                throw ValidationError("segments " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                      " leave a gap or overlap");
            }
        }
        start_values_.push_back(value);
        if (s.end) value += (*s.end - s.start) * s.slope;
    }
}

Rational PiecewiseLinearFn::operator()(const Rational& v) const {
    if (v < 0) throw ValidationError("evaluation point " + to_string(v) + " is negative");
    // Last segment whose start is <= v; on a shared endpoint both neighbours agree.
    auto it = std::upper_bound(segments_.begin(), segments_.end(), v,
                               [](const Rational& x, const Segment& s) { return x < s.start; });
    const std::size_t i = static_cast<std::size_t>(it - segments_.begin()) - 1;
    return start_values_[i] + (v - segments_[i].start) * segments_[i].slope;
}

Rational PiecewiseLinearFn::solve(const Rational& u) const {
    if (u < start_values_.front()) {
        throw ValidationError("value " + to_string(u) + " lies below the function's range");
    }
    auto it = std::upper_bound(start_values_.begin(), start_values_.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - start_values_.begin()) - 1;
    return segments_[i].start + (u - start_values_[i]) / segments_[i].slope;
}

PiecewiseLinearFn PiecewiseLinearFn::inverse() const {
    if (start_values_.front() != 0) throw ValidationError("inverse() requires value_at_zero = 0");
    std::vector<Segment> inv;
    inv.reserve(segments_.size());
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        Segment s{start_values_[i], std::nullopt, 1 / segments_[i].slope};
        s.slope.canonicalize();
        if (i + 1 < segments_.size()) s.end = start_values_[i + 1];
        inv.push_back(std::move(s));
    }
    return PiecewiseLinearFn(std::move(inv), segments_.front().start);
}

bool PiecewiseLinearFn::is_convex() const {
    return std::is_sorted(segments_.begin(), segments_.end(),
                          [](const Segment& a, const Segment& b) { return a.slope < b.slope; });
}

bool PiecewiseLinearFn::is_concave() const {
    return std::is_sorted(segments_.begin(), segments_.end(),
                          [](const Segment& a, const Segment& b) { return a.slope > b.slope; });
}

PiecewiseLinearFn build_psi(const RamificationProfile& profile) {
    std::vector<PiecewiseLinearFn::Segment> segs;
    segs.reserve(profile.size() + 1);
    Rational start = 0;
    std::int64_t s = 0;  // f_1 + ... + f_{i-1}
    for (const auto& b : profile.breaks()) {
        segs.push_back({start, Rational(static_cast<long>(b.t)), Rational(ipow(profile.p(), s))});
        start = b.t;
        s += b.f;
    }
    segs.push_back({start, std::nullopt, Rational(ipow(profile.p(), s))});
    return PiecewiseLinearFn(std::move(segs), 0);
}

Rational psi_eval(const PiecewiseLinearFn& fn, const Rational& v) { return fn(v); }

Rational phi_eval(const PiecewiseLinearFn& fn, const Rational& u) {
    if (u < 0) throw ValidationError("phi argument " + to_string(u) + " is negative");
    return fn.solve(u);
}

}  // namespace ramfilt
