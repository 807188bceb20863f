#include "ramfilt/breaks.hpp"

#include <sstream>

namespace ramfilt {

std::vector<Integer> lower_breaks(const RamificationProfile& profile) {
    std::vector<Integer> out;
    out.reserve(profile.size());
    const auto breaks = profile.breaks();
    std::int64_t s = 0;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (i == 0) {
            out.emplace_back(static_cast<long>(breaks[0].t));
        } else {
            const Integer step = ipow(profile.p(), s) * static_cast<long>(breaks[i].t - breaks[i - 1].t);
            out.push_back(out.back() + step);
        }
        s += breaks[i].f;
    }
    return out;
}

RamificationProfile upper_breaks_from_lower(std::int64_t p, const std::vector<LowerBreak>& lower) {
    require_prime(p, "upper_breaks_from_lower");
    std::vector<UpperBreak> upper;
    upper.reserve(lower.size());
    Integer prev_t = 0;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        const auto& lb = lower[i];
        const std::string where = "lower break " + std::to_string(i + 1);
        if (lb.f < 1) throw NonRealizableError(i + 1, where + ": f must be >= 1");
        if (lb.l < 1) throw NonRealizableError(i + 1, where + ": l must be >= 1");
        Integer t;
        if (i == 0) {
            t = lb.l;
        } else {
            const Integer delta = lb.l - lower[i - 1].l;
            if (delta <= 0) throw NonRealizableError(i + 1, where + ": lower breaks must increase strictly");
            const Integer denom = ipow(p, s);
            if (!mpz_divisible_p(delta.get_mpz_t(), denom.get_mpz_t())) {
                throw NonRealizableError(i + 1, where + ": t = " + to_string(prev_t) + " + " + to_string(delta) +
                                                    "/" + to_string(denom) + " is not an integer");
            }
            t = prev_t + delta / denom;
        }
        if (!t.fits_slong_p()) throw NonRealizableError(i + 1, where + ": upper break out of range");
        upper.push_back({t.get_si(), lb.f});
        prev_t = t;
        s += lb.f;
    }
    return RamificationProfile(p, std::move(upper));
}

std::string render(const Interval& iv) {
    std::ostringstream out;
    out << (iv.lo_closed ? '[' : ']') << iv.lo << ',';
    if (iv.hi) {
        out << *iv.hi << ']';
    } else {
        out << "+inf[";
    }
    return out.str();
}

std::vector<IndexRow> index_table(const RamificationProfile& profile) {
    std::vector<IndexRow> rows;
    rows.reserve(profile.size() + 1);
    std::int64_t lo = 0;
    std::int64_t s = 0;
    bool closed = true;
    for (const auto& b : profile.breaks()) {
        rows.push_back({Interval{lo, b.t, closed}, ipow(profile.p(), s)});
        lo = b.t;
        s += b.f;
        closed = false;
    }
    rows.push_back({Interval{lo, std::nullopt, closed}, ipow(profile.p(), s)});
    return rows;
}

Integer different_exponent_degree_p(std::int64_t t, std::int64_t p) {
    require_prime(p, "different_exponent_degree_p");
    if (t < 1) throw ValidationError("break t = " + std::to_string(t) + " must be >= 1");
    return Integer(static_cast<long>(t) + 1) * static_cast<long>(p - 1);
}

std::int64_t break_from_different(const Integer& d, std::int64_t p) {
    require_prime(p, "break_from_different");
    if (d < 1) throw ValidationError("different exponent " + to_string(d) + " must be >= 1");
    const Integer pm1(static_cast<long>(p - 1));
    if (!mpz_divisible_p(d.get_mpz_t(), pm1.get_mpz_t())) {
        throw ValidationError("p - 1 = " + to_string(pm1) + " does not divide d = " + to_string(d));
    }
    const Integer t = d / pm1 - 1;
    if (t < 1) {
        throw ValidationError("d = " + to_string(d) + " gives t = " + to_string(t) +
                              ", not a break of a ramified extension");
    }
    if (!t.fits_slong_p()) throw ValidationError("break recovered from d is out of range");
    return t.get_si();
}

Integer total_different_exponent(const RamificationProfile& profile) {
    const auto lower = lower_breaks(profile);
    const std::int64_t m = profile.dimension();
    Integer total = 0;
    Integer prev_l = -1;  // u runs over (l_{i-1}, l_i], with u = 0 included in the first block
    std::int64_t s = 0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        const Integer order = ipow(profile.p(), static_cast<std::uint64_t>(m - s));
        total += (lower[i] - prev_l) * (order - 1);
        prev_l = lower[i];
        s += profile.breaks()[i].f;
    }
    return total;
}

Integer disc_exponent_via_conductors(const RamificationProfile& profile) {
    Integer total = 0;
    Integer prev = 1;  // p^{s_{i-1}}
    std::int64_t s = 0;
    for (const auto& b : profile.breaks()) {
        s += b.f;
        const Integer cur = ipow(profile.p(), static_cast<std::uint64_t>(s));
        total += (cur - prev) * (static_cast<long>(b.t) + 1);
        prev = cur;
    }
    return total;
}

}  // namespace ramfilt
