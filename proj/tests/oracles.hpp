#pragma once

// Test-only reference computations. Each one works from the definitions
// directly and shares no code path with the library routine it checks.

#include "ramfilt/arith.hpp"
#include "ramfilt/filtered_space.hpp"
#include "ramfilt/profile.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace ramfilt::oracle {

inline Integer pow_int(std::int64_t base, std::int64_t exp) {
    Integer r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r *= static_cast<long>(base);
    return r;
}

/// log_p of the index (G^0 : G^w) for w > 0: the sum of f_j over breaks t_j < w.
inline std::int64_t index_exponent(const RamificationProfile& prof, const Rational& w) {
    std::int64_t s = 0;
    for (const auto& b : prof.breaks()) {
        if (Rational(static_cast<long>(b.t)) < w) s += b.f;
    }
    return s;
}

/// psi(v) as the integral of the step function w -> (G^0 : G^w) over [0, v],
/// summed piece by piece between consecutive integers (all breaks are integers).
inline Rational psi_by_integration(const RamificationProfile& prof, const Rational& v) {
    Rational total = 0;
    for (long k = 0; Rational(k) < v; ++k) {
        const Rational hi = std::min(Rational(k + 1), v);
        const Rational mid = (Rational(k) + hi) / 2;  // index is constant on ]k, k+1]
        total += (hi - k) * Rational(pow_int(prof.p(), index_exponent(prof, mid)));
    }
    return total;
}

inline std::vector<Integer> lower_breaks_by_integration(const RamificationProfile& prof) {
    std::vector<Integer> out;
    for (const auto& b : prof.breaks()) {
        const Rational l = psi_by_integration(prof, Rational(static_cast<long>(b.t)));
        out.push_back(l.get_num());
    }
    return out;
}

/// Sum over u = 0 .. l_n of (|G_u| - 1), one integer u at a time.
inline Integer different_by_summation(const RamificationProfile& prof) {
    const auto lower = lower_breaks_by_integration(prof);
    const std::int64_t m = prof.dimension();
    Integer total = 0;
    if (lower.empty()) return total;
    for (Integer u = 0; u <= lower.back(); ++u) {
        std::int64_t dropped = 0;  // f_j over lower breaks l_j < u
        for (std::size_t j = 0; j < lower.size(); ++j) {
            if (lower[j] < u) dropped += prof.breaks()[j].f;
        }
        total += pow_int(prof.p(), m - dropped) - 1;
    }
    return total;
}

/// All normalized normal vectors (first nonzero entry 1) of F_p^m, by
/// filtering every vector of F_p^m.
inline std::vector<FpVector> normalized_normals(std::uint64_t p, std::size_t m) {
    std::vector<FpVector> out;
    FpVector v(m, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = m; i-- > 0;) {
            v[i] = c % p;
            c /= p;
        }
        auto lead = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
        if (lead != v.end() && *lead == 1) out.push_back(v);
    }
    return out;
}

/// t(H) for H = ker(a): the largest t_i with some spanning vector of G^{t_i}
/// outside H.
inline std::int64_t break_of_hyperplane(const FilteredSpace& space, const FpVector& a) {
    const auto p = static_cast<std::uint64_t>(space.p());
    std::int64_t best = 0;
    for (const auto& step : space.steps()) {
        for (const auto& v : step.span) {
            std::uint64_t dot = 0;
            for (std::size_t i = 0; i < v.size(); ++i) dot = (dot + a[i] * v[i]) % p;
            if (dot != 0) {
                best = std::max(best, step.t);
                break;
            }
        }
    }
    return best;
}

inline std::map<std::int64_t, std::uint64_t> census_by_enumeration(const FilteredSpace& space) {
    std::map<std::int64_t, std::uint64_t> out;
    for (const auto& a : normalized_normals(static_cast<std::uint64_t>(space.p()), space.dimension())) {
        ++out[break_of_hyperplane(space, a)];
    }
    return out;
}

/// Sum over hyperplanes H of (p - 1)(1 + t(H)).
inline Integer conductor_sum_by_enumeration(const FilteredSpace& space) {
    Integer total = 0;
    for (const auto& [t, count] : census_by_enumeration(space)) {
        total += Integer(static_cast<unsigned long>(count)) * static_cast<long>(space.p() - 1) * (t + 1);
    }
    return total;
}

inline std::vector<std::int64_t> prime_to_p_up_to(std::int64_t p, std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= bound; ++n) {
        if (std::gcd(n, p) == 1) out.push_back(n);
    }
    return out;
}

// Generators -----------------------------------------------------------------

struct ProfileShape {
    std::vector<std::int64_t> primes;
    std::size_t max_breaks;
    std::int64_t max_t;
    std::int64_t max_f;
};

/// Uniform-ish random valid profile: n in [0, max_breaks], distinct sorted t
/// in [1, max_t], f in [1, max_f].
inline RamificationProfile random_profile(std::mt19937_64& rng, const ProfileShape& shape) {
    const auto p = shape.primes[std::uniform_int_distribution<std::size_t>(0, shape.primes.size() - 1)(rng)];
    const auto cap = std::min<std::size_t>(shape.max_breaks, static_cast<std::size_t>(shape.max_t));
    const auto n = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
    std::vector<std::int64_t> ts(static_cast<std::size_t>(shape.max_t));
    std::iota(ts.begin(), ts.end(), 1);
    std::shuffle(ts.begin(), ts.end(), rng);
    ts.resize(n);
    std::sort(ts.begin(), ts.end());
    std::vector<UpperBreak> breaks;
    std::uniform_int_distribution<std::int64_t> fdist(1, shape.max_f);
    for (auto t : ts) breaks.push_back({t, fdist(rng)});
    return RamificationProfile(p, std::move(breaks));
}

/// Every composition of m (ordered list of positive parts summing to m).
inline std::vector<std::vector<std::int64_t>> compositions(std::int64_t m) {
    std::vector<std::vector<std::int64_t>> out;
    if (m == 0) return {{}};
    for (std::int64_t first = 1; first <= m; ++first) {
        for (auto rest : compositions(m - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

/// Random invertible m x m matrix over F_p (rejection sampling).
inline std::vector<FpVector> random_invertible(std::mt19937_64& rng, std::uint64_t p, std::size_t m) {
    const PrimeField F(p);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        std::vector<FpVector> mat(m, FpVector(m));
        for (auto& row : mat)
            for (auto& x : row) x = dist(rng);
        if (F.rank(mat, m) == m) return mat;
    }
}

}  // namespace ramfilt::oracle
