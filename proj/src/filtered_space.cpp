#include "ramfilt/filtered_space.hpp"

#include "ramfilt/arith.hpp"

#include <string>

namespace ramfilt {

namespace {

std::vector<FpVector> sum_span(std::span<const FpVector> a, std::span<const FpVector> b) {
    std::vector<FpVector> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void check_census_input(const FilteredSpace& space, std::uint64_t budget) {
    if (space.dimension() < 1) throw ValidationError("break census needs a space of dimension >= 1");
    const auto count = hyperplane_count(static_cast<std::uint64_t>(space.p()), space.dimension());
    if (count > budget) {
        throw ValidationError("census would enumerate " + std::to_string(count) +
                              " hyperplanes, over the budget of " + std::to_string(budget));
    }
}

}  // namespace

FilteredSpace::FilteredSpace(std::int64_t p, std::size_t m, std::vector<Step> steps)
    : field_(static_cast<std::uint64_t>(p)), m_(m), steps_(std::move(steps)) {
    std::vector<std::string> problems;
    for (const auto& step : steps_) {
        for (const auto& v : step.span) field_.check_vector(v, m_, "FilteredSpace");
    }
    if (m_ == 0 && !steps_.empty()) problems.push_back("the zero space has no breaks");
    if (m_ > 0 && steps_.empty()) problems.push_back("a nonzero space needs at least one break");
    std::size_t prev_rank = m_;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const std::string where = "step " + std::to_string(i + 1);
        if (steps_[i].t < 1) problems.push_back(where + ": break must be >= 1");
        if (i > 0 && steps_[i].t <= steps_[i - 1].t) problems.push_back(where + ": breaks must increase");
        const std::size_t r = field_.rank(steps_[i].span, m_);
        if (i == 0 && r != m_) problems.push_back(where + ": G^{t_1} must be the whole space");
        if (i > 0) {
            if (!field_.contains(steps_[i - 1].span, steps_[i].span, m_)) {
                problems.push_back(where + ": not contained in the previous step");
            }
            if (r >= prev_rank) problems.push_back(where + ": flag must decrease strictly");
        }
        if (r == 0) problems.push_back(where + ": step must be nonzero");
        prev_rank = r;
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
}

FilteredSpace FilteredSpace::canonical(const RamificationProfile& profile) {
    const auto m = static_cast<std::size_t>(profile.dimension());
    std::vector<Step> steps;
    std::size_t s = 0;
    for (const auto& b : profile.breaks()) {
        Step step{b.t, {}};
        for (std::size_t k = s; k < m; ++k) {
            FpVector e(m, 0);
            e[k] = 1;
            step.span.push_back(std::move(e));
        }
        steps.push_back(std::move(step));
        s += static_cast<std::size_t>(b.f);
    }
    return FilteredSpace(profile.p(), m, std::move(steps));
}

FilteredSpace FilteredSpace::transformed(std::span<const FpVector> matrix) const {
    if (matrix.size() != m_) throw ValidationError("change of basis must be a square matrix of size m");
    for (const auto& row : matrix) field_.check_vector(row, m_, "change of basis");
    if (field_.rank(matrix, m_) != m_) throw ValidationError("change of basis is not invertible");
    std::vector<Step> steps;
    steps.reserve(steps_.size());
    for (const auto& step : steps_) {
        Step moved{step.t, {}};
        for (const auto& v : step.span) moved.span.push_back(field_.apply(v, matrix));
        steps.push_back(std::move(moved));
    }
    return FilteredSpace(p(), m_, std::move(steps));
}

RamificationProfile FilteredSpace::profile() const {
    std::vector<UpperBreak> breaks;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const auto here = field_.rank(steps_[i].span, m_);
        const auto next = i + 1 < steps_.size() ? field_.rank(steps_[i + 1].span, m_) : 0;
        breaks.push_back({steps_[i].t, static_cast<std::int64_t>(here - next)});
    }
    return RamificationProfile(p(), std::move(breaks));
}

std::set<std::int64_t> quotient_breaks(const FilteredSpace& space, std::span<const FpVector> subspace) {
    const auto& F = space.field();
    const auto m = space.dimension();
    for (const auto& v : subspace) F.check_vector(v, m, "quotient_breaks");

    std::set<std::int64_t> out;
    const auto steps = space.steps();
    auto current = F.echelon(sum_span(steps.empty() ? std::span<const FpVector>{} : steps[0].span, subspace), m);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        auto next = i + 1 < steps.size() ? F.echelon(sum_span(steps[i + 1].span, subspace), m)
                                         : F.echelon(subspace, m);
        if (current != next) out.insert(steps[i].t);
        current = std::move(next);
    }
    return out;
}

std::int64_t hyperplane_break(const FilteredSpace& space, const FpVector& normal) {
    const auto kernel = space.field().kernel_of_functional(normal);
    const auto found = quotient_breaks(space, kernel);
    if (found.size() != 1) {
        throw std::logic_error("quotient by a hyperplane must have exactly one break, found " +
                               std::to_string(found.size()));
    }
    return *found.begin();
}

BreakCensus degree_p_break_census_serial(const FilteredSpace& space, std::uint64_t budget) {
    check_census_input(space, budget);
    const auto p = static_cast<std::uint64_t>(space.p());
    const auto count = hyperplane_count(p, space.dimension());
    BreakCensus census;
    for (std::uint64_t k = 0; k < count; ++k) {
        ++census[hyperplane_break(space, hyperplane_normal(p, space.dimension(), k))];
    }
    return census;
}

BreakCensus degree_p_break_census(const FilteredSpace& space, std::uint64_t budget) {
    check_census_input(space, budget);
    const auto p = static_cast<std::uint64_t>(space.p());
    const auto count = static_cast<std::int64_t>(hyperplane_count(p, space.dimension()));
    // One slot per hyperplane, tallied after the loop so the result does not
    // depend on scheduling.
    std::vector<std::int64_t> breaks(static_cast<std::size_t>(count));
    bool failed = false;
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
        try {
            breaks[static_cast<std::size_t>(k)] =
                hyperplane_break(space, hyperplane_normal(p, space.dimension(), static_cast<std::uint64_t>(k)));
        } catch (...) {
#pragma omp atomic write
            failed = true;
        }
    }
    if (failed) throw std::logic_error("hyperplane census failed on some hyperplane");

    BreakCensus census;
    for (auto t : breaks) ++census[t];
    return census;
}

}  // namespace ramfilt
