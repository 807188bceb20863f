#include "ramfilt/profile.hpp"

#include <numeric>
#include <string>

namespace ramfilt {

RamificationProfile::RamificationProfile(std::int64_t p, std::vector<UpperBreak> breaks)
    : p_(p), breaks_(std::move(breaks)) {
    std::vector<std::string> problems;
    if (!is_prime(p_)) problems.push_back("p = " + std::to_string(p_) + " is not prime");
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        const auto& b = breaks_[i];
        const std::string where = "break " + std::to_string(i + 1);
        if (b.t < 1) problems.push_back(where + ": t = " + std::to_string(b.t) + " must be >= 1");
        if (b.f < 1) problems.push_back(where + ": f = " + std::to_string(b.f) + " must be >= 1");
        if (i > 0 && b.t <= breaks_[i - 1].t) {
            problems.push_back(where + ": t = " + std::to_string(b.t) +
                               " does not exceed previous break " + std::to_string(breaks_[i - 1].t));
        }
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
}

std::int64_t RamificationProfile::dimension() const noexcept {
    return std::accumulate(breaks_.begin(), breaks_.end(), std::int64_t{0},
                           [](std::int64_t acc, const UpperBreak& b) { return acc + b.f; });
}

std::int64_t RamificationProfile::codim_prefix(std::size_t i) const {
    if (i > breaks_.size()) throw std::out_of_range("codim_prefix index past the last break");
    std::int64_t s = 0;
    for (std::size_t j = 0; j < i; ++j) s += breaks_[j].f;
    return s;
}

}  // namespace ramfilt
