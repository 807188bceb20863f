#include "ramfilt/arith.hpp"

#include <sstream>

namespace ramfilt {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::ostringstream out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out << "; ";
        out << items[i];
    }
    return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_prime(std::int64_t p, const char* who) {
    if (!is_prime(p)) {
        throw ValidationError(std::string(who) + ": p = " + std::to_string(p) + " is not prime");
    }
}

Integer ipow(std::int64_t base, std::uint64_t exp) {
    Integer result;
    Integer b(static_cast<long>(base));
    mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exp);
    return result;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw ValidationError("not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw ValidationError("zero denominator: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace ramfilt
