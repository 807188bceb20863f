#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramfilt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an input violates a documented invariant. Carries every
/// violation found, not just the first.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what)
        : std::invalid_argument(what), violations_{what} {}
    explicit ValidationError(std::vector<std::string> violations);

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

bool is_prime(std::int64_t n);

/// Throws ValidationError unless p is a prime.
void require_prime(std::int64_t p, const char* who);

Integer ipow(std::int64_t base, std::uint64_t exp);

/// Canonical decimal form, "a/b" for non-integers.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Parses "a" or "a/b" into a canonicalized rational.
Rational parse_rational(const std::string& text);

}  // namespace ramfilt
