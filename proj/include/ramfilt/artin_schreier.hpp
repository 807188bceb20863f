#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace ramfilt {

/// Finite Laurent polynomial in T over F_p. Zero coefficients are never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(std::int64_t p);
    /// Coefficients are reduced mod p; zeros are dropped.
    LaurentPoly(std::int64_t p, const std::map<std::int64_t, std::int64_t>& coefficients);

    static LaurentPoly monomial(std::int64_t p, std::int64_t exponent, std::int64_t coefficient = 1);

    std::int64_t p() const noexcept { return p_; }
    const std::map<std::int64_t, std::uint64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::uint64_t coefficient(std::int64_t exponent) const;

    /// Lowest exponent present; nullopt for 0.
    std::optional<std::int64_t> valuation() const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;

    /// g^p, which over F_p sends a T^e to a T^{pe}.
    LaurentPoly frobenius() const;

    /// The Artin-Schreier operator g -> g^p - g.
    LaurentPoly wp() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void add_term(std::int64_t exponent, std::uint64_t c);

    std::int64_t p_;
    std::map<std::int64_t, std::uint64_t> terms_;
};

/// Canonical text: "c*T^e" terms joined by " + ", exponents decreasing; "0" for zero.
std::string to_string(const LaurentPoly& f);

/// Accepts the canonical form; also tolerates any term order, repeated
/// exponents, and coefficients >= p (all reduced mod p).
LaurentPoly parse_laurent(std::int64_t p, const std::string& text);

/// Removes every pole term whose exponent is divisible by p by repeatedly
/// trading a T^{-pk} for a T^{-k}. Exponents >= 0 are left alone.
LaurentPoly reduce(const LaurentPoly& f);

enum class ASKind { Split, Unramified, Ramified };

std::string to_string(ASKind kind);

struct ASClassification {
    ASKind kind = ASKind::Split;
    std::optional<std::int64_t> break_value;  // only for Ramified

    friend bool operator==(const ASClassification&, const ASClassification&) = default;
};

/// Kind of the extension x^p - x = f of F_p((T)), with its break when ramified.
ASClassification classify(const LaurentPoly& f);

/// T^{-m}; its extension has break m. Throws ValidationError when p | m or m < 1.
LaurentPoly witness(std::int64_t p, std::int64_t m);

}  // namespace ramfilt
