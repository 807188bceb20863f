#include "ramfilt/artin_schreier.hpp"

#include "ramfilt/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ramfilt {

LaurentPoly::LaurentPoly(std::int64_t p) : p_(p) { require_prime(p, "LaurentPoly"); }

LaurentPoly::LaurentPoly(std::int64_t p, const std::map<std::int64_t, std::int64_t>& coefficients)
    : LaurentPoly(p) {
    for (const auto& [e, c] : coefficients) {
        const auto r = ((c % p_) + p_) % p_;
        add_term(e, static_cast<std::uint64_t>(r));
    }
}

LaurentPoly LaurentPoly::monomial(std::int64_t p, std::int64_t exponent, std::int64_t coefficient) {
    return LaurentPoly(p, {{exponent, coefficient}});
}

std::uint64_t LaurentPoly::coefficient(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<std::int64_t> LaurentPoly::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

void LaurentPoly::add_term(std::int64_t exponent, std::uint64_t c) {
    const auto p = static_cast<std::uint64_t>(p_);
    const std::uint64_t sum = (coefficient(exponent) + c % p) % p;
    if (sum == 0) {
        terms_.erase(exponent);
    } else {
        terms_[exponent] = sum;
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    if (other.p_ != p_) throw ValidationError("adding Laurent polynomials over different primes");
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    if (other.p_ != p_) throw ValidationError("subtracting Laurent polynomials over different primes");
    LaurentPoly out = *this;
    const auto p = static_cast<std::uint64_t>(p_);
    for (const auto& [e, c] : other.terms_) out.add_term(e, p - c);
    return out;
}

LaurentPoly LaurentPoly::frobenius() const {
    LaurentPoly out(p_);
    for (const auto& [e, c] : terms_) out.terms_[e * p_] = c;
    return out;
}

LaurentPoly LaurentPoly::wp() const { return frobenius() - *this; }

std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (!first) out << " + ";
        out << it->second << "*T^" << it->first;
        first = false;
    }
    return out.str();
}

LaurentPoly parse_laurent(std::int64_t p, const std::string& text) {
    LaurentPoly f(p);
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    }
    if (compact == "0") return f;
    if (compact.empty() || compact.back() == '+') throw ValidationError("empty Laurent polynomial or term");

    std::stringstream terms(compact);
    for (std::string term; std::getline(terms, term, '+');) {
        const auto bad = [&] { return ValidationError("malformed term '" + term + "', expected c*T^e"); };
        const auto star = term.find("*T^");
        if (star == std::string::npos || star == 0) throw bad();
        const std::string coeff = term.substr(0, star);
        const std::string expo = term.substr(star + 3);
        if (!std::all_of(coeff.begin(), coeff.end(), ::isdigit)) throw bad();
        std::size_t used = 0;
        std::int64_t e = 0;
        try {
            e = std::stoll(expo, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != expo.size()) throw bad();
        std::uint64_t c = 0;
        for (char d : coeff) c = (c * 10 + static_cast<std::uint64_t>(d - '0')) % static_cast<std::uint64_t>(p);
        f = f + LaurentPoly(p, {{e, static_cast<std::int64_t>(c)}});
    }
    return f;
}

LaurentPoly reduce(const LaurentPoly& f) {
    const std::int64_t p = f.p();
    LaurentPoly g = f;
    // Lowest pole exponent divisible by p: a T^{-pk} = a T^{-k} + wp(a T^{-k}).
    for (;;) {
        std::optional<std::int64_t> target;
        for (const auto& [e, c] : g.terms()) {
            if (e >= 0) break;
            if (e % p == 0) {
                target = e;
                break;
            }
        }
        if (!target) return g;
        const auto a = static_cast<std::int64_t>(g.coefficient(*target));
        g = g - LaurentPoly::monomial(p, *target / p, a).wp();
    }
}

std::string to_string(ASKind kind) {
    switch (kind) {
        case ASKind::Split: return "Split";
        case ASKind::Unramified: return "Unramified";
        case ASKind::Ramified: return "Ramified";
    }
    return "?";
}

ASClassification classify(const LaurentPoly& f) {
    const LaurentPoly r = reduce(f);
    const auto v = r.valuation();
    if (v && *v < 0) return {ASKind::Ramified, -*v};
    if (r.coefficient(0) != 0) return {ASKind::Unramified, std::nullopt};
    return {ASKind::Split, std::nullopt};
}

LaurentPoly witness(std::int64_t p, std::int64_t m) {
    require_prime(p, "witness");
    if (m < 1) throw ValidationError("witness break m = " + std::to_string(m) + " must be >= 1");
    if (m % p == 0) {
        throw ValidationError("no degree-p cyclic extension of F_p((T)) has a break divisible by p (m = " +
                              std::to_string(m) + ")");
    }
    return LaurentPoly::monomial(p, -m);
}

}  // namespace ramfilt
