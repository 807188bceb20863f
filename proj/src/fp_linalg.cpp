#include "ramfilt/fp_linalg.hpp"

#include "ramfilt/arith.hpp"

#include <limits>
#include <string>

namespace ramfilt {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) ||
        !is_prime(static_cast<std::int64_t>(p))) {
        throw ValidationError("F_p requires a prime p, got " + std::to_string(p));
    }
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
    // a^(p-2) by square-and-multiply
    std::uint64_t result = 1;
    std::uint64_t base = a % p_;
    for (std::uint64_t e = p_ - 2; e; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::vector<FpVector> PrimeField::echelon(std::span<const FpVector> vectors, std::size_t dim) const {
    std::vector<FpVector> rows(vectors.begin(), vectors.end());
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const std::uint64_t scale = inv(rows[r][col]);
        for (auto& x : rows[r]) x = mul(x, scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const std::uint64_t factor = rows[i][col];
            for (std::size_t j = col; j < dim; ++j) rows[i][j] = sub(rows[i][j], mul(factor, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

bool PrimeField::same_span(std::span<const FpVector> a, std::span<const FpVector> b, std::size_t dim) const {
    return echelon(a, dim) == echelon(b, dim);
}

bool PrimeField::contains(std::span<const FpVector> super, std::span<const FpVector> sub,
                          std::size_t dim) const {
    std::vector<FpVector> both(super.begin(), super.end());
    both.insert(both.end(), sub.begin(), sub.end());
    return rank(both, dim) == rank(super, dim);
}

std::uint64_t PrimeField::dot(const FpVector& a, const FpVector& v) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = add(acc, mul(a[i], v[i]));
    return acc;
}

FpVector PrimeField::apply(const FpVector& v, std::span<const FpVector> matrix) const {
    const std::size_t dim = v.size();
    FpVector out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) out[j] = add(out[j], mul(v[i], matrix[i][j]));
    }
    return out;
}

std::vector<FpVector> PrimeField::kernel_of_functional(const FpVector& normal) const {
    const std::size_t dim = normal.size();
    std::size_t lead = 0;
    while (lead < dim && normal[lead] == 0) ++lead;
    if (lead == dim) throw std::domain_error("kernel_of_functional: zero functional");
    const std::uint64_t lead_inv = inv(normal[lead]);
    std::vector<FpVector> basis;
    basis.reserve(dim - 1);
    for (std::size_t k = 0; k < dim; ++k) {
        if (k == lead) continue;
        FpVector v(dim, 0);
        v[k] = 1;
        v[lead] = neg(mul(normal[k], lead_inv));
        basis.push_back(std::move(v));
    }
    return basis;
}

void PrimeField::check_vector(const FpVector& v, std::size_t dim, const char* who) const {
    if (v.size() != dim) {
        throw ValidationError(std::string(who) + ": vector of length " + std::to_string(v.size()) +
                              ", expected " + std::to_string(dim));
    }
    for (auto x : v) {
        if (x >= p_) {
            throw ValidationError(std::string(who) + ": entry " + std::to_string(x) + " not in [0, " +
                                  std::to_string(p_) + ")");
        }
    }
}

std::uint64_t hyperplane_count(std::uint64_t p, std::uint64_t m) {
    // 1 + p + ... + p^{m-1}
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t term = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (total > kMax - term) return kMax;
        total += term;
        if (i + 1 < m) {
            if (term > kMax / p) return kMax;
            term *= p;
        }
    }
    return total;
}

FpVector hyperplane_normal(std::uint64_t p, std::size_t m, std::uint64_t k) {
    FpVector normal(m, 0);
    for (std::size_t lead = 0; lead < m; ++lead) {
        const std::uint64_t block = [&] {
            std::uint64_t b = 1;
            for (std::size_t i = lead + 1; i < m; ++i) b *= p;
            return b;
        }();
        if (k < block) {
            normal[lead] = 1;
            for (std::size_t i = m; i-- > lead + 1;) {
                normal[i] = k % p;
                k /= p;
            }
            return normal;
        }
        k -= block;
    }
    throw std::out_of_range("hyperplane index past the last hyperplane");
}

}  // namespace ramfilt
