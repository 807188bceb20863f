#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ramfilt {

using FpVector = std::vector<std::uint64_t>;

/// Dense linear algebra over the prime field F_p. Entries live in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t inv(std::uint64_t a) const;

    /// Reduced row echelon basis of span(vectors); all vectors have length dim.
    std::vector<FpVector> echelon(std::span<const FpVector> vectors, std::size_t dim) const;

    std::size_t rank(std::span<const FpVector> vectors, std::size_t dim) const {
        return echelon(vectors, dim).size();
    }

    /// span(a) = span(b)
    bool same_span(std::span<const FpVector> a, std::span<const FpVector> b, std::size_t dim) const;

    /// span(sub) is contained in span(super)
    bool contains(std::span<const FpVector> super, std::span<const FpVector> sub, std::size_t dim) const;

    /// a . v
    std::uint64_t dot(const FpVector& a, const FpVector& v) const;

    /// Row-vector convention: returns v * M where M is dim x dim.
    FpVector apply(const FpVector& v, std::span<const FpVector> matrix) const;

    /// Basis of the kernel of the functional x -> normal . x (normal != 0).
    std::vector<FpVector> kernel_of_functional(const FpVector& normal) const;

    /// Throws ValidationError if v has the wrong length or an entry outside [0, p).
    void check_vector(const FpVector& v, std::size_t dim, const char* who) const;

private:
    std::uint64_t p_;
};

/// Number of hyperplanes of F_p^m: (p^m - 1)/(p - 1). Saturates at UINT64_MAX.
std::uint64_t hyperplane_count(std::uint64_t p, std::uint64_t m);

/// Normal vector of the k-th hyperplane in the canonical order: normals with
/// first nonzero coordinate 1, grouped by the position of that coordinate,
/// remaining coordinates in base-p order.
FpVector hyperplane_normal(std::uint64_t p, std::size_t m, std::uint64_t k);

}  // namespace ramfilt
