#pragma once

#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace almval {

/// Machine-width index type for l, m, n, k. Only the sequence values
/// themselves are arbitrary precision.
using index_t = std::uint64_t;

/**
 * 2-adic valuation: the exponent of the largest power of 2 dividing an
 * integer. The valuation of 0 is infinite; every other value is a
 * non-negative integer. Infinity compares greater than any finite value
 * and absorbs addition. No formula in this library produces an infinite
 * valuation on valid input; the marker exists so that nu_2(0) is a value,
 * not an error.
 */
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr Valuation(std::uint64_t v) : value_(v) {}

    static constexpr Valuation infinity() {
        Valuation v;
        v.value_ = kInfinite;
        return v;
    }

    constexpr bool is_infinite() const { return value_ == kInfinite; }

    constexpr std::uint64_t value() const {
        if (is_infinite()) {
            throw std::domain_error("Valuation: infinite valuation has no finite value");
        }
        return value_;
    }

    friend constexpr bool operator==(Valuation, Valuation) = default;
    // kInfinite is the largest representable word, so raw comparison orders
    // infinity above every finite valuation.
    friend constexpr auto operator<=>(Valuation a, Valuation b) { return a.value_ <=> b.value_; }

    friend constexpr Valuation operator+(Valuation a, Valuation b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Valuation(a.value_ + b.value_);
    }

private:
    static constexpr std::uint64_t kInfinite = ~std::uint64_t{0};
    std::uint64_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Valuation v) {
    if (v.is_infinite()) return os << "inf";
    return os << v.value();
}

/// s2(n): number of ones in the binary expansion of n.
constexpr index_t s2(std::uint64_t n) { return static_cast<index_t>(std::popcount(n)); }

/// nu_2 of a machine word; infinite for 0.
constexpr Valuation v2(std::uint64_t n) {
    if (n == 0) return Valuation::infinity();
    return Valuation(static_cast<std::uint64_t>(std::countr_zero(n)));
}

/// Legendre: nu_2(n!) = n - s2(n). Must agree with the big-integer
/// factorial; tests compare the two routes up to n = 2000.
constexpr Valuation v2_factorial(std::uint64_t n) { return Valuation(n - s2(n)); }

/// nu_2 of the rising product (a)_k = a(a+1)...(a+k-1), a >= 1.
constexpr Valuation pochhammer_v2(std::uint64_t a, std::uint64_t k) {
    if (a == 0) throw std::domain_error("pochhammer_v2: base must be positive");
    if (k == 0) return Valuation(0);  // empty product
    return Valuation(v2_factorial(a + k - 1).value() - v2_factorial(a - 1).value());
}

}  // namespace almval
