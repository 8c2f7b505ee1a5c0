#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "almval/valuation.hpp"

namespace almval {

/// Arbitrary-precision non-negative integer. Every quantity computed here
/// (A, B, T, S, 3^m - 1) is a non-negative integer; signed intermediates are
/// confined to the call sites that need them.
using Natural = boost::multiprecision::cpp_int;

inline bool is_odd(const Natural& n) { return boost::multiprecision::bit_test(n, 0); }

/// nu_2 of a big integer; infinite for 0.
inline Valuation v2(const Natural& n) {
    if (n.is_zero()) return Valuation::infinity();
    return Valuation(static_cast<std::uint64_t>(boost::multiprecision::lsb(n)));
}

inline Natural pow2(index_t e) { return Natural(1) << e; }

namespace detail {

// Shared factorial table. Grows on demand under a lock so concurrent sweeps
// can use it; values are returned by copy because growth relocates the table.
inline Natural factorial_cached(index_t n) {
    static std::mutex mu;
    static std::vector<Natural> table{Natural(1)};
    std::scoped_lock lock(mu);
    while (table.size() <= n) {
        table.push_back(table.back() * table.size());
    }
    return table[n];
}

}  // namespace detail

/// n!, memoized per process.
inline Natural factorial(index_t n) { return detail::factorial_cached(n); }

/// Exact binomial coefficient; 0 when k > n.
inline Natural binomial(index_t n, index_t k) {
    if (k > n) return Natural(0);
    return factorial(n) / (factorial(k) * factorial(n - k));
}

/// Rising product (a)_k = a(a+1)...(a+k-1) as an exact integer, a >= 1.
inline Natural pochhammer(index_t a, index_t k) {
    if (a == 0) throw std::domain_error("pochhammer: base must be positive");
    if (k == 0) return Natural(1);
    return factorial(a + k - 1) / factorial(a - 1);
}

}  // namespace almval
