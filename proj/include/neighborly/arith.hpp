#pragma once

#include <cstdint>

#include "neighborly/error.hpp"

namespace neighborly {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::Range, "integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Range, "integer overflow in multiplication");
    return r;
}

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

/// Floor of the square root, computed without floating point.
inline std::uint64_t isqrt(std::uint64_t n)
{
    if (n < 2)
        return n;
    std::uint64_t x = n;
    std::uint64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

}  // namespace neighborly
