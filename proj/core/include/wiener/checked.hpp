#pragma once

#include <cstdint>

#include "wiener/errors.hpp"

namespace wiener {

// All index-like and value-like quantities in this library are signed 64-bit.
// These helpers throw OverflowError instead of wrapping around.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in multiplication");
    return r;
}

inline std::int64_t checked_square(std::int64_t a) { return checked_mul(a, a); }

} // namespace wiener
