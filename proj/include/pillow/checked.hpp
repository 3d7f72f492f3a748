#pragma once

#include <cstdint>

#include "pillow/errors.hpp"

// Overflow-checked 64-bit integer arithmetic. Every character and count in
// this library is an exact integer identity; wrapping would silently corrupt it.
namespace pillow::checked {

using Int = std::int64_t;

inline Int add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

inline Int sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

inline Int mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

template <typename... Rest>
Int mul(Int x, Int y, Int z, Rest... rest) {
    return mul(mul(x, y), z, rest...);
}

/// n choose 2.
inline Int choose2(Int n) { return n < 2 ? 0 : mul(n, n - 1) / 2; }

}  // namespace pillow::checked
