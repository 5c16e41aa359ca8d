#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace findex {

/// Raised when an exact index computation does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in addition");
    }
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in subtraction");
    }
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in multiplication");
    }
    return out;
}

inline std::int64_t checked_cube(std::int64_t x) {
    return checked_mul(checked_mul(x, x), x);
}

}  // namespace findex
