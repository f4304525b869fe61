#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace redvar {

using i64 = std::int64_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Thrown when an enumeration would exceed the configured point budget.
/// The harness converts it into a "skipped-budget" verification record.
struct BudgetExceeded : std::runtime_error {
    u64 needed;
    explicit BudgetExceeded(u64 n)
        : std::runtime_error("enumeration budget exceeded: " + std::to_string(n) + " points"),
          needed(n) {}
};

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i64 t = a % b; a = b; b = t; }
    return a;
}

inline i64 ipow_checked(i64 b, int e, i64 limit) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > limit / b) return limit + 1;
        r *= b;
    }
    return r;
}

}  // namespace redvar
