#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace wtab {

// Exact arithmetic over Z union Z+1/2, stored as twice the value.
struct HalfInt {
    int t = 0;  // 2x the mathematical value

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int whole) : t(2 * whole) {}

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.t = twice;
        return h;
    }

    constexpr bool is_integral() const { return t % 2 == 0; }
    constexpr bool is_zero() const { return t == 0; }

    constexpr HalfInt operator-() const { return from_twice(-t); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(t + o.t); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(t - o.t); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    std::string str() const {
        if (t % 2 == 0) return std::to_string(t / 2);
        return std::to_string(t) + "/2";
    }
};

}  // namespace wtab
