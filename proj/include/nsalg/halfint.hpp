#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace nsalg {

/// A half-integer stored as twice its value, so indices of L_n (n integral)
/// and G_r (r half-odd) share one representation.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t tw) : twice(tw) {}

    static constexpr HalfInt whole(std::int64_t n) { return HalfInt{2 * n}; }
    static constexpr HalfInt halves(std::int64_t tw) { return HalfInt{tw}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    /// Valid only when is_integer().
    constexpr std::int64_t as_integer() const { return twice / 2; }

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
    constexpr HalfInt operator-() const { return HalfInt{-twice}; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

} // namespace nsalg
