#pragma once

#include "relthue/rational.hpp"

#include <string>

namespace relthue {

// Two-sided rational enclosure of a nonnegative real value: lo <= value <= hi.
// Irrational quantities (n-th roots) are carried this way so every comparison
// downstream can pick the conservative endpoint instead of rounding.
struct RatInterval {
    Rat lo, hi;

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }

    /** Distance from a point to the enclosure; zero when the point is inside. */
    Rat distance(const Rat& p) const {
        if (p < lo) return lo - p;
        if (p > hi) return p - hi;
        return Rat(0);
    }
};

inline RatInterval exact_interval(const Rat& v) { return RatInterval{v, v}; }

inline RatInterval operator*(const Rat& c, const RatInterval& iv) {
    // Positive scaling only; nothing here ever scales an enclosure by a negative factor.
    return RatInterval{c * iv.lo, c * iv.hi};
}

inline RatInterval operator/(const RatInterval& iv, const RatInterval& d) {
    return RatInterval{iv.lo / d.hi, iv.hi / d.lo};
}

inline RatInterval max_of(const RatInterval& a, const RatInterval& b) {
    return RatInterval{a.lo > b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
}

inline RatInterval max_with(const RatInterval& iv, const Rat& floor_value) {
    return RatInterval{iv.lo > floor_value ? iv.lo : floor_value,
                       iv.hi > floor_value ? iv.hi : floor_value};
}

// Enclosure of x^(1/n) for x >= 0, with hi - lo <= width.  Bisection on the
// exact predicate mid^n <= x, so both endpoints are certified.
RatInterval nth_root_enclosure(const Rat& x, unsigned long n, const Rat& width);

inline RatInterval sqrt_enclosure(const Rat& x, const Rat& width) {
    return nth_root_enclosure(x, 2, width);
}

/** Default enclosure width for derived bound constants. */
inline Rat default_root_width() { return Rat(1, 1000000000); }

std::string to_string(const RatInterval& iv, int digits = 9);

} // namespace relthue
