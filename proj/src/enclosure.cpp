#include "relthue/enclosure.hpp"

#include <stdexcept>

namespace relthue {

RatInterval nth_root_enclosure(const Rat& x, unsigned long n, const Rat& width) {
    if (x < 0) throw std::domain_error("nth_root_enclosure: negative radicand");
    if (n == 0) throw std::domain_error("nth_root_enclosure: zeroth root");
    if (x == 0) return exact_interval(Rat(0));
    if (width <= 0) throw std::domain_error("nth_root_enclosure: width must be positive");

    // Integer part seeds the bracket; mpz_root gives floor(num^(1/n)) cheaply.
    Rat lo, hi;
    if (x >= 1) {
        Int f = kth_root_floor(floor_rat(x), n);
        lo = Rat(f, 1);
        hi = Rat(f + 1, 1);
        while (pow_rat(hi, n) < x) hi += 1; // guard: floor_rat(x) may undershoot x
    } else {
        lo = Rat(0);
        hi = Rat(1);
    }
    // Invariant: lo^n <= x <= hi^n.
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (pow_rat(mid, n) <= x) lo = mid;
        else hi = mid;
    }
    return RatInterval{lo, hi};
}

std::string to_string(const RatInterval& iv, int digits) {
    if (iv.lo == iv.hi) return rat_to_decimal(iv.lo, digits);
    return "[" + rat_to_decimal(iv.lo, digits) + ", " + rat_to_decimal(iv.hi, digits) + "]";
}

} // namespace relthue
