#pragma once

#include "relthue/errors.hpp"
#include "relthue/rational.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace relthue {

/**
 * Ring of integers of Q(i*sqrt(m)) for square-free m >= 1.
 *
 * Integral basis: {1, i*sqrt(m)} when m = 1,2 (mod 4), and {1, w} with
 * w = (1 + i*sqrt(m))/2 when m = 3 (mod 4).  Elements are stored as integer
 * coordinate pairs (a1, a2) with respect to that basis, so all arithmetic is
 * exact and norm(z) = |z|^2 is always a nonnegative rational integer.
 */
struct RingSpec {
    long m = 0;

    /** True when the basis is {1, (1 + i*sqrt(m))/2}, i.e. m = 3 (mod 4). */
    bool half_basis() const { return m % 4 == 3; }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/** Validates m (positive, square-free) and builds the ring descriptor. */
RingSpec make_ring(long m);

struct QuadInt {
    long m = 0;
    Int a1, a2;

    bool is_zero() const { return a1 == 0 && a2 == 0; }

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.m == b.m && a.a1 == b.a1 && a.a2 == b.a2;
    }
    /** Canonical order: lexicographic on (a1, a2). */
    friend bool operator<(const QuadInt& a, const QuadInt& b) {
        if (a.a1 != b.a1) return a.a1 < b.a1;
        return a.a2 < b.a2;
    }
};

QuadInt make_elem(const RingSpec& ring, Int a1, Int a2);
inline QuadInt make_elem(const RingSpec& ring, long a1, long a2) {
    return make_elem(ring, Int(a1), Int(a2));
}

void check_same_ring(const QuadInt& a, const QuadInt& b);

inline QuadInt operator+(const QuadInt& a, const QuadInt& b) {
    check_same_ring(a, b);
    return QuadInt{a.m, a.a1 + b.a1, a.a2 + b.a2};
}

inline QuadInt operator-(const QuadInt& a, const QuadInt& b) {
    check_same_ring(a, b);
    return QuadInt{a.m, a.a1 - b.a1, a.a2 - b.a2};
}

inline QuadInt operator-(const QuadInt& a) { return QuadInt{a.m, -a.a1, -a.a2}; }

// Basis products: w^2 = -m for w = i*sqrt(m); w^2 = w - (1+m)/4 for the half basis.
inline QuadInt operator*(const QuadInt& a, const QuadInt& b) {
    check_same_ring(a, b);
    if (a.m % 4 == 3) {
        Int q = Int(1 + a.m) / 4;
        return QuadInt{a.m, a.a1 * b.a1 - a.a2 * b.a2 * q, a.a1 * b.a2 + a.a2 * b.a1 + a.a2 * b.a2};
    }
    return QuadInt{a.m, a.a1 * b.a1 - a.m * a.a2 * b.a2, a.a1 * b.a2 + a.a2 * b.a1};
}

inline QuadInt operator*(const Int& c, const QuadInt& a) { return QuadInt{a.m, c * a.a1, c * a.a2}; }

/** norm(z) = |z|^2, a nonnegative rational integer in both basis conventions. */
inline Int norm(const QuadInt& z) {
    if (z.m % 4 == 3) return z.a1 * z.a1 + z.a1 * z.a2 + z.a2 * z.a2 * (Int(1 + z.m) / 4);
    return z.a1 * z.a1 + z.m * z.a2 * z.a2;
}

/**
 * Component pair used by the case analysis: (2*a1 + a2, a2) for the half
 * basis, where 4*norm(z) = c1^2 + m*c2^2, and (a1, a2) otherwise, where
 * norm(z) = c1^2 + m*c2^2.
 */
inline std::pair<Int, Int> coords_split(const QuadInt& z) {
    if (z.m % 4 == 3) return {2 * z.a1 + z.a2, z.a2};
    return {z.a1, z.a2};
}

/** Inverse of coords_split; requires c1 = c2 (mod 2) in the half basis. */
QuadInt from_split(const RingSpec& ring, const Int& c1, const Int& c2);

/**
 * All z with norm(z) <= r_sq, in canonical (a1, a2) order.
 * r_sq may be rational; the comparison is exact.
 */
std::vector<QuadInt> enumerate_disc(const RingSpec& ring, const Rat& r_sq);

/** Rendering "a1 + a2*w"; w denotes the second basis element of the ring. */
std::ostream& operator<<(std::ostream& os, const QuadInt& z);
std::string render(const QuadInt& z);

} // namespace relthue
