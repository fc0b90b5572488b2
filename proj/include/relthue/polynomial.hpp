#pragma once

#include "relthue/errors.hpp"
#include "relthue/rational.hpp"

#include <utility>
#include <vector>

namespace relthue {

/**
 * Dense univariate polynomial with exact rational coefficients, c[i] * x^i.
 * Everything downstream that certifies a real quantity (root locations, gap
 * bounds, ray residuals) runs through this type; no floating point is involved.
 */
struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for the zero polynomial
    const Rat& lead() const { return c.back(); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

QPoly qpoly_from_ints(const std::vector<Int>& coeffs_low_to_high);

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const Rat& s, const QPoly& a);
QPoly operator-(const QPoly& a);

QPoly derivative(const QPoly& p);

/** Quotient and remainder of exact division over Q; b must be nonzero. */
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);

/** Monic gcd over Q. */
QPoly poly_gcd(QPoly a, QPoly b);

/** p / gcd(p, p'): same distinct roots, all simple. */
QPoly squarefree_part(const QPoly& p);

/** All real roots lie strictly inside (-B, B) with B = 1 + max|c_i| / |lead|. */
Rat cauchy_root_bound(const QPoly& p);

/**
 * One isolated real root.  Either an exact rational root (lo == hi) or an open
 * interval (lo, hi) with a sign change certified by Sturm count == 1.
 */
struct RootInterval {
    Rat lo, hi;
    bool exact = false;

    Rat width() const { return hi - lo; }
};

/**
 * Sturm chain of the square-free part.  count_roots(a, b) gives the number of
 * distinct real roots in the half-open interval (a, b]; endpoints must not be
 * roots.
 */
struct SturmChain {
    std::vector<QPoly> seq;

    explicit SturmChain(const QPoly& p);
    int variations(const Rat& x) const;
    int count_roots(const Rat& a, const Rat& b) const;
};

/**
 * All distinct real roots of p as disjoint sorted intervals of width <= width.
 * Exact rational roots come back with exact = true.  Throws
 * PrecisionExhaustedError if max_depth halvings cannot deliver the width.
 */
std::vector<RootInterval> isolate_real_roots(const QPoly& p, const Rat& width,
                                             int max_depth = 512);

/** Number of distinct real roots (Sturm count over the Cauchy bound interval). */
int count_real_roots(const QPoly& p);

} // namespace relthue
