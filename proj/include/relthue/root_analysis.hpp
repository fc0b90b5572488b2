#pragma once

#include "relthue/forms.hpp"
#include "relthue/polynomial.hpp"

#include <vector>

namespace relthue {

/**
 * Certified root-separation data for one form: disjoint isolating intervals for
 * every real root of F(x, 1), plus lower bounds on the two separation
 * quantities used by the solvability thresholds,
 *   A = min_{i<j} |alpha_i - alpha_j|,
 *   B = min_i prod_{j != i} |alpha_i - alpha_j|.
 * Both bounds are safe: they are computed from interval endpoints only.
 */
struct RootGapData {
    Family family;
    long t = 0;
    std::vector<RootInterval> roots; // sorted, pairwise disjoint
    Rat a_lower, b_lower;
    Rat width; // refinement width the intervals satisfy
};

/** Isolating intervals for the real roots of F_t(x, 1) at the given width. */
std::vector<RootInterval> isolate_roots(const ParamForm& form, const Rat& width);

/** Gap bounds from a fixed set of isolating intervals. */
RootGapData gap_stats(const ParamForm& form, const Rat& width);

/**
 * Adaptive version: starts at width = 2^-20 * Cauchy bound and halves until
 * both bounds stabilize in the sixth decimal digit.
 */
RootGapData gap_stats(const ParamForm& form);

enum class Regime { small_t, large_t };

/** Published per-regime lower bounds for (A, B). */
struct RegimeBounds {
    Rat a_lower, b_lower;
};

RegimeBounds regime_table(Family f, Regime r);

/** Regime the parameter routes to: quartic |t| >= 58, sextic t >= 89 or t <= -92. */
Regime regime_of(Family f, long t);

} // namespace relthue
