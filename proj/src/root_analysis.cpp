#include "relthue/root_analysis.hpp"

#include "relthue/errors.hpp"

#include <algorithm>

namespace relthue {

namespace {

// F_t(x, 1) with coefficients flipped into ascending order.
QPoly dehomogenize(const ParamForm& form) {
    std::vector<Int> low_to_high(form.coeffs.rbegin(), form.coeffs.rend());
    return qpoly_from_ints(low_to_high);
}

// Safe lower bound on |alpha_i - alpha_j| for i < j in sorted disjoint intervals.
Rat pair_gap(const RootInterval& lower, const RootInterval& upper) {
    return upper.lo - lower.hi;
}

} // namespace

std::vector<RootInterval> isolate_roots(const ParamForm& form, const Rat& width) {
    return isolate_real_roots(dehomogenize(form), width);
}

RootGapData gap_stats(const ParamForm& form, const Rat& width) {
    RootGapData data;
    data.family = form.family;
    data.t = form.t;
    data.width = width;
    data.roots = isolate_roots(form, width);

    const auto& r = data.roots;
    if (r.size() < 2) throw IndistinguishableRootsError("fewer than two real roots isolated");
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (!(pair_gap(r[i], r[i + 1]) > 0))
            throw IndistinguishableRootsError("isolating intervals touch; width too coarse");

    data.a_lower = pair_gap(r[0], r[1]);
    for (std::size_t i = 1; i + 1 < r.size(); ++i)
        data.a_lower = std::min(data.a_lower, pair_gap(r[i], r[i + 1]));

    bool first = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
        Rat prod(1);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j == i) continue;
            prod *= j < i ? pair_gap(r[j], r[i]) : pair_gap(r[i], r[j]);
        }
        if (first || prod < data.b_lower) {
            data.b_lower = prod;
            first = false;
        }
    }
    return data;
}

RootGapData gap_stats(const ParamForm& form) {
    // Both gap bounds only grow as the intervals shrink, so the refinement is
    // done once two successive halvings move them less than 1e-7.
    const Rat step_tol(1, 10000000);
    Rat width = cauchy_root_bound(dehomogenize(form)) / Rat(1 << 20);
    RootGapData prev = gap_stats(form, width);
    for (int round = 0; round < 80; ++round) {
        width /= 2;
        RootGapData cur = gap_stats(form, width);
        if (cur.a_lower - prev.a_lower < step_tol && cur.b_lower - prev.b_lower < step_tol)
            return cur;
        prev = cur;
    }
    throw PrecisionExhaustedError("gap bounds did not stabilize");
}

RegimeBounds regime_table(Family f, Regime r) {
    if (f == Family::quartic) {
        if (r == Regime::large_t) return RegimeBounds{parse_decimal("0.9833"), parse_decimal("58.1")};
        return RegimeBounds{parse_decimal("0.8284"), parse_decimal("4.6114")};
    }
    if (r == Regime::large_t) return RegimeBounds{parse_decimal("0.4986"), parse_decimal("101.83")};
    return RegimeBounds{parse_decimal("0.4646"), parse_decimal("3.3121")};
}

Regime regime_of(Family f, long t) {
    if (f == Family::quartic) return t >= 58 || t <= -58 ? Regime::large_t : Regime::small_t;
    return t >= 89 || t <= -92 ? Regime::large_t : Regime::small_t;
}

} // namespace relthue
