#pragma once

#include "relthue/enclosure.hpp"
#include "relthue/forms.hpp"
#include "relthue/rational.hpp"

#include <string>
#include <vector>

namespace relthue {

/**
 * Inputs of the solvability-bound formulas: the inequality bound K >= 1, the
 * split parameters 0 < epsilon < 1 and 0 < eta < 1, the form degree n, and
 * positive lower bounds A, B on the root separation quantities.
 */
struct BoundParams {
    Rat K;
    Rat epsilon;
    Rat eta;
    int n = 4;
    Rat A, B;
};

/**
 * The five derived constants.  C and E are exact rationals; C1, C2 and D
 * involve n-th roots and are carried as enclosures of width <= 1e-9.  Always
 * C2.lo <= C1.lo and C2.hi <= C1.hi.
 */
struct BoundSet {
    Rat C;
    RatInterval C1, C2, D;
    Rat E;
};

/** Derives C, C1, C2, D, E.  Throws std::invalid_argument on bad parameters. */
BoundSet derive_bounds(const BoundParams& p);

enum class CaseId { IA1, IA2, IB1, IB2, IIA1, IIA2, IIB1, IIB2 };

std::string case_name(CaseId id);

/**
 * One coordinate case of the component lemma.  Equality-triggered rules (IA1,
 * IB1, IIA1, IIB1) carry a zero threshold; the others trigger when the named
 * component is >= threshold in absolute value, read conservatively at
 * threshold.hi.  The right-hand bound on |F| is exact because n is even, so
 * m^(n/2) is an integer and E is rational.
 */
struct CaseRule {
    CaseId id;
    std::string trigger;    // predicate on the components of y
    std::string form_args;  // integer pair the conclusion constrains
    bool trigger_is_equality = false;
    RatInterval threshold;  // exact zero for equality triggers
    Rat rhs;
};

/** The four rules of the m-class: IA/IB for m = 3 mod 4, IIA/IIB otherwise. */
std::vector<CaseRule> case_rules(long m, const BoundParams& p, const BoundSet& b);

enum class Scenario { generic_m, m1, m3_large_t, m3_small_t };

std::string scenario_name(Scenario s);

/** Published (epsilon, eta) pairs with the matching regime pair (A, B); K = 1. */
BoundParams presets(Family f, Scenario s);

/**
 * Optional tuning helper, not used on any verification path.  Sweeps epsilon
 * over a step grid minimizing C1 (eta does not enter C1), then sweeps eta
 * minimizing D * E to balance the two opposing monotone effects.
 */
BoundParams tune_preset(const BoundParams& base, const Rat& step);

/**
 * One published corollary constant with its recomputation.  Entries whose
 * printed value provably differs from the formula value by more than the
 * publication tolerance 2e-3 are flagged; for those the enclosure is the
 * authoritative value.
 */
struct CorollaryEntry {
    Family family;
    Scenario scenario;
    long m;             // 0 when the constant does not depend on m
    std::string label;  // e.g. "C1 threshold", "IA2 rhs"
    Rat printed;
    RatInterval computed;
    bool known_misprint = false;
};

/** Every numeric constant printed in the six solvability corollaries. */
std::vector<CorollaryEntry> corollary_table();

struct CorollaryCheck {
    CorollaryEntry entry;
    Rat deviation;  // distance from printed value to the computed enclosure
    bool ok;        // within tolerance, or flagged and provably off
};

/** Tolerance 2e-3: ok iff deviation <= tol for normal entries, > tol for flagged ones. */
std::vector<CorollaryCheck> check_corollaries();

} // namespace relthue
