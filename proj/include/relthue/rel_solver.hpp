#pragma once

#include "relthue/abs_thue.hpp"
#include "relthue/bound_engine.hpp"
#include "relthue/forms.hpp"
#include "relthue/quad_ring.hpp"

#include <string>
#include <vector>

namespace relthue {

enum class SolveMode { cited, search };

std::string mode_name(SolveMode m);

/**
 * How one case rule's absolute inequality |F(pair)| <= d was settled.
 * method is one of "trivial" (d = 0, only the excluded origin qualifies),
 * "lemma" (embedded complete table), "box" (bounded search), or "skipped"
 * (A-side rules when the B-side already rules out every nonreal component).
 */
struct AbsResolution {
    CaseId id;
    Int d;
    std::string method;
    std::vector<IntPair> pairs;
    std::vector<Int> survivors; // |component| values compatible with the rule (A2/B2 only)
};

/**
 * Finite surviving combinations for the split components of y above the
 * |y| threshold: values the case analysis cannot exclude.
 */
struct ComponentSurvivors {
    std::vector<Int> a_values;                // nonzero |c1(y)|
    std::vector<Int> b_values;                // nonzero |c2(y)|
    std::vector<std::pair<Int, Int>> combos;  // parity-consistent (|c1|, |c2|)
};

/**
 * Applies the contradiction logic: a component value survives either by
 * sitting below the rule threshold or by appearing as a second coordinate in
 * the rule's absolute solution list.  Throws UnresolvedCaseError when a
 * needed resolution is absent (B-side always needed; A-side only when the
 * B-side survivor set is nonempty).
 */
ComponentSurvivors component_constraints(const std::vector<CaseRule>& rules,
                                         const std::vector<AbsResolution>& abs_results,
                                         long m);

/**
 * All solutions on the ray x2*y1 = x1*y2 with fixed second coordinates
 * (x2, y2) != (0, 0): writing (x2, y2) = g*(p, q) with g = gcd, the first
 * coordinates are (x1, y1) = z*(p, q) and the form value factors as
 * F(p, q) * (z + g*w)^n, so norm(F) <= K^2 becomes a univariate polynomial
 * condition settled by certified root isolation.
 */
std::vector<SolutionPair> ray_solutions(const ParamForm& form, const RingSpec& ring,
                                        const Int& x2, const Int& y2, const Int& K);

/** Exhaustive scan of norm(x), norm(y) <= norm_cap; every pair verified exactly. */
std::vector<SolutionPair> enumerate_box_solutions(const ParamForm& form,
                                                  const RingSpec& ring,
                                                  const Int& norm_cap);

struct StageCounts {
    long long box_pairs = 0, box_pass = 0;
    long long pinned_candidates = 0, pinned_pass = 0;
    long long rays = 0, ray_pass = 0;
    long long column_candidates = 0, column_pass = 0;
    long long orbit_added = 0;
};

struct GoldenDiff {
    std::vector<SolutionPair> missing;
    std::vector<SolutionPair> extra;
    std::vector<QuadInt> extra_values; // exact form value of each extra pair

    bool clean() const { return missing.empty() && extra.empty(); }
};

struct SolveReport {
    Family family = Family::quartic;
    long t = 0;
    long m = 1;
    bool dualized = false;
    long solved_t = 0; // parameter actually run (dual of t when dualized)
    Scenario scenario = Scenario::generic_m;
    SolveMode mode = SolveMode::search;
    BoundSet bounds;
    std::vector<AbsResolution> trace;
    ComponentSurvivors survivors;
    Int box_norm_cap;
    StageCounts counts;
    std::vector<SolutionPair> solutions; // sign-normalized, sorted
    Completeness completeness = Completeness::proof_backed;
    GoldenDiff golden;
};

/**
 * Full pipeline for one (family, t, m): preset selection, case resolution,
 * component survivors, residual enumeration (box, relation pinning, rays,
 * equality columns), orbit closure, exact verification, golden comparison.
 * Negative parameters are first dualized.
 */
SolveReport solve_relative(Family f, long t, long m, SolveMode mode,
                           const Int& v_max = Int(1000));

/** Expected sign-normalized solution list of the embedded theorem tables. */
std::vector<SolutionPair> golden_solutions(Family f, long t, long m);

struct VerifyReport {
    Family family = Family::quartic;
    long m = 1;
    long t_lo = 0, t_hi = 0;
    SolveMode mode = SolveMode::search;
    std::vector<SolveReport> reports; // ascending t, excluded parameters skipped
    std::vector<long> skipped;
    long mismatches = 0; // total missing + extra over all reports
};

/** Sweeps t over [t_lo, t_hi], distributing cells over a worker pool. */
VerifyReport verify_theorem(Family f, long m, long t_lo, long t_hi, SolveMode mode,
                            int jobs = 1, const Int& v_max = Int(1000));

} // namespace relthue
