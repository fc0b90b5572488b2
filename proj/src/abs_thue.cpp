#include "relthue/abs_thue.hpp"

#include "relthue/root_analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relthue {

std::string completeness_name(Completeness c) {
    return c == Completeness::proof_backed ? "proof_backed" : "box_bounded";
}

std::string render(const IntPair& p) {
    std::ostringstream os;
    os << "(" << p.u << ", " << p.v << ")";
    return os.str();
}

namespace {

void sort_unique(std::vector<IntPair>& pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool satisfies(const ParamForm& form, const Int& u, const Int& v, const Int& d_max) {
    Int val = evaluate_int(form, u, v);
    return abs(val) <= d_max;
}

} // namespace

AbsSolutionList brute_box(const ParamForm& form, const Int& d_max, const Int& v_max) {
    if (d_max < 1) throw std::invalid_argument("brute_box: d_max must be positive");
    if (v_max < 1) throw std::invalid_argument("brute_box: v_max must be positive");

    AbsSolutionList out;
    out.form = form;
    out.d_max = d_max;
    out.v_max = v_max;
    out.completeness = Completeness::box_bounded;

    const int n = form.degree();
    const Int root_cap = kth_root_ceil(d_max, static_cast<unsigned long>(n));

    // v = 0: |u|^n <= d_max, origin excluded.
    for (Int u = 1; u <= root_cap; ++u) {
        if (satisfies(form, u, 0, d_max)) {
            out.pairs.push_back(IntPair{u, Int(0)});
            out.pairs.push_back(IntPair{-u, Int(0)});
        }
    }

    const RootGapData gaps = gap_stats(form);
    const Rat half_gap_pow = pow_rat(gaps.a_lower / 2, static_cast<unsigned long>(n - 1));

    // Negation closure makes v > 0 enough: F(-u, -v) = F(u, v) for even n.
    for (Int v = 1; v <= v_max; ++v) {
        Rat tighter = Rat(d_max) / (pow_rat(Rat(v), static_cast<unsigned long>(n - 1)) * half_gap_pow);
        Rat half_width = Rat(root_cap) < tighter ? Rat(root_cap) : tighter;
        half_width += 1;
        for (const auto& r : gaps.roots) {
            Int lo = ceil_rat(Rat(v) * r.lo - half_width);
            Int hi = floor_rat(Rat(v) * r.hi + half_width);
            for (Int u = lo; u <= hi; ++u) {
                if (satisfies(form, u, v, d_max)) {
                    out.pairs.push_back(IntPair{u, v});
                    out.pairs.push_back(IntPair{-u, -v});
                }
            }
        }
    }
    sort_unique(out.pairs);
    return out;
}

std::optional<AbsSolutionList> known_abs_solutions(Family f, long t, const Int& d_max) {
    if (parameter_excluded(f, t) || d_max < 1) return std::nullopt;

    std::vector<IntPair> gens;
    if (f == Family::quartic) {
        if (d_max == 1) {
            gens.push_back(IntPair{Int(0), Int(1)});
            if (t == 1) gens.push_back(IntPair{Int(1), Int(2)});
            if (t == -1) gens.push_back(IntPair{Int(2), Int(1)});
            if (t == 4) gens.push_back(IntPair{Int(2), Int(3)});
            if (t == -4) gens.push_back(IntPair{Int(3), Int(2)});
        } else if (t >= 58 && d_max <= 6 * Int(t) + 7) {
            gens = {IntPair{Int(0), Int(1)}, IntPair{Int(1), Int(1)},
                    IntPair{Int(1), Int(2)}, IntPair{Int(-1), Int(2)}};
        } else {
            return std::nullopt;
        }
    } else {
        if (d_max == 1) {
            gens.push_back(IntPair{Int(0), Int(1)});
        } else if (t >= 89 && d_max <= 120 * Int(t) + 323) {
            gens = {IntPair{Int(0), Int(1)}, IntPair{Int(1), Int(1)},
                    IntPair{Int(1), Int(2)}, IntPair{Int(-1), Int(3)}};
        } else {
            return std::nullopt;
        }
    }

    AbsSolutionList out;
    out.form = make_form(f, t);
    out.d_max = d_max;
    out.v_max = 0;
    out.completeness = Completeness::proof_backed;
    for (const auto& g : gens) {
        if (!satisfies(out.form, g.u, g.v, d_max)) continue;
        for (const auto& [u, v] : orbit(f, g.u, g.v)) out.pairs.push_back(IntPair{u, v});
    }
    sort_unique(out.pairs);
    return expand_scalings(out, d_max);
}

AbsSolutionList expand_scalings(const AbsSolutionList& primitives, const Int& d_max) {
    AbsSolutionList out = primitives;
    out.d_max = d_max;
    const unsigned long n = static_cast<unsigned long>(primitives.form.degree());
    for (const auto& p : primitives.pairs) {
        Int value = abs(evaluate_int(primitives.form, p.u, p.v));
        if (value == 0) continue; // cannot happen for irreducible forms, but never loop on it
        for (Int g = 2;; ++g) {
            Int scaled;
            mpz_pow_ui(scaled.get_mpz_t(), g.get_mpz_t(), n);
            scaled *= value;
            if (scaled > d_max) break;
            out.pairs.push_back(IntPair{g * p.u, g * p.v});
        }
    }
    sort_unique(out.pairs);
    return out;
}

} // namespace relthue
