#pragma once

#include "relthue/forms.hpp"
#include "relthue/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relthue {

/**
 * How a solution list was established.  proof_backed lists come from the
 * embedded complete tables (valid for every right-hand side they cover);
 * box_bounded lists are exhaustive only inside the searched box.
 */
enum class Completeness { proof_backed, box_bounded };

std::string completeness_name(Completeness c);

struct IntPair {
    Int u, v;

    bool operator==(const IntPair& o) const { return u == o.u && v == o.v; }
    bool operator<(const IntPair& o) const { return u != o.u ? u < o.u : v < o.v; }
};

std::string render(const IntPair& p);

/**
 * All rational-integer pairs with |F(u, v)| <= d_max known to the producer.
 * The origin is excluded throughout: F vanishes there trivially and no
 * downstream consumer wants it.  Pairs are sorted and closed under the
 * family's orbit maps and under negation.
 */
struct AbsSolutionList {
    ParamForm form;
    Int d_max;
    Int v_max; // 0 for table-backed lists
    std::vector<IntPair> pairs;
    Completeness completeness = Completeness::box_bounded;
};

/**
 * Exhaustive search over |v| <= v_max with root-proximity pruning: for fixed
 * v != 0 any solution has |u - alpha*v| <= min(d^(1/n), d/(|v|^(n-1)(A/2)^(n-1)))
 * for the root alpha nearest to u/v, so only short windows around each
 * alpha*v are scanned.  The v = 0 column reduces to |u|^n <= d_max.  Every
 * emitted pair is re-checked exactly.
 */
AbsSolutionList brute_box(const ParamForm& form, const Int& d_max, const Int& v_max);

/**
 * Complete table when one is known: either d_max = 1 (any valid t, both
 * families) or the large-parameter ranges quartic t >= 58 with
 * d_max <= 6t + 7 and sextic t >= 89 with d_max <= 120t + 323.  Returns
 * nothing outside those ranges.
 */
std::optional<AbsSolutionList> known_abs_solutions(Family f, long t, const Int& d_max);

/**
 * Closes a primitive-complete list under scalar multiples: adds (g*u, g*v)
 * for g >= 2 whenever g^n * |F(u, v)| <= d_max.
 */
AbsSolutionList expand_scalings(const AbsSolutionList& primitives, const Int& d_max);

} // namespace relthue
