#pragma once

#include "relthue/errors.hpp"
#include "relthue/quad_ring.hpp"
#include "relthue/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace relthue {

enum class Family { quartic, sextic };

inline int family_degree(Family f) { return f == Family::quartic ? 4 : 6; }
std::string family_name(Family f);

/** Parameters where the family member degenerates (reducible); no form is built there. */
bool parameter_excluded(Family f, long t);

/**
 * One member of a parametric family of binary forms with integer coefficients,
 *   quartic: x^4 - t*x^3*y - 6*x^2*y^2 + t*x*y^3 + y^4
 *   sextic:  x^6 - 2t*x^5*y - (5t+15)*x^4*y^2 - 20*x^3*y^3 + 5t*x^2*y^4 + (2t+6)*x*y^5 + y^6
 * Coefficients are stored from x^n down to y^n.
 */
struct ParamForm {
    Family family;
    long t;
    std::vector<Int> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

ParamForm make_form(Family f, long t); // throws ReducibleParameterError on excluded t

/** F(x, y) over the ring of x and y; homogeneous Horner, exact. */
QuadInt evaluate(const ParamForm& form, const QuadInt& x, const QuadInt& y);

/** F(u, v) over the rational integers. */
Int evaluate_int(const ParamForm& form, const Int& u, const Int& v);

struct SolutionPair {
    QuadInt x, y;

    friend bool operator==(const SolutionPair& a, const SolutionPair& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const SolutionPair& a, const SolutionPair& b) {
        if (!(a.x == b.x)) return a.x < b.x;
        return a.y < b.y;
    }
};

// |F| is constant along these substitution orbits: 4 maps for the quartic
// family ((x,y) -> (y,-x)), 6 for the sextic ((x,y) -> (-y, x+y)).
// Works for any pair type with +, unary -, ==, < (ring pairs and integer pairs).
template <class P>
std::vector<std::pair<P, P>> orbit(Family f, const P& x, const P& y) {
    std::vector<std::pair<P, P>> out;
    P cx = x, cy = y;
    int steps = f == Family::quartic ? 4 : 6;
    for (int i = 0; i < steps; ++i) {
        out.emplace_back(cx, cy);
        if (f == Family::quartic) {
            P nx = cy, ny = -cx;
            cx = nx; cy = ny;
        } else {
            P nx = -cy, ny = cx + cy;
            cx = nx; cy = ny;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<SolutionPair> orbit(Family f, const SolutionPair& p);

/** t' with F_t(x,y) = F_{t'}(y,x): -t for the quartic family, -t-3 for the sextic. */
long dual_parameter(Family f, long t); // throws DualParameterReducibleError

/** The swapped pair that solves the dual form. */
inline SolutionPair dual_pair(const SolutionPair& p) { return SolutionPair{p.y, p.x}; }

/**
 * Sign normalization: of {p, -p} keep the representative whose component tuple
 * (c1(y), c2(y), c1(x), c2(x)) is positive at its first nonzero entry.
 * Output is deduplicated and sorted in canonical pair order.
 */
SolutionPair normalize_sign(const SolutionPair& p);
std::vector<SolutionPair> normalize_sign(std::vector<SolutionPair> pairs);

std::string render(const SolutionPair& p);

} // namespace relthue
