#include "relthue/forms.hpp"

#include <algorithm>

namespace relthue {

std::string family_name(Family f) { return f == Family::quartic ? "quartic" : "sextic"; }

bool parameter_excluded(Family f, long t) {
    if (f == Family::quartic) return t == -3 || t == 0 || t == 3;
    return t == -8 || t == -3 || t == 0 || t == 5;
}

ParamForm make_form(Family f, long t) {
    if (parameter_excluded(f, t))
        throw ReducibleParameterError(family_name(f) + " family is reducible at t = " +
                                      std::to_string(t));
    if (f == Family::quartic)
        return ParamForm{f, t, {Int(1), Int(-t), Int(-6), Int(t), Int(1)}};
    return ParamForm{f, t,
                     {Int(1), Int(-2 * t), Int(-(5 * t + 15)), Int(-20), Int(5 * t),
                      Int(2 * t + 6), Int(1)}};
}

QuadInt evaluate(const ParamForm& form, const QuadInt& x, const QuadInt& y) {
    check_same_ring(x, y);
    int n = form.degree();
    // sum c_k x^(n-k) y^k via Horner in x with precomputed powers of y
    std::vector<QuadInt> ypow;
    ypow.reserve(n + 1);
    ypow.push_back(QuadInt{x.m, Int(1), Int(0)});
    for (int k = 1; k <= n; ++k) ypow.push_back(ypow.back() * y);
    QuadInt acc = form.coeffs[0] * ypow[0];
    for (int k = 1; k <= n; ++k) acc = acc * x + form.coeffs[k] * ypow[k];
    return acc;
}

Int evaluate_int(const ParamForm& form, const Int& u, const Int& v) {
    int n = form.degree();
    Int acc = form.coeffs[0];
    Int vp(1);
    for (int k = 1; k <= n; ++k) {
        vp *= v;
        acc = acc * u + form.coeffs[k] * vp;
    }
    return acc;
}

std::vector<SolutionPair> orbit(Family f, const SolutionPair& p) {
    auto pairs = orbit(f, p.x, p.y);
    std::vector<SolutionPair> out;
    out.reserve(pairs.size());
    for (auto& [x, y] : pairs) out.push_back(SolutionPair{x, y});
    return out;
}

long dual_parameter(Family f, long t) {
    long td = f == Family::quartic ? -t : -t - 3;
    if (parameter_excluded(f, td))
        throw DualParameterReducibleError("dual of t = " + std::to_string(t) +
                                          " lands on reducible parameter " + std::to_string(td));
    return td;
}

SolutionPair normalize_sign(const SolutionPair& p) {
    auto [y1, y2] = coords_split(p.y);
    auto [x1, x2] = coords_split(p.x);
    for (const Int* v : {&y1, &y2, &x1, &x2}) {
        if (*v > 0) return p;
        if (*v < 0) return SolutionPair{-p.x, -p.y};
    }
    return p;
}

std::vector<SolutionPair> normalize_sign(std::vector<SolutionPair> pairs) {
    for (auto& p : pairs) p = normalize_sign(p);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

std::string render(const SolutionPair& p) {
    return "(" + render(p.x) + ", " + render(p.y) + ")";
}

} // namespace relthue
