#include "relthue/polynomial.hpp"

#include <algorithm>

namespace relthue {

QPoly qpoly_from_ints(const std::vector<Int>& coeffs_low_to_high) {
    std::vector<Rat> c;
    c.reserve(coeffs_low_to_high.size());
    for (const Int& z : coeffs_low_to_high) c.emplace_back(z);
    return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator-(const QPoly& a) {
    std::vector<Rat> c(a.c);
    for (auto& x : c) x = -x;
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return QPoly(std::move(c));
}

QPoly operator*(const Rat& s, const QPoly& a) {
    std::vector<Rat> c(a.c);
    for (auto& x : c) x *= s;
    return QPoly(std::move(c));
}

QPoly derivative(const QPoly& p) {
    if (p.degree() <= 0) return QPoly();
    std::vector<Rat> c(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * p.c[i];
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    QPoly r = a;
    std::vector<Rat> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rat f = r.lead() / b.lead();
        q[shift] += f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] -= f * b.c[i];
        r.trim();
    }
    return {QPoly(std::move(q)), std::move(r)};
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rat(1) / a.lead()) * a;
}

QPoly squarefree_part(const QPoly& p) {
    if (p.degree() <= 1) return p;
    QPoly g = poly_gcd(p, derivative(p));
    if (g.degree() <= 0) return p;
    return divrem(p, g).first;
}

Rat cauchy_root_bound(const QPoly& p) {
    if (p.degree() < 1) return Rat(1);
    Rat mx(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat a = abs(p.c[i]);
        if (a > mx) mx = a;
    }
    return Rat(1) + mx / abs(p.lead());
}

SturmChain::SturmChain(const QPoly& p) {
    QPoly sf = squarefree_part(p);
    if (sf.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
    seq.push_back(sf);
    if (sf.degree() >= 1) {
        seq.push_back(derivative(sf));
        while (seq.back().degree() >= 1) {
            QPoly r = divrem(seq[seq.size() - 2], seq.back()).second;
            if (r.is_zero()) break; // square-free input: remainder chain ends in a constant
            seq.push_back(-r);
        }
    }
}

int SturmChain::variations(const Rat& x) const {
    int count = 0, prev = 0;
    for (const QPoly& p : seq) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    return variations(a) - variations(b);
}

namespace {

// Bisection driver.  Counts are exact at every step, so an interval is only
// accepted once the chain certifies it holds exactly one distinct root.
struct Isolator {
    const SturmChain& chain;
    const QPoly& sf;
    Rat target_width;
    int max_depth;
    std::vector<RootInterval> out;

    void refine(Rat lo, Rat hi, int depth) {
        // invariant: sf(lo) != 0, sf(hi) != 0, exactly one root in (lo, hi)
        while (hi - lo > target_width) {
            if (depth-- <= 0)
                throw PrecisionExhaustedError("root refinement exceeded subdivision cap");
            Rat mid = (lo + hi) / 2;
            if (sf.eval(mid) == 0) {
                out.push_back(RootInterval{mid, mid, true});
                return;
            }
            if (chain.count_roots(lo, mid) == 1) hi = mid;
            else lo = mid;
        }
        out.push_back(RootInterval{lo, hi, false});
    }

    void split(const Rat& lo, const Rat& hi, int roots, int depth) {
        if (roots == 0) return;
        if (roots == 1) {
            refine(lo, hi, depth);
            return;
        }
        if (depth <= 0) throw PrecisionExhaustedError("root isolation exceeded subdivision cap");
        Rat mid = (lo + hi) / 2;
        if (sf.eval(mid) == 0) {
            out.push_back(RootInterval{mid, mid, true});
            // Shrink a symmetric gap around the exact root until it contains no other root,
            // then recurse on what is left on both sides.
            Rat delta = (hi - lo) / 4;
            int guard = max_depth;
            while (true) {
                if (guard-- <= 0)
                    throw PrecisionExhaustedError("could not separate exact root");
                if (sf.eval(mid - delta) != 0 && sf.eval(mid + delta) != 0 &&
                    chain.count_roots(mid - delta, mid + delta) == 1)
                    break;
                delta /= 2;
            }
            split(lo, mid - delta, chain.count_roots(lo, mid - delta), depth - 1);
            split(mid + delta, hi, chain.count_roots(mid + delta, hi), depth - 1);
            return;
        }
        int left = chain.count_roots(lo, mid);
        split(lo, mid, left, depth - 1);
        split(mid, hi, roots - left, depth - 1);
    }
};

} // namespace

std::vector<RootInterval> isolate_real_roots(const QPoly& p, const Rat& width, int max_depth) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    if (p.degree() == 0) return {};
    if (width <= 0) throw std::domain_error("isolate_real_roots: width must be positive");

    SturmChain chain(p);
    const QPoly& sf = chain.seq.front();
    Rat bound = cauchy_root_bound(sf);
    // Cauchy bound is strict, so the endpoints are never roots.
    Isolator iso{chain, sf, width, max_depth, {}};
    iso.split(-bound, bound, chain.count_roots(-bound, bound), max_depth);

    std::sort(iso.out.begin(), iso.out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return iso.out;
}

int count_real_roots(const QPoly& p) {
    SturmChain chain(p);
    Rat bound = cauchy_root_bound(chain.seq.front());
    return chain.count_roots(-bound, bound);
}

} // namespace relthue
