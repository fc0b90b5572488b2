#include "relthue/quad_ring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace relthue {

RingSpec make_ring(long m) {
    if (m <= 0) throw NonPositiveError("make_ring: m must be >= 1, got " + std::to_string(m));
    for (long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0)
            throw NotSquareFreeError("make_ring: m = " + std::to_string(m) +
                                     " is divisible by " + std::to_string(p * p));
    }
    return RingSpec{m};
}

QuadInt make_elem(const RingSpec& ring, Int a1, Int a2) {
    return QuadInt{ring.m, std::move(a1), std::move(a2)};
}

void check_same_ring(const QuadInt& a, const QuadInt& b) {
    if (a.m != b.m)
        throw RingMismatchError("ring mismatch: m = " + std::to_string(a.m) + " vs m = " +
                                std::to_string(b.m));
}

QuadInt from_split(const RingSpec& ring, const Int& c1, const Int& c2) {
    if (!ring.half_basis()) return QuadInt{ring.m, c1, c2};
    Int diff = c1 - c2;
    if (diff % 2 != 0)
        throw std::invalid_argument("from_split: c1 and c2 must have equal parity for m = 3 (mod 4)");
    return QuadInt{ring.m, diff / 2, c2};
}

std::vector<QuadInt> enumerate_disc(const RingSpec& ring, const Rat& r_sq) {
    if (r_sq < 0) throw NonPositiveError("enumerate_disc: r_sq must be >= 0");
    // Norms are integers, so norm(z) <= r_sq is equivalent to norm(z) <= floor(r_sq).
    Int cap = floor_rat(r_sq);
    std::vector<QuadInt> out;

    if (ring.half_basis()) {
        // 4*norm = (2*a1 + a2)^2 + m*a2^2 <= 4*cap.
        Int cap4 = 4 * cap;
        Int a1max = isqrt_floor(cap); // |a1| <= sqrt(norm) when a2 spans its range; widen below
        // Bound a1 via |2*a1 + a2| <= sqrt(4*cap) and |a2| <= sqrt(4*cap/m).
        Int a2max = isqrt_floor(cap4 / ring.m);
        Int umax = isqrt_floor(cap4);
        a1max = (umax + a2max) / 2 + 1;
        for (Int a1 = -a1max; a1 <= a1max; ++a1) {
            for (Int a2 = -a2max; a2 <= a2max; ++a2) {
                QuadInt z{ring.m, a1, a2};
                if (norm(z) <= cap) out.push_back(z);
            }
        }
    } else {
        Int a1max = isqrt_floor(cap);
        Int a2max = isqrt_floor(cap / ring.m);
        for (Int a1 = -a1max; a1 <= a1max; ++a1) {
            Int rem = cap - a1 * a1;
            for (Int a2 = -a2max; a2 <= a2max; ++a2) {
                if (ring.m * a2 * a2 <= rem) out.push_back(QuadInt{ring.m, a1, a2});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::ostream& operator<<(std::ostream& os, const QuadInt& z) {
    return os << z.a1 << (z.a2 >= 0 ? " + " : " - ") << abs(z.a2) << "*w";
}

std::string render(const QuadInt& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

} // namespace relthue
