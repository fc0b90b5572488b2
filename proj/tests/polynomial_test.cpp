#include "relthue/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace relthue;

namespace {

QPoly poly(std::initializer_list<long> low_to_high) {
    std::vector<Rat> c;
    for (long v : low_to_high) c.emplace_back(v);
    return QPoly(std::move(c));
}

} // namespace

TEST_SUITE("polynomial") {

    TEST_CASE("arithmetic and evaluation") {
        auto p = poly({-3, 0, 1});      // x^2 - 3
        auto q = poly({1, 2});          // 2x + 1
        CHECK((p + q).degree() == 2);
        CHECK((p * q).degree() == 3);
        CHECK(p.eval(Rat(2)) == 1);
        CHECK((p * q).eval(Rat(3)) == p.eval(Rat(3)) * q.eval(Rat(3)));
        CHECK((p - p).is_zero());
        CHECK(derivative(p).c == std::vector<Rat>{Rat(0), Rat(2)});
    }

    TEST_CASE("division identity") {
        std::mt19937 rng(23);
        std::uniform_int_distribution<long> pick(-9, 9);
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<Rat> ac, bc;
            for (int i = 0; i < 6; ++i) ac.emplace_back(pick(rng));
            for (int i = 0; i < 3; ++i) bc.emplace_back(pick(rng));
            QPoly a(std::move(ac)), b(std::move(bc));
            if (b.is_zero()) continue;
            auto [quot, rem] = divrem(a, b);
            CHECK((b * quot + rem - a).is_zero());
            CHECK(rem.degree() < b.degree());
        }
    }

    TEST_CASE("gcd and squarefree part") {
        auto a = poly({-1, 0, 1});  // (x-1)(x+1)
        auto b = poly({-1, 1});     // x - 1
        auto g = poly_gcd(a * b, b);
        CHECK(g.degree() == 1);
        CHECK(g.eval(Rat(1)) == 0);

        auto doubled = b * b * poly({2, 1}); // (x-1)^2 (x+2)
        auto sf = squarefree_part(doubled);
        CHECK(sf.degree() == 2);
        CHECK(sf.eval(Rat(1)) == 0);
        CHECK(sf.eval(Rat(-2)) == 0);
        // roots are simple: derivative does not vanish there
        CHECK(derivative(sf).eval(Rat(1)) != 0);
    }

    TEST_CASE("cauchy bound contains all real roots") {
        auto p = poly({-6, 1, 4, 1}); // roots near -3.2, -1.7, 0.9 approximately
        Rat bound = cauchy_root_bound(p);
        auto roots = isolate_real_roots(p, Rat(1, 1024));
        REQUIRE(roots.size() == 3);
        CHECK(roots.front().lo > -bound);
        CHECK(roots.back().hi < bound);
    }

    TEST_CASE("sturm chain root counting") {
        auto p = poly({-2, 0, 1}); // x^2 - 2
        SturmChain chain(p);
        CHECK(chain.count_roots(Rat(0), Rat(2)) == 1);
        CHECK(chain.count_roots(Rat(-2), Rat(2)) == 2);
        CHECK(chain.count_roots(Rat(2), Rat(10)) == 0);
        CHECK(count_real_roots(p) == 2);
        CHECK(count_real_roots(poly({1, 0, 1})) == 0);  // x^2 + 1
        CHECK(count_real_roots(poly({0, 0, 1})) == 1);  // double root at 0, counted once
    }

    TEST_CASE("isolation certifies every interval") {
        auto p = poly({-1, -1, 0, 0, 1}); // x^4 - x - 1, two real roots
        auto roots = isolate_real_roots(p, Rat(1, 1u << 20));
        REQUIRE(roots.size() == 2);
        SturmChain chain(squarefree_part(p));
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const auto& r = roots[i];
            if (r.exact) {
                CHECK(p.eval(r.lo) == 0);
                continue;
            }
            CHECK(r.width() <= Rat(1, 1u << 20));
            CHECK(p.eval(r.lo) * p.eval(r.hi) < 0);
            CHECK(chain.count_roots(r.lo, r.hi) == 1);
            if (i + 1 < roots.size()) CHECK(r.hi < roots[i + 1].lo); // disjoint and sorted
        }
    }

    TEST_CASE("exact roots are flagged when bisection lands on them") {
        auto p = poly({0, -1, 0, 1}); // x^3 - x; the first midpoint is the root 0
        auto roots = isolate_real_roots(p, Rat(1, 1000));
        REQUIRE(roots.size() == 3);
        CHECK(roots[1].exact);
        CHECK(roots[1].lo == 0);
        CHECK(roots[1].hi == 0);
        CHECK(roots[0].lo <= Rat(-1));
        CHECK(roots[0].hi >= Rat(-1));
        CHECK(roots[2].lo <= Rat(1));
        CHECK(roots[2].hi >= Rat(1));
    }

    TEST_CASE("rational roots are trapped within the requested width") {
        auto p = poly({-1, 0, 4}); // (2x-1)(2x+1)
        auto roots = isolate_real_roots(p, Rat(1, 1000));
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].lo <= Rat(-1, 2));
        CHECK(roots[0].hi >= Rat(-1, 2));
        CHECK(roots[1].lo <= Rat(1, 2));
        CHECK(roots[1].hi >= Rat(1, 2));
        for (const auto& r : roots) CHECK(r.width() <= Rat(1, 1000));
    }

    TEST_CASE("repeated roots are isolated once") {
        auto p = poly({1, 2, 1}) * poly({-3, 1}); // (x+1)^2 (x-3)
        auto roots = isolate_real_roots(p, Rat(1, 4096));
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].lo <= Rat(-1));
        CHECK(roots[0].hi >= Rat(-1));
        CHECK(roots[1].lo <= Rat(3));
        CHECK(roots[1].hi >= Rat(3));
    }

    TEST_CASE("degenerate inputs") {
        CHECK(isolate_real_roots(poly({5}), Rat(1, 2)).empty()); // constant
        auto lin = isolate_real_roots(poly({-7, 2}), Rat(1, 2)); // 2x - 7
        REQUIRE(lin.size() == 1);
        CHECK(lin[0].lo <= Rat(7, 2));
        CHECK(lin[0].hi >= Rat(7, 2));
    }
}
