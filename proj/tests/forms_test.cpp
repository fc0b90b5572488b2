#include "relthue/forms.hpp"

#include <doctest.h>

#include <random>

using namespace relthue;

namespace {

QuadInt real_elem(const RingSpec& ring, long v) { return make_elem(ring, v, 0); }

} // namespace

TEST_SUITE("forms") {

    TEST_CASE("coefficient vectors") {
        auto q = make_form(Family::quartic, 5);
        CHECK(q.coeffs == std::vector<Int>{Int(1), Int(-5), Int(-6), Int(5), Int(1)});
        auto s = make_form(Family::sextic, 2);
        CHECK(s.coeffs ==
              std::vector<Int>{Int(1), Int(-4), Int(-25), Int(-20), Int(10), Int(10), Int(1)});
        CHECK(q.degree() == 4);
        CHECK(s.degree() == 6);
    }

    TEST_CASE("excluded parameters") {
        for (long t : {-3L, 0L, 3L}) {
            CHECK(parameter_excluded(Family::quartic, t));
            CHECK_THROWS_AS(make_form(Family::quartic, t), ReducibleParameterError);
        }
        for (long t : {-8L, -3L, 0L, 5L}) {
            CHECK(parameter_excluded(Family::sextic, t));
            CHECK_THROWS_AS(make_form(Family::sextic, t), ReducibleParameterError);
        }
        CHECK_FALSE(parameter_excluded(Family::quartic, 1));
        CHECK_FALSE(parameter_excluded(Family::quartic, -4));
        CHECK_FALSE(parameter_excluded(Family::sextic, -1));
        CHECK_FALSE(parameter_excluded(Family::sextic, 89));
    }

    TEST_CASE("integer evaluation") {
        CHECK(evaluate_int(make_form(Family::quartic, 1), Int(1), Int(2)) == -1);
        CHECK(evaluate_int(make_form(Family::quartic, 4), Int(2), Int(3)) == 1);
        CHECK(evaluate_int(make_form(Family::quartic, 9), Int(0), Int(1)) == 1);
        CHECK(evaluate_int(make_form(Family::quartic, 9), Int(1), Int(1)) == -4);
        CHECK(evaluate_int(make_form(Family::sextic, 2), Int(1), Int(-1)) == 1);
        CHECK(evaluate_int(make_form(Family::sextic, 2), Int(1), Int(1)) == -27);
        CHECK(evaluate_int(make_form(Family::sextic, 2), Int(1), Int(2)) == 277);
        CHECK(evaluate_int(make_form(Family::sextic, -1), Int(1), Int(0)) == 1);
    }

    TEST_CASE("ring evaluation restricted to real elements matches integer evaluation") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<long> coord(-9, 9);
        std::uniform_int_distribution<long> tpick(-12, 12);
        for (Family f : {Family::quartic, Family::sextic}) {
            auto ring = make_ring(6);
            for (int i = 0; i < 50; ++i) {
                long t = tpick(rng);
                if (parameter_excluded(f, t)) continue;
                auto form = make_form(f, t);
                long u = coord(rng), v = coord(rng);
                auto val = evaluate(form, real_elem(ring, u), real_elem(ring, v));
                CHECK(val.a2 == 0);
                CHECK(val.a1 == evaluate_int(form, Int(u), Int(v)));
            }
        }
    }

    TEST_CASE("homogeneity under units") {
        auto r1 = make_ring(1);
        auto i = make_elem(r1, 0, 1);
        auto f4 = make_form(Family::quartic, 7);
        auto x = make_elem(r1, 3, -2), y = make_elem(r1, 1, 5);
        // i^4 = 1, so the quartic value is literally invariant
        CHECK(evaluate(f4, i * x, i * y) == evaluate(f4, x, y));

        auto r3 = make_ring(3);
        auto w = make_elem(r3, 0, 1); // sixth root of unity
        auto f6 = make_form(Family::sextic, 4);
        auto a = make_elem(r3, 2, -1), b = make_elem(r3, -1, 3);
        CHECK(evaluate(f6, w * a, w * b) == evaluate(f6, a, b));
        // quartic at m=3: the value scales by the unit w^4, so only norms agree
        auto v1 = evaluate(f4, w * a, w * b);
        auto f4v = evaluate(f4, a, b);
        CHECK(norm(v1) == norm(f4v));
        CHECK(v1 == w * w * w * w * f4v);
    }

    TEST_CASE("orbit invariance of the norm of the value") {
        std::mt19937 rng(13);
        std::uniform_int_distribution<long> coord(-7, 7);
        std::uniform_int_distribution<long> tpick(-15, 15);
        for (Family f : {Family::quartic, Family::sextic}) {
            for (long m : {1L, 2L, 3L, 7L}) {
                auto ring = make_ring(m);
                for (int rep = 0; rep < 40; ++rep) {
                    long t = tpick(rng);
                    if (parameter_excluded(f, t)) continue;
                    auto form = make_form(f, t);
                    SolutionPair p{make_elem(ring, coord(rng), coord(rng)),
                                   make_elem(ring, coord(rng), coord(rng))};
                    auto reference = norm(evaluate(form, p.x, p.y));
                    auto orb = orbit(f, p);
                    CHECK(orb.size() <= (f == Family::quartic ? 4u : 6u));
                    for (const auto& q : orb)
                        CHECK(norm(evaluate(form, q.x, q.y)) == reference);
                }
            }
        }
    }

    TEST_CASE("orbit contents on integer pairs") {
        using P = std::pair<Int, Int>;
        auto quartic = orbit(Family::quartic, Int(1), Int(2));
        CHECK(quartic == std::vector<P>{{Int(-2), Int(1)}, {Int(-1), Int(-2)},
                                        {Int(1), Int(2)}, {Int(2), Int(-1)}});
        auto sextic = orbit(Family::sextic, Int(1), Int(0));
        CHECK(sextic == std::vector<P>{{Int(-1), Int(0)}, {Int(-1), Int(1)},
                                       {Int(0), Int(-1)}, {Int(0), Int(1)},
                                       {Int(1), Int(-1)}, {Int(1), Int(0)}});
        auto fixed = orbit(Family::sextic, Int(0), Int(0));
        CHECK(fixed.size() == 1);
    }

    TEST_CASE("duality") {
        CHECK(dual_parameter(Family::quartic, 5) == -5);
        CHECK(dual_parameter(Family::quartic, -17) == 17);
        CHECK(dual_parameter(Family::sextic, 2) == -5);
        CHECK(dual_parameter(Family::sextic, -1) == -2);
        // the excluded sets are closed under the dual map, so valid t stays valid
        for (long t = -50; t <= 50; ++t) {
            for (Family f : {Family::quartic, Family::sextic}) {
                if (parameter_excluded(f, t)) continue;
                CHECK_FALSE(parameter_excluded(f, dual_parameter(f, t)));
            }
        }

        std::mt19937 rng(17);
        std::uniform_int_distribution<long> coord(-8, 8);
        auto ring = make_ring(7);
        for (Family f : {Family::quartic, Family::sextic}) {
            for (long t : {1L, 2L, 6L, 11L, -2L, -9L}) {
                if (parameter_excluded(f, t)) continue;
                auto form = make_form(f, t);
                auto dual = make_form(f, dual_parameter(f, t));
                for (int rep = 0; rep < 30; ++rep) {
                    auto x = make_elem(ring, coord(rng), coord(rng));
                    auto y = make_elem(ring, coord(rng), coord(rng));
                    CHECK(evaluate(form, x, y) == evaluate(dual, y, x));
                }
            }
        }
    }

    TEST_CASE("zero locus only at the origin on a box") {
        for (Family f : {Family::quartic, Family::sextic}) {
            for (long t : {-7L, -1L, 1L, 2L, 10L}) {
                if (parameter_excluded(f, t)) continue;
                auto form = make_form(f, t);
                for (long u = -12; u <= 12; ++u)
                    for (long v = -12; v <= 12; ++v) {
                        if (u == 0 && v == 0) continue;
                        CHECK(evaluate_int(form, Int(u), Int(v)) != 0);
                    }
            }
        }
    }

    TEST_CASE("sign normalization is total, idempotent, and sign-collapsing") {
        auto ring = make_ring(3);
        SolutionPair p{make_elem(ring, -1, 0), make_elem(ring, 2, -1)};
        auto n1 = normalize_sign(p);
        auto n2 = normalize_sign(SolutionPair{-p.x, -p.y});
        CHECK(n1 == n2);
        CHECK(normalize_sign(n1) == n1);
        // first nonzero component of (y1, y2, x1, x2) is positive
        auto [y1, y2] = coords_split(n1.y);
        CHECK(y1 > 0);

        std::vector<SolutionPair> both{p, SolutionPair{-p.x, -p.y}};
        CHECK(normalize_sign(both).size() == 1);
    }
}
