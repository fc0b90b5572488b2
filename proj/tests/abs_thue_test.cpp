#include "relthue/abs_thue.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace relthue;

namespace {

// Independent reference: full double loop over the strip |v| <= v_cap with a
// u-range wide enough to contain every root direction at that height.
std::vector<IntPair> naive_strip(const ParamForm& form, const Int& d_max, long v_cap) {
    std::vector<IntPair> out;
    long span = 2 * std::abs(form.t) + 4; // exceeds the largest |root| for both families
    for (long v = -v_cap; v <= v_cap; ++v) {
        long u_cap = span * (std::abs(v) + 1) + 2;
        for (long u = -u_cap; u <= u_cap; ++u) {
            if (u == 0 && v == 0) continue;
            if (abs(evaluate_int(form, Int(u), Int(v))) <= d_max)
                out.push_back(IntPair{Int(u), Int(v)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool contains(const std::vector<IntPair>& pairs, long u, long v) {
    return std::find(pairs.begin(), pairs.end(), IntPair{Int(u), Int(v)}) != pairs.end();
}

} // namespace

TEST_SUITE("abs_thue") {

    TEST_CASE("argument validation") {
        auto form = make_form(Family::quartic, 5);
        CHECK_THROWS_AS(brute_box(form, Int(0), Int(10)), std::invalid_argument);
        CHECK_THROWS_AS(brute_box(form, Int(1), Int(0)), std::invalid_argument);
    }

    TEST_CASE("unit-level solutions of the quartic family") {
        auto list = brute_box(make_form(Family::quartic, 5), Int(1), Int(1000));
        CHECK(list.completeness == Completeness::box_bounded);
        CHECK(list.pairs.size() == 4);
        CHECK(contains(list.pairs, 0, 1));
        CHECK(contains(list.pairs, 0, -1));
        CHECK(contains(list.pairs, 1, 0));
        CHECK(contains(list.pairs, -1, 0));
        CHECK_FALSE(contains(list.pairs, 0, 0)); // origin excluded throughout

        // exceptional parameters pick up one extra orbit
        auto t1 = brute_box(make_form(Family::quartic, 1), Int(1), Int(1000));
        CHECK(t1.pairs.size() == 8);
        CHECK(contains(t1.pairs, 1, 2));
        CHECK(contains(t1.pairs, 2, -1));
        auto t4 = brute_box(make_form(Family::quartic, 4), Int(1), Int(1000));
        CHECK(t4.pairs.size() == 8);
        CHECK(contains(t4.pairs, 2, 3));
        CHECK(contains(t4.pairs, 3, -2));
    }

    TEST_CASE("unit-level solutions of the sextic family") {
        for (long t : {-1L, 1L, 2L, 17L, 89L}) {
            auto list = brute_box(make_form(Family::sextic, t), Int(1), Int(1000));
            CHECK(list.pairs.size() == 6); // one six-element orbit
            CHECK(contains(list.pairs, 0, 1));
            CHECK(contains(list.pairs, 1, -1));
            CHECK(contains(list.pairs, -1, 1));
            CHECK(contains(list.pairs, 1, 0));
        }
    }

    TEST_CASE("second coordinates stay tiny for the sextic small-parameter sweep") {
        // Resolution fact used by the m = 3 (mod 4) case analysis: every
        // solution of |F| <= 4 at small positive t has |v| <= 1.
        for (long t : {1L, 2L, 3L, 10L}) {
            auto list = brute_box(make_form(Family::sextic, t), Int(4), Int(1000));
            for (const auto& p : list.pairs) CHECK(abs(p.v) <= 1);
        }
    }

    TEST_CASE("pruned search equals the naive strip scan") {
        std::mt19937 rng(31);
        std::uniform_int_distribution<long> tpick(-12, 12);
        std::uniform_int_distribution<long> dpick(1, 20);
        for (Family f : {Family::quartic, Family::sextic}) {
            int done = 0;
            while (done < 6) {
                long t = tpick(rng);
                if (parameter_excluded(f, t)) continue;
                ++done;
                Int d(dpick(rng));
                auto form = make_form(f, t);
                auto pruned = brute_box(form, d, Int(60));
                CHECK(pruned.pairs == naive_strip(form, d, 60));
            }
        }
    }

    TEST_CASE("every emitted pair satisfies the inequality exactly") {
        auto form = make_form(Family::quartic, 58);
        auto list = brute_box(form, Int(355), Int(1000));
        CHECK(!list.pairs.empty());
        for (const auto& p : list.pairs)
            CHECK(abs(evaluate_int(form, p.u, p.v)) <= 355);
        CHECK_FALSE(contains(list.pairs, 0, 0));
        // negation closure
        for (const auto& p : list.pairs) {
            IntPair neg{-p.u, -p.v};
            CHECK(std::binary_search(list.pairs.begin(), list.pairs.end(), neg));
        }
    }

    TEST_CASE("table coverage boundaries") {
        CHECK(known_abs_solutions(Family::quartic, 5, Int(1)).has_value());
        CHECK_FALSE(known_abs_solutions(Family::quartic, 5, Int(2)).has_value());
        CHECK(known_abs_solutions(Family::quartic, 58, Int(6 * 58 + 7)).has_value());
        CHECK_FALSE(known_abs_solutions(Family::quartic, 58, Int(6 * 58 + 8)).has_value());
        CHECK_FALSE(known_abs_solutions(Family::quartic, 57, Int(38)).has_value());
        CHECK(known_abs_solutions(Family::sextic, -1, Int(1)).has_value());
        CHECK(known_abs_solutions(Family::sextic, 89, Int(120 * 89 + 323)).has_value());
        CHECK_FALSE(known_abs_solutions(Family::sextic, 88, Int(2)).has_value());
        CHECK_FALSE(known_abs_solutions(Family::quartic, 0, Int(1)).has_value());
    }

    TEST_CASE("tables are proof backed and boxes agree with them") {
        for (long t : {1L, 5L, 58L, 100L}) {
            auto table = known_abs_solutions(Family::quartic, t, Int(1));
            REQUIRE(table.has_value());
            CHECK(table->completeness == Completeness::proof_backed);
            auto box = brute_box(make_form(Family::quartic, t), Int(1), Int(1000));
            CHECK(table->pairs == box.pairs);
        }
        for (long t : {-1L, 2L, 89L, 120L}) {
            auto table = known_abs_solutions(Family::sextic, t, Int(1));
            REQUIRE(table.has_value());
            auto box = brute_box(make_form(Family::sextic, t), Int(1), Int(1000));
            CHECK(table->pairs == box.pairs);
        }
    }

    TEST_CASE("large-parameter tables absorb scalar multiples") {
        auto table = known_abs_solutions(Family::quartic, 58, Int(38));
        REQUIRE(table.has_value());
        CHECK(contains(table->pairs, 0, 2)); // 2^4 * F(0,1) = 16 <= 38
        CHECK(contains(table->pairs, 2, 0));
        CHECK_FALSE(contains(table->pairs, 0, 3)); // 81 > 38
        CHECK(contains(table->pairs, 1, 1));       // |F(1,1)| = 4
        CHECK_FALSE(contains(table->pairs, 1, 2)); // |F(1,2)| = 6t - 7 = 341 > 38
        auto form = make_form(Family::quartic, 58);
        for (const auto& p : table->pairs)
            CHECK(abs(evaluate_int(form, p.u, p.v)) <= 38);

        auto big = known_abs_solutions(Family::quartic, 58, Int(343));
        REQUIRE(big.has_value());
        CHECK(contains(big->pairs, 0, 4)); // 256 <= 343
        CHECK(contains(big->pairs, 1, 2)); // 341 <= 343
        CHECK_FALSE(contains(big->pairs, -1, 2)); // |-6t - 7| = 355 > 343
    }

    TEST_CASE("expand_scalings grows primitive lists exactly up to the cap") {
        auto base = known_abs_solutions(Family::sextic, 89, Int(1));
        REQUIRE(base.has_value());
        auto grown = expand_scalings(*base, Int(988));
        CHECK(contains(grown.pairs, 0, 3)); // 3^6 = 729 <= 988
        CHECK_FALSE(contains(grown.pairs, 0, 4));
        auto form = make_form(Family::sextic, 89);
        for (const auto& p : grown.pairs)
            CHECK(abs(evaluate_int(form, p.u, p.v)) <= 988);
    }
}
