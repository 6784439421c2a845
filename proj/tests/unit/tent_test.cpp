/*
 * Tent maps with periodic critical orbits: kneading validation, the twisted
 * itinerary order, orbit ranks, the induced wedge substitution, exact slope
 * extraction, interval verification, and the admissible-word enumeration —
 * the last checked against a brute-force oracle that tries every candidate
 * word of each period.
 */

#include "helpers.hpp"

#include <invlim/germs.hpp>
#include <invlim/tent.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

using namespace invlim;

// === validation =============================================================

TEST_CASE("kneading words are gated by symbol set and period range", "[tent]") {
    CHECK_NOTHROW(detail::validate_kneading("RL"));
    CHECK_THROWS_AS(detail::validate_kneading("RX"), InputError);
    CHECK_THROWS_AS(detail::validate_kneading("rl"), InputError);
    CHECK_THROWS_AS(detail::validate_kneading("R"), InputError);          // period 2
    CHECK_THROWS_AS(detail::validate_kneading(""), InputError);           // period 1
    CHECK_NOTHROW(detail::validate_kneading("RLLLLLLLLLL"));               // period 12
    CHECK_THROWS_AS(detail::validate_kneading("RLLLLLLLLLLL"), CapError);  // period 13
}

// === itinerary order ========================================================

TEST_CASE("the twisted itinerary order matches the slope order", "[tent]") {
    // within one period, enumeration order equals ascending slope
    CHECK(unimodal_less("RLRR", "RLLR"));
    CHECK(unimodal_less("RLLR", "RLLL"));
    CHECK(unimodal_less("RLRRR", "RLLRR"));
    CHECK(unimodal_less("RLLRR", "RLLLR"));
    CHECK(unimodal_less("RLLLR", "RLLLL"));
    CHECK_FALSE(unimodal_less("RLLL", "RLRR"));
    CHECK(unimodal_compare("RL", "RL") == 0);
    CHECK(unimodal_compare("RLRR", "RLLR") == -unimodal_compare("RLLR", "RLRR"));
}

TEST_CASE("itineraries of orbit steps", "[tent]") {
    CHECK(detail::step_itinerary("RL", 0) == "C");
    CHECK(detail::step_itinerary("RL", 1) == "RLC");
    CHECK(detail::step_itinerary("RL", 2) == "LC");
}

TEST_CASE("orbit ranks place the image of the critical point at the top", "[tent]") {
    CHECK(detail::orbit_ranks("RL") == std::vector<int>{1, 2, 0});
    for (const std::string& w : enumerate_kneading(7)) {
        std::vector<int> ranks = detail::orbit_ranks(w);
        int period = static_cast<int>(w.size()) + 1;
        REQUIRE(static_cast<int>(ranks.size()) == period);
        std::vector<int> sorted = ranks;
        std::sort(sorted.begin(), sorted.end());
        for (int k = 0; k < period; ++k) CHECK(sorted[static_cast<size_t>(k)] == k);
        CHECK(ranks[1] == period - 1); // T(c) is the orbit maximum
        CHECK(ranks[2] == 0);          // T^2(c) is the orbit minimum
    }
}

// === models =================================================================

TEST_CASE("the golden tent model is pinned exactly", "[tent]") {
    TentModel m = build_tent_model("RL");
    CHECK(m.period == 3);
    CHECK(m.chi.domain() == 2);
    CHECK(m.chi.image(1) == Word{2});
    CHECK(m.chi.image(2) == Word{-2, -1});
    CHECK(m.slope.minpoly == Poly({-1, -1, 1}));
    CHECK(verify_tent_model(m));
}

TEST_CASE("slopes satisfy the closing polynomial of their word", "[tent]") {
    for (const std::string& w : enumerate_kneading(6)) {
        TentModel m = build_tent_model(w);
        CHECK(divides(m.slope.minpoly, closing_polynomial(w)));
    }
}

TEST_CASE("every enumerated model passes the interval gate", "[tent]") {
    for (const std::string& w : enumerate_kneading(8)) {
        TentModel m = build_tent_model(w);
        CHECK(verify_tent_model(m, 64));
        CHECK(compare_to_rational(m.slope, Rat(1)) > 0);
        CHECK(compare_to_rational(m.slope, Rat(2)) <= 0);
        CHECK(eventual_range(m.chi).size() != 2);
    }
}

TEST_CASE("a tampered model fails verification", "[tent]") {
    TentModel m = build_tent_model("RL");
    TentModel other = build_tent_model("RLL");
    m.slope = other.slope;
    CHECK_FALSE(verify_tent_model(m));
}

TEST_CASE("inadmissible words are rejected at model construction", "[tent]") {
    CHECK_THROWS_AS(build_tent_model("RLLRL"), InputError);
    CHECK_THROWS_AS(build_tent_model("LR"), InputError); // must start right of center
    CHECK_THROWS_AS(build_tent_model("RR"), InputError); // fixed-point collision
}

// === enumeration ============================================================

TEST_CASE("enumeration up to period five is pinned exactly", "[tent]") {
    std::vector<std::string> expect{"RL", "RLL", "RLRR", "RLLR", "RLLL"};
    CHECK(enumerate_kneading(5) == expect);
    CHECK(enumerate_kneading(3) == std::vector<std::string>{"RL"});
    CHECK(enumerate_kneading(6).size() == 9);
    CHECK(enumerate_kneading(8).size() == 32);
    CHECK_THROWS_AS(enumerate_kneading(2), InputError);
    CHECK_THROWS_AS(enumerate_kneading(13), InputError);
}

TEST_CASE("enumeration matches the brute-force oracle", "[tent]") {
    // try every {L,R} word of each period; keep the ones that build and verify
    std::vector<std::string> oracle;
    for (int period = 3; period <= 7; ++period) {
        std::vector<std::string> level;
        int n = period - 1;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::string w;
            for (int k = 0; k < n; ++k) w += (mask >> k) & 1u ? 'R' : 'L';
            try {
                TentModel m = build_tent_model(w);
                if (verify_tent_model(m, 64)) level.push_back(w);
            } catch (const InputError&) {
                // inadmissible candidate
            }
        }
        std::sort(level.begin(), level.end(), unimodal_less);
        oracle.insert(oracle.end(), level.begin(), level.end());
    }
    CHECK(enumerate_kneading(7) == oracle);
}

TEST_CASE("slopes ascend strictly within each period", "[tent]") {
    std::map<int, std::vector<AlgebraicReal>> by_period;
    for (const std::string& w : enumerate_kneading(8))
        by_period[static_cast<int>(w.size()) + 1].push_back(build_tent_model(w).slope);
    for (const auto& [period, slopes] : by_period) {
        (void)period;
        for (size_t i = 0; i + 1 < slopes.size(); ++i)
            CHECK(compare(slopes[i], slopes[i + 1]) < 0);
    }
}

TEST_CASE("the renormalizable period-six word builds and verifies", "[tent]") {
    TentModel m = build_tent_model("RLRRR");
    CHECK(verify_tent_model(m, 64));
    // its slope is the golden ratio's square root: minpoly x^4 - x^3 - x^2 + ... stays irreducible
    CHECK(m.slope.degree() >= 2);
}
