/*
 * Collared tiles for unbarred aperiodic substitutions: the order-3 tile
 * alphabet, the collared substitution and its projection intertwining, the
 * transient-tile scan, eigenvalue preservation, non-degeneracy, and numeric
 * patches with exact rational abutment.
 */

#include "helpers.hpp"

#include <invlim/closure.hpp>
#include <invlim/collar.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace invlim;
using testutil::abb;
using testutil::doubling;
using testutil::fib;
using testutil::folded;
using testutil::lazy;
using testutil::period_doubling;
using testutil::thue_morse;
using testutil::tribonacci;

namespace {

std::vector<Word> sorted_closure(const Substitution& s) {
    std::set<Word> cl = subword_closure(s, 3);
    return std::vector<Word>(cl.begin(), cl.end());
}

/* Direct scan: a tile is transient iff it never occurs in any collared image. */
std::vector<int> transient_oracle(const Substitution& chi_tilde) {
    std::vector<char> produced(static_cast<size_t>(chi_tilde.domain()) + 1, 0);
    for (int i = 1; i <= chi_tilde.domain(); ++i)
        for (Letter t : chi_tilde.image(i)) produced[static_cast<size_t>(t)] = 1;
    std::vector<int> out;
    for (int t = 1; t <= chi_tilde.domain(); ++t)
        if (!produced[static_cast<size_t>(t)]) out.push_back(t);
    return out;
}

} // namespace

// === non-degeneracy =========================================================

TEST_CASE("degeneracy is a bounded collapse onto one letter's powers", "[collar]") {
    CHECK(check_nondegenerate(fib()));
    CHECK(check_nondegenerate(period_doubling())); // chi(b) = aa is a different letter's power
    CHECK(check_nondegenerate(abb()));
    CHECK_FALSE(check_nondegenerate(doubling()));  // chi(a) = aa
    CHECK_FALSE(check_nondegenerate(Substitution::identity(2)));
}

// === the collared system ====================================================

TEST_CASE("the golden collar is pinned exactly", "[collar]") {
    CollaredSystem c = collar(fib());

    std::vector<Word> tiles{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {2, 1, 2}};
    CHECK(c.tiles == tiles);
    CHECK(c.base == fib());

    CHECK(c.chi_tilde.domain() == 4);
    CHECK(c.chi_tilde.image(1) == Word{4, 2});
    CHECK(c.chi_tilde.image(2) == Word{3});
    CHECK(c.chi_tilde.image(3) == Word{1, 2});
    CHECK(c.chi_tilde.image(4) == Word{1, 2});

    REQUIRE(c.projection.rows == 2);
    REQUIRE(c.projection.cols == 4);
    IntMatrix p(2, 4);
    p.at(0, 0) = 1;
    p.at(0, 2) = 1;
    p.at(0, 3) = 1;
    p.at(1, 1) = 1;
    CHECK(c.projection == p);

    CHECK(c.transient.empty());
    CHECK(collar_preserves_eigenvalue(c));
}

TEST_CASE("tile alphabets equal the order-3 closure on the corpus", "[collar]") {
    for (const Substitution& s :
         {fib(), abb(), period_doubling(), thue_morse(), tribonacci()}) {
        CollaredSystem c = collar(s);
        CHECK(c.tiles == sorted_closure(s));
        CHECK(std::is_sorted(c.tiles.begin(), c.tiles.end()));
    }
}

TEST_CASE("projection intertwines the collared and base matrices", "[collar]") {
    for (const Substitution& s :
         {fib(), abb(), period_doubling(), thue_morse(), tribonacci()}) {
        CollaredSystem c = collar(s);
        CHECK(mul(c.projection, abelianization(c.chi_tilde)) ==
              mul(abelianization(s), c.projection));
        CHECK(rank_over_q(c.projection) == s.domain());
        CHECK(c.transient == transient_oracle(c.chi_tilde));
        CHECK(collar_preserves_eigenvalue(c));
    }
}

TEST_CASE("corpus tile counts are pinned", "[collar]") {
    CHECK(collar(period_doubling()).tiles.size() == 5);
    CHECK(collar(abb()).tiles.size() == 6);
    CHECK(collar(thue_morse()).tiles.size() == 6);
    CHECK(collar(tribonacci()).tiles.size() == 7);
}

TEST_CASE("a one-letter degenerate base still collars consistently", "[collar]") {
    CollaredSystem c = collar(doubling());
    REQUIRE(c.tiles.size() == 1);
    CHECK(c.tiles[0] == Word{1, 1, 1});
    CHECK(c.chi_tilde.image(1) == Word{1, 1});
    CHECK(c.projection == IntMatrix::identity(1));
    CHECK(c.transient.empty());
    CHECK(collar_preserves_eigenvalue(c));
}

TEST_CASE("a reducible base exposes a transient tile", "[collar]") {
    CollaredSystem c = collar(lazy()); // a -> ab, b -> b
    std::vector<Word> tiles{{1, 2, 2}, {2, 2, 2}};
    CHECK(c.tiles == tiles);
    CHECK(c.chi_tilde.image(1) == Word{2});
    CHECK(c.chi_tilde.image(2) == Word{2});
    CHECK(c.transient == std::vector<int>{1});
    CHECK(c.transient == transient_oracle(c.chi_tilde));
    CHECK_THROWS_AS(collar_preserves_eigenvalue(c), InputError); // base not aperiodic
}

TEST_CASE("collar gates its input shape", "[collar]") {
    CHECK_THROWS_AS(collar(folded()), InputError);                   // barred image
    CHECK_THROWS_AS(collar(Substitution(3, {{1}, {2}})), InputError); // rectangular
}

// === patches ================================================================

TEST_CASE("the golden patch lays out the third inflation", "[collar]") {
    TilingPatch p = emit_patch(fib(), 1, 3);
    REQUIRE(p.tiles.size() == 5);

    Word layout = apply_word(power(fib(), 3), Word{1});
    for (size_t i = 0; i < p.tiles.size(); ++i)
        CHECK(p.tiles[i].prototile == layout[i]);

    CHECK(p.tiles[0].left == Rat(0));
    CHECK(p.tiles[0].length == Rat(1)); // the seed letter is pinned to unit length
    for (size_t i = 0; i + 1 < p.tiles.size(); ++i)
        CHECK(p.tiles[i].left + p.tiles[i].length == p.tiles[i + 1].left); // exact abutment

    // the second prototile's length approximates 1/golden = 0.618...
    CHECK(p.tiles[1].length > Rat(618033, 1000000));
    CHECK(p.tiles[1].length < Rat(618034, 1000000));
}

TEST_CASE("deeper golden patches stay exact and deterministic", "[collar]") {
    TilingPatch a = emit_patch(fib(), 1, 5);
    TilingPatch b = emit_patch(fib(), 1, 5);
    REQUIRE(a.tiles.size() == 13);
    REQUIRE(b.tiles.size() == 13);
    for (size_t i = 0; i < a.tiles.size(); ++i) {
        CHECK(a.tiles[i].prototile == b.tiles[i].prototile);
        CHECK(a.tiles[i].left == b.tiles[i].left);
        CHECK(a.tiles[i].length == b.tiles[i].length);
    }
    Rat total = a.tiles.back().left + a.tiles.back().length;
    CHECK(total > Rat(11090169, 1000000));
    CHECK(total < Rat(11090170, 1000000));
}

TEST_CASE("rational inflation factors settle to unit tiles", "[collar]") {
    TilingPatch p = emit_patch(doubling(), 1, 2);
    REQUIRE(p.tiles.size() == 4);
    for (size_t i = 0; i < p.tiles.size(); ++i) {
        CHECK(p.tiles[i].prototile == 1);
        CHECK(p.tiles[i].left == Rat(static_cast<int>(i)));
        CHECK(p.tiles[i].length == Rat(1));
    }
}

TEST_CASE("patch inputs are gated and capped", "[collar]") {
    CHECK_THROWS_AS(emit_patch(fib(), 0, 3), InputError);
    CHECK_THROWS_AS(emit_patch(fib(), 3, 3), InputError);
    CHECK_THROWS_AS(emit_patch(fib(), 1, -1), InputError);
    CHECK_THROWS_AS(emit_patch(fib(), 1, 3, 0), InputError);
    CHECK_THROWS_AS(emit_patch(lazy(), 1, 3), InputError); // not aperiodic
    CHECK_THROWS_AS(emit_patch(fib(), 1, 24), CapError);   // beyond the desk-scale budget
}
