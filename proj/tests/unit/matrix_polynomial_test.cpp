/*
 * Integer matrices and integer/rational polynomials.  The characteristic
 * polynomial is checked against an independent Leibniz-expansion oracle on a
 * seeded stream of random matrices; aperiodicity, determinants, rank, and
 * the polynomial toolbox (gcd, squarefree parts, Yun decomposition, exact
 * division) are pinned on known values and reconstruction laws.
 */

#include "helpers.hpp"

#include <invlim/matrix.hpp>
#include <invlim/numeric.hpp>
#include <invlim/polynomial.hpp>
#include <invlim/substitution.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace invlim;
using testutil::fib;

// === oracles ================================================================

namespace {

/* det(xI - A) as a Leibniz sum over all permutations; independent of the
 * division-free algorithm under test. */
Poly charpoly_oracle(const IntMatrix& A) {
    const int n = A.rows;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Poly total = Poly::zero();
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
        Poly term = Poly::constant(1);
        for (int i = 0; i < n; ++i) {
            int j = perm[static_cast<size_t>(i)];
            Poly entry = (i == j) ? Poly({-A.at(i, j), 1}) : Poly::constant(-A.at(i, j));
            term = mul(term, entry);
        }
        if (inversions % 2 == 1) term = neg(term);
        total = add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

IntMatrix random_matrix(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> entry(lo, hi);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    return m;
}

} // namespace

// === matrices ===============================================================

TEST_CASE("matrix arithmetic basics", "[matrix]") {
    IntMatrix a = abelianization(fib());
    CHECK(mul(a, IntMatrix::identity(2)) == a);
    CHECK(mul(IntMatrix::identity(2), a) == a);
    CHECK(pow(a, 0) == IntMatrix::identity(2));
    CHECK(pow(a, 3) == mul(a, mul(a, a)));
    IntMatrix at = transpose(a);
    CHECK(at.at(0, 1) == a.at(1, 0));
    CHECK(transpose(at) == a);
    CHECK_THROWS_AS(IntMatrix(0, 2), InputError);
    CHECK_THROWS_AS(mul(a, IntMatrix(3, 2)), InputError);
    CHECK(is_nonnegative(a));
    IntMatrix neg(1, 1);
    neg.at(0, 0) = -1;
    CHECK_FALSE(is_nonnegative(neg));
    CHECK(max_entry(pow(a, 5)).convert_to<int>() == 8);
}

TEST_CASE("characteristic polynomial matches the Leibniz oracle", "[matrix]") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> size(1, 5);
    for (int it = 0; it < 120; ++it) {
        IntMatrix m = random_matrix(rng, size(rng), -4, 4);
        CHECK(char_poly(m) == charpoly_oracle(m));
    }
    CHECK(char_poly(abelianization(fib())) == Poly({-1, -1, 1}));
}

TEST_CASE("determinant agrees with the characteristic polynomial at zero", "[matrix]") {
    std::mt19937 rng(555);
    for (int it = 0; it < 60; ++it) {
        std::uniform_int_distribution<int> size(1, 4);
        int n = size(rng);
        IntMatrix m = random_matrix(rng, n, -5, 5);
        Int constant = char_poly(m).coeff(0); // det(-A) = (-1)^n det(A)
        Int d = det(m);
        CHECK(constant == (n % 2 == 0 ? d : Int(-d)));
    }
    CHECK(det(abelianization(fib())) == -1);
    CHECK(det(IntMatrix::identity(4)) == 1);
}

TEST_CASE("rational rank detects dependent rows", "[matrix]") {
    CHECK(rank_over_q(IntMatrix::identity(3)) == 3);
    IntMatrix dep(2, 2);
    dep.at(0, 0) = 1;
    dep.at(0, 1) = 2;
    dep.at(1, 0) = 2;
    dep.at(1, 1) = 4;
    CHECK(rank_over_q(dep) == 1);
    CHECK(rank_over_q(IntMatrix(2, 3)) == 0);
}

TEST_CASE("aperiodicity via eventual positivity", "[matrix]") {
    CHECK(is_aperiodic(abelianization(fib())));
    CHECK(is_aperiodic(abelianization(testutil::thue_morse())));
    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK(is_aperiodic(two));
    IntMatrix one(1, 1);
    one.at(0, 0) = 1;
    CHECK(is_aperiodic(one)); // [1] is positive already
    CHECK_FALSE(is_aperiodic(IntMatrix::identity(2)));
    IntMatrix swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    CHECK_FALSE(is_aperiodic(swap)); // period-two permutation
    IntMatrix tri(2, 2);
    tri.at(0, 0) = 1;
    tri.at(0, 1) = 1;
    tri.at(1, 1) = 1;
    CHECK_FALSE(is_aperiodic(tri)); // reducible upper-triangular
}

// === integer polynomials ====================================================

TEST_CASE("polynomial arithmetic and evaluation", "[polynomial]") {
    Poly p({-1, -1, 1}); // x^2 - x - 1
    CHECK(p.degree() == 2);
    CHECK(eval(p, Int(3)) == 5);
    CHECK(eval(p, Rat(1, 2)) == Rat(-5, 4));
    CHECK(sign_at(p, Rat(2)) > 0);
    CHECK(sign_at(p, Rat(1)) < 0);
    CHECK(derivative(p) == Poly({-1, 2}));
    CHECK(add(p, neg(p)).is_zero());
    CHECK(mul(Poly({1, 1}), Poly({-1, 1})) == Poly({-1, 0, 1}));
    CHECK(Poly({0, 0}).is_zero()); // trailing zeros trimmed
    CHECK(scale(p, Int(3)) == Poly({-3, -3, 3}));
}

TEST_CASE("content, primitive part, and normalization", "[polynomial]") {
    Poly p({-6, 0, 4});
    CHECK(content(p) == 2);
    CHECK(primitive_part(p) == Poly({-3, 0, 2}));
    CHECK(normalized(Poly({2, 0, -4})) == Poly({-1, 0, 2})); // positive leading coefficient
}

TEST_CASE("gcd over Z finds the common primitive factor", "[polynomial]") {
    Poly a = mul(Poly({-1, 1}), Poly({2, 1}));  // (x-1)(x+2)
    Poly b = mul(Poly({-1, 1}), Poly({3, 1}));  // (x-1)(x+3)
    CHECK(gcd(a, b) == Poly({-1, 1}));
    CHECK(gcd(a, Poly::zero()) == normalized(a));
    CHECK(gcd(scale(a, Int(6)), scale(b, Int(10))) == Poly({-1, 1}));
}

TEST_CASE("squarefree part and Yun decomposition reconstruct the input", "[polynomial]") {
    Poly sq = mul(mul(Poly({-1, 1}), Poly({-1, 1})), Poly({2, 1})); // (x-1)^2 (x+2)
    Poly sf = squarefree(sq);
    CHECK(sf.degree() == 2);
    CHECK(divides(sf, sq));
    CHECK(gcd(sf, derivative(sf)).degree() == 0);

    auto parts = yun_decomposition(sq);
    Poly rebuilt = Poly::constant(1);
    for (const auto& [part, mult] : parts) {
        CHECK(gcd(part, derivative(part)).degree() == 0); // each part squarefree
        for (int i = 0; i < mult; ++i) rebuilt = mul(rebuilt, part);
    }
    CHECK(normalized(rebuilt) == normalized(sq));
}

TEST_CASE("exact division and divisibility", "[polynomial]") {
    Poly prod = mul(Poly({-1, -1, 1}), Poly({5, 1}));
    CHECK(exact_div(prod, Poly({5, 1})) == Poly({-1, -1, 1}));
    CHECK(divides(Poly({-1, -1, 1}), prod));
    CHECK_FALSE(divides(Poly({1, 1}), prod));
}

TEST_CASE("polynomial display uses caret powers and signed terms", "[polynomial]") {
    CHECK(poly_to_string(Poly({-1, -1, 1})) == "x^2 - x - 1");
    CHECK(poly_to_string(Poly({-2, 1})) == "x - 2");
    CHECK(poly_to_string(Poly({1, -3, 1})) == "x^2 - 3x + 1");
    CHECK(poly_to_string(Poly::zero()) == "0");
    CHECK(poly_to_string(Poly({0, 0, -2})) == "-2x^2");
    CHECK(poly_to_string(Poly({-1, -1, 1}), "s") == "s^2 - s - 1");
}

// === rational polynomials ===================================================

TEST_CASE("rational polynomial division leaves a small remainder", "[polynomial]") {
    QPoly a(std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(1)}); // x^3 + 1
    QPoly b(std::vector<Rat>{Rat(-1), Rat(1)});                // x - 1
    auto [q, r] = divmod(a, b);
    CHECK(r.degree() < b.degree());
    CHECK(add(mul(q, b), r) == a);
    CHECK(eval(r, Rat(0)) == Rat(2)); // remainder of x^3+1 at x=1
    CHECK(mod(a, b) == r);
}

TEST_CASE("primitive integer image of a rational polynomial", "[polynomial]") {
    QPoly half(std::vector<Rat>{Rat(1, 2), Rat(0), Rat(-1, 3)});
    Poly p = to_primitive_poly(half);
    CHECK(p == Poly({-3, 0, 2})); // positive leading coefficient, cleared denominators
    Poly ps = to_primitive_poly_signed(half);
    CHECK(ps == Poly({3, 0, -2})); // sign of the input preserved
}

// === exact numerics =========================================================

TEST_CASE("rational helpers normalize signs and round down", "[numeric]") {
    CHECK(make_rat(Int(1), Int(-2)) == Rat(-1, 2));
    CHECK(make_rat(Int(-3), Int(-6)) == Rat(1, 2));
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), InternalError);
    CHECK(pow2(-3) == Rat(1, 8));
    CHECK(pow2(4) == Rat(16));
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_ceil(Rat(-7, 2)) == -3);
    CHECK(decimal_string(Rat(1, 3), 5) == "0.33333");
    CHECK(decimal_string(Rat(-1, 3), 5) == "-0.33334"); // floor semantics
    CHECK(decimal_string(Rat(5), 0) == "5");
    CHECK(decimal_string(Rat(1618, 1000), 3) == "1.618");
}

TEST_CASE("interval arithmetic brackets all sign combinations", "[numeric]") {
    QInterval a(Rat(-2), Rat(3));
    QInterval b(Rat(-1), Rat(4));
    QInterval prod = imul(a, b);
    CHECK(prod.lo == Rat(-8)); // -2 * 4
    CHECK(prod.hi == Rat(12)); // 3 * 4
    QInterval sq = ipow(QInterval(Rat(-2), Rat(1)), 2);
    CHECK(sq.lo <= Rat(0)); // sound enclosure of the true range [0, 4] ...
    CHECK(sq.hi >= Rat(4));
    CHECK(sq.hi <= Rat(4)); // ... with the exact upper product
    CHECK(ipow(QInterval(Rat(2), Rat(3)), 3).lo == Rat(8));
    CHECK(iadd(a, b).lo == Rat(-3));
    CHECK(isub(a, b).hi == Rat(4));
    CHECK(disjoint(QInterval(Rat(0), Rat(1)), QInterval(Rat(2), Rat(3))));
    CHECK_FALSE(disjoint(a, b));
    CHECK_THROWS_AS(QInterval(Rat(1), Rat(0)), InternalError);
}
