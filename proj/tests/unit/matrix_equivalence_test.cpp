/*
 * Abelianized weak equivalence on nonnegative integer matrices: exact
 * verification, the deterministic least-certificate search, the power-trap
 * pair ([2] vs [3]) with an exhaustive impossibility oracle, and the
 * invariant that word-level certificates abelianize to matrix certificates.
 */

#include "helpers.hpp"

#include <invlim/matrix_equivalence.hpp>
#include <invlim/weak_equivalence.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace invlim;
using testutil::fib;

namespace {

IntMatrix scalar(int v) {
    IntMatrix m(1, 1);
    m.at(0, 0) = v;
    return m;
}

bool recheck(const IntMatrix& A, const IntMatrix& B, const MatrixWeakEquivCertificate& c) {
    return mul(c.S, c.T) == pow(A, static_cast<unsigned>(c.n_exp)) &&
           mul(c.T, c.S) == pow(B, static_cast<unsigned>(c.m_exp));
}

} // namespace

// === verification ===========================================================

TEST_CASE("matrix certificates verify exactly", "[matequiv]") {
    IntMatrix A = abelianization(fib());
    IntMatrix B = abelianization(power(fib(), 2));
    MatrixWeakEquivCertificate c{A, A, 2, 1};
    CHECK(matrix_verify(A, B, c));
    CHECK(recheck(A, B, c));
    CHECK_FALSE(matrix_verify(A, B, {A, A, 1, 1}));
    CHECK_FALSE(matrix_verify(A, B, {A, IntMatrix::identity(2), 2, 1}));
}

TEST_CASE("malformed matrix certificates are rejected", "[matequiv]") {
    IntMatrix A = abelianization(fib());
    CHECK_THROWS_AS(matrix_verify(A, A, {A, A, 0, 1}), InputError);
    CHECK_THROWS_AS(matrix_verify(A, A, {IntMatrix(3, 2), A, 1, 1}), InputError);
    CHECK_THROWS_AS(matrix_verify(scalar(-1), scalar(1), {scalar(1), scalar(1), 1, 1}),
                    InputError);

    // negative certificate entries are an invalid witness, not an error
    IntMatrix negS(2, 2);
    negS.at(0, 0) = -1;
    CHECK_FALSE(matrix_verify(A, A, {negS, A, 1, 1}));
}

// === search =================================================================

TEST_CASE("the self-pair search returns the least matrix certificate", "[matequiv]") {
    IntMatrix A = abelianization(fib());
    auto c = matrix_search(A, A);
    REQUIRE(c.has_value());
    CHECK(c->S == A);
    CHECK(c->T == IntMatrix::identity(2));
    CHECK(c->n_exp == 1);
    CHECK(c->m_exp == 1);
    CHECK(recheck(A, A, *c));
}

TEST_CASE("the golden matrix and its square admit a (2, 1) certificate", "[matequiv]") {
    IntMatrix A = abelianization(fib());
    IntMatrix B = abelianization(power(fib(), 2));
    auto c = matrix_search(A, B);
    REQUIRE(c.has_value());
    CHECK(c->S == A);
    CHECK(c->T == A);
    CHECK(c->n_exp == 2);
    CHECK(c->m_exp == 1);
    CHECK(recheck(A, B, *c));
}

TEST_CASE("word-level certificates abelianize to matrix certificates", "[matequiv]") {
    Substitution chi = fib();
    Substitution psi = power(fib(), 2);
    auto word_cert = search_certificate(chi, psi);
    REQUIRE(word_cert.has_value());
    MatrixWeakEquivCertificate mc{abelianization(word_cert->sigma),
                                  abelianization(word_cert->tau), word_cert->n_exp,
                                  word_cert->m_exp};
    CHECK(matrix_verify(abelianization(chi), abelianization(psi), mc));
}

TEST_CASE("powers of two and three never coincide within the bound", "[matequiv]") {
    // exhaustive oracle: 2^n = 3^m is impossible for 1 <= n, m <= 6
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 1; m <= 6; ++m)
            REQUIRE(pow_int(Int(2), n) != pow_int(Int(3), m));

    SearchBounds wide;
    wide.max_n = 6;
    wide.max_m = 6;
    CHECK_FALSE(matrix_search(scalar(2), scalar(3), wide).has_value());
    CHECK_FALSE(matrix_search(scalar(3), scalar(2), wide).has_value());
}

TEST_CASE("scalar pairs with a common power are certified", "[matequiv]") {
    // 4^1 = 2^2: S T = 4, T S = 2^2 with S = 4, T = 1 or S = 2, T = 2
    auto c = matrix_search(scalar(4), scalar(2));
    REQUIRE(c.has_value());
    CHECK(recheck(scalar(4), scalar(2), *c));
    CHECK(c->n_exp == 1);
    CHECK(c->m_exp == 2);
}

TEST_CASE("the matrix search is deterministic and input-checked", "[matequiv]") {
    IntMatrix A = abelianization(fib());
    auto a = matrix_search(A, A);
    auto b = matrix_search(A, A);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->S == b->S);
    CHECK(a->T == b->T);

    CHECK_THROWS_AS(matrix_search(IntMatrix(2, 3), A), InputError);
    CHECK_THROWS_AS(matrix_search(scalar(-2), scalar(2)), InputError);
    SearchBounds bad;
    bad.max_m = 0;
    CHECK_THROWS_AS(matrix_search(A, A, bad), InputError);
}

// === order keys =============================================================

TEST_CASE("flattening and entry sums expose the tie-break keys", "[matequiv]") {
    IntMatrix A = abelianization(fib());
    CHECK(detail::flatten_matrix(A) == std::vector<Int>{1, 1, 1, 0});
    CHECK(detail::entry_sum(A) == 3);

    MatrixWeakEquivCertificate self{A, IntMatrix::identity(2), 1, 1};
    MatrixWeakEquivCertificate mirror{IntMatrix::identity(2), A, 1, 1};
    CHECK(matrix_certificate_less(self, mirror));
    CHECK_FALSE(matrix_certificate_less(mirror, self));
}
