#pragma once

/*
 * Shared fixtures for the unit suite: the small corpus of substitutions the
 * tests exercise repeatedly, plus tiny string helpers.  Every fixture is a
 * function (not a global) so each test gets a fresh value.
 */

#include <invlim/substitution.hpp>

#include <string>

namespace testutil {

/* a -> ab, b -> a; golden-ratio inflation. */
inline invlim::Substitution fib() { return invlim::Substitution(2, {{1, 2}, {1}}); }

/* a -> aab, b -> a; silver-ratio inflation (1 + sqrt 2). */
inline invlim::Substitution silver() { return invlim::Substitution(2, {{1, 1, 2}, {1}}); }

/* a -> abb, b -> a. */
inline invlim::Substitution abb() { return invlim::Substitution(2, {{1, 2, 2}, {1}}); }

/* a -> ab, b -> aa; period doubling. */
inline invlim::Substitution period_doubling() { return invlim::Substitution(2, {{1, 2}, {1, 1}}); }

/* a -> ab, b -> ba; Thue-Morse. */
inline invlim::Substitution thue_morse() { return invlim::Substitution(2, {{1, 2}, {2, 1}}); }

/* a -> ab, b -> ac, c -> a; tribonacci. */
inline invlim::Substitution tribonacci() {
    return invlim::Substitution(3, {{1, 2}, {1, 3}, {1}});
}

/* a -> aa on one circle; doubling with rational inflation factor 2. */
inline invlim::Substitution doubling() { return invlim::Substitution(1, {{1, 1}}); }

/* a -> a abar; folds at the wedge point. */
inline invlim::Substitution folded() { return invlim::Substitution(1, {{1, -1}}); }

/* a -> b abar, b -> ba; a barred pair with aperiodic abelianization. */
inline invlim::Substitution twisted() { return invlim::Substitution(2, {{2, -1}, {2, 1}}); }

/* a -> ab, b -> b; square and unbarred but not aperiodic. */
inline invlim::Substitution lazy() { return invlim::Substitution(2, {{1, 2}, {2}}); }

inline bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace testutil
